#include "rydbench/statevector.hpp"

#include <stdexcept>
#include <string>

#include "rydbench/kernels.hpp"

namespace rydbench {

StateVector StateVector::ground_state(int n_qubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("state vector needs at least one qubit");
    if (n_qubits > kMaxSimQubits)
        throw std::runtime_error("state vector cap exceeded: " +
                                 std::to_string(n_qubits) + " qubits > " +
                                 std::to_string(kMaxSimQubits));
    StateVector state;
    state.n_qubits = n_qubits;
    state.amps.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    state.amps[0] = {1.0, 0.0};
    return state;
}

double StateVector::norm_squared() const {
    return kernels::norm_squared(amps.data(), amps.size());
}

double StateVector::probability(std::uint64_t basis) const {
    const auto& a = amps[basis];
    return a.real() * a.real() + a.imag() * a.imag();
}

} // namespace rydbench
