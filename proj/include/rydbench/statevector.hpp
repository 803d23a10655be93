#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace rydbench {

// Simulations refuse anything larger; generation-only instances above this
// are benchmarked by solvers, not by state-vector evolution.
inline constexpr int kMaxSimQubits = 30;

// Full 2^n amplitude register. Basis index bit i = 1 means atom i is in the
// Rydberg state.
struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amps;

    static StateVector ground_state(int n_qubits);

    std::size_t dim() const { return amps.size(); }
    double norm_squared() const;
    double probability(std::uint64_t basis) const;
};

} // namespace rydbench
