#include "rydbench/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace rydbench {

double cost_value(const std::vector<std::uint8_t>& bits,
                  const DuggInstance& inst, const CostModel& cost) {
    const std::size_t n = inst.sites.size();
    if (bits.size() != n)
        throw std::invalid_argument("cost_value: bit vector length mismatch");
    if (!cost.linear_weights.empty() && cost.linear_weights.size() != n)
        throw std::invalid_argument("cost_value: linear weight length mismatch");
    if (!cost.pair_weights.empty() && cost.pair_weights.size() != inst.edges.size())
        throw std::invalid_argument("cost_value: pair weight length mismatch");

    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (bits[i])
            value += cost.linear_weights.empty() ? 1.0 : cost.linear_weights[i];
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& [i, j] = inst.edges[e];
        if (bits[i] && bits[j])
            value += cost.pair_weights.empty() ? -cost.penalty : cost.pair_weights[e];
    }
    return value;
}

RydbergTerms build_rydberg_terms(const DuggInstance& inst,
                                 const DeviceSpec& device, double cutoff_um) {
    if (inst.spacing_um < device.a_min_um)
        throw std::runtime_error("device constraint violation: spacing " +
                                 std::to_string(inst.spacing_um) + " um below " +
                                 device.name + " minimum " +
                                 std::to_string(device.a_min_um));
    if (inst.n_qubits() > device.max_atoms)
        throw std::runtime_error("device constraint violation: " +
                                 std::to_string(inst.n_qubits()) +
                                 " atoms exceed " + device.name + " capacity");

    if (cutoff_um <= 0.0)
        cutoff_um = 2.5 * inst.spacing_um;
    const double cutoff_sq = cutoff_um * cutoff_um;

    const auto pos = inst.positions_um();
    RydbergTerms terms;
    terms.n_qubits = inst.n_qubits();
    for (int i = 0; i < terms.n_qubits; ++i) {
        for (int j = i + 1; j < terms.n_qubits; ++j) {
            const double dx = pos[i].first - pos[j].first;
            const double dy = pos[i].second - pos[j].second;
            const double r_sq = dx * dx + dy * dy;
            if (r_sq > cutoff_sq)
                continue;
            terms.pairs.push_back({i, j, device.c6 / (r_sq * r_sq * r_sq)});
        }
    }
    return terms;
}

double diagonal_energy(const std::vector<std::uint8_t>& bits,
                       const RydbergTerms& terms, double delta) {
    if (static_cast<int>(bits.size()) != terms.n_qubits)
        throw std::invalid_argument("diagonal_energy: bit vector length mismatch");

    double energy = 0.0;
    for (std::uint8_t b : bits)
        if (b)
            energy -= delta;
    for (const auto& pair : terms.pairs)
        if (bits[pair.i] && bits[pair.j])
            energy += pair.v;
    return energy;
}

double interaction_energy(std::uint64_t mask, const RydbergTerms& terms) {
    double energy = 0.0;
    for (const auto& pair : terms.pairs)
        if (((mask >> pair.i) & 1ull) && ((mask >> pair.j) & 1ull))
            energy += pair.v;
    return energy;
}

std::vector<double> interaction_table(const RydbergTerms& terms) {
    const int n = terms.n_qubits;
    std::vector<double> row_sums(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& pair : terms.pairs) {
        row_sums[static_cast<std::size_t>(pair.i) * n + pair.j] = pair.v;
        row_sums[static_cast<std::size_t>(pair.j) * n + pair.i] = pair.v;
    }

    // table[z] = table[z without lowest bit] + sum of V between the lowest
    // bit and the remaining excited atoms.
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (std::uint64_t z = 1; z < table.size(); ++z) {
        const int low = std::countr_zero(z);
        const std::uint64_t rest = z & (z - 1);
        double cross = 0.0;
        const double* row = &row_sums[static_cast<std::size_t>(low) * n];
        for (std::uint64_t bits = rest; bits;) {
            const int j = std::countr_zero(bits);
            bits &= bits - 1;
            cross += row[j];
        }
        table[z] = table[rest] + cross;
    }
    return table;
}

} // namespace rydbench
