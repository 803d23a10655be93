#pragma once

#include <cstdint>
#include <vector>

#include "rydbench/device.hpp"
#include "rydbench/instance.hpp"

namespace rydbench {

// Classical cost C(x) = sum_i w_i x_i + sum_(i,j) l_ij x_i x_j, maximized.
// Empty weight vectors mean w_i = 1 and l_ij = -penalty on every edge.
struct CostModel {
    double penalty = 2.0;    // must stay > 1 so violations never pay off
    std::vector<double> linear_weights;
    std::vector<double> pair_weights;    // parallel to instance.edges
};

// Pairwise van der Waals terms of the Rydberg Hamiltonian. Driving
// coefficients are supplied per step by the waveform, so only the geometry
// -dependent V_ij live here.
struct RydbergTerms {
    struct Pair {
        int i = 0;
        int j = 0;
        double v = 0.0;    // c6 / r^6, rad/us
    };

    int n_qubits = 0;
    std::vector<Pair> pairs;
};

double cost_value(const std::vector<std::uint8_t>& bits,
                  const DuggInstance& inst, const CostModel& cost);

// V_ij for every site pair within cutoff_um. cutoff_um <= 0 selects the
// default 2.5 * spacing, which keeps the next-nearest non-edge tails;
// pass a value >= the instance diameter for an uncut Hamiltonian.
// Throws when spacing < device a_min or the atom count exceeds the device.
RydbergTerms build_rydberg_terms(const DuggInstance& inst,
                                 const DeviceSpec& device,
                                 double cutoff_um = 0.0);

// -delta * popcount(bits) + sum of V_ij over doubly-excited stored pairs.
double diagonal_energy(const std::vector<std::uint8_t>& bits,
                       const RydbergTerms& terms, double delta);

// Interaction part only: sum of V_ij over pairs excited in the mask.
double interaction_energy(std::uint64_t mask, const RydbergTerms& terms);

// Dense 2^n table of interaction_energy, built in O(2^n * n).
std::vector<double> interaction_table(const RydbergTerms& terms);

} // namespace rydbench
