#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rydbench/hamiltonian.hpp"
#include "rydbench/instance.hpp"
#include "rydbench/sampling.hpp"
#include "rydbench/statevector.hpp"

namespace rydbench {

// Readout imperfection model: eta replaces an atom by a ground-state readout
// before the flip channel, eps flips 0 -> 1, eps_prime flips 1 -> 0, and
// flag_prob marks whole shots as faulty for later post-selection.
struct SpamParams {
    double eta = 0.0;
    double eps = 0.0;
    double eps_prime = 0.0;
    double flag_prob = 0.0;
};

struct MetricsReport {
    int n_shots = 0;
    int n_valid = 0;
    bool has_valid = false;    // distinguishes "no valid solutions" from r = 0
    double valid_fraction = 0.0;
    double approximation_ratio = 0.0;
    double success_probability = 0.0;
    double best_cost = 0.0;
    double c_opt = 0.0;
    double c_worst = 0.0;
};

// Mean C(x)/c_opt over valid, unflagged shots (C_worst = 0 convention).
// nullopt when no such shot exists.
std::optional<double> approximation_ratio(const SampleSet& samples,
                                          const DuggInstance& inst,
                                          const CostModel& cost, double c_opt);

// Fraction of unflagged shots that form independent sets.
double valid_fraction(const SampleSet& samples, const DuggInstance& inst);

// Fraction of unflagged shots landing in the optimal set.
double success_probability(const SampleSet& samples,
                           const std::vector<std::uint64_t>& optimal_set);

// Applies the SPAM channel shot by shot, atom by atom; deterministic in the
// seed. Flags accumulate on top of any existing ones.
SampleSet apply_spam(const SampleSet& samples, const SpamParams& spam,
                     std::uint64_t seed);

// Drops flagged shots.
SampleSet post_select(const SampleSet& samples);

// Full report over a sample set. optimal_set may be null when the exact
// optima are unknown (success_probability is then reported as NaN).
MetricsReport score_samples(const SampleSet& samples, const DuggInstance& inst,
                            const CostModel& cost, double c_opt,
                            const std::vector<std::uint64_t>* optimal_set);

// Distribution-level (zero sampling noise) counterparts, used by training
// and physics checks.
double exact_valid_fraction(const StateVector& state, const DuggInstance& inst);
std::optional<double> exact_approximation_ratio(const StateVector& state,
                                                const DuggInstance& inst,
                                                double c_opt);
double exact_success_probability(const StateVector& state,
                                 const std::vector<std::uint64_t>& optimal_set);

} // namespace rydbench
