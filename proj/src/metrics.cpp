#include "rydbench/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "rydbench/rng.hpp"

namespace rydbench {

std::optional<double> approximation_ratio(const SampleSet& samples,
                                          const DuggInstance& inst,
                                          const CostModel& cost, double c_opt) {
    if (c_opt <= 0.0)
        throw std::invalid_argument("approximation_ratio: c_opt must be positive");

    double cost_sum = 0.0;
    long valid = 0;
    for (const auto& group : samples.shots) {
        if (group.flagged)
            continue;
        const auto bits = bits_from_mask(group.bits, samples.n_qubits);
        if (!is_independent(bits, inst))
            continue;
        cost_sum += static_cast<double>(group.count) * cost_value(bits, inst, cost);
        valid += group.count;
    }
    if (valid == 0)
        return std::nullopt;
    return cost_sum / static_cast<double>(valid) / c_opt;
}

double valid_fraction(const SampleSet& samples, const DuggInstance& inst) {
    long unflagged = 0, valid = 0;
    for (const auto& group : samples.shots) {
        if (group.flagged)
            continue;
        unflagged += group.count;
        if (is_independent_mask(group.bits, inst.edges))
            valid += group.count;
    }
    if (unflagged == 0)
        return 0.0;
    return static_cast<double>(valid) / static_cast<double>(unflagged);
}

double success_probability(const SampleSet& samples,
                           const std::vector<std::uint64_t>& optimal_set) {
    if (optimal_set.empty())
        throw std::invalid_argument("success_probability: empty optimal set");

    long unflagged = 0, hits = 0;
    for (const auto& group : samples.shots) {
        if (group.flagged)
            continue;
        unflagged += group.count;
        if (std::binary_search(optimal_set.begin(), optimal_set.end(), group.bits))
            hits += group.count;
    }
    if (unflagged == 0)
        return 0.0;
    return static_cast<double>(hits) / static_cast<double>(unflagged);
}

SampleSet apply_spam(const SampleSet& samples, const SpamParams& spam,
                     std::uint64_t seed) {
    Xoshiro256StarStar rng(seed);
    const int n = samples.n_qubits;

    // Every shot consumes the same number of draws (two per atom plus the
    // flag draw), so the stream stays aligned whatever the outcomes.
    std::map<std::pair<std::uint64_t, bool>, int> grouped;
    for (const auto& group : samples.shots) {
        for (int rep = 0; rep < group.count; ++rep) {
            std::uint64_t bits = group.bits;
            for (int atom = 0; atom < n; ++atom) {
                const double u_prep = rng.next_double();
                const double u_flip = rng.next_double();
                const std::uint64_t mask = 1ull << atom;
                bool one = (bits & mask) != 0;
                if (u_prep < spam.eta)
                    one = false;    // preparation fault reads out as ground
                if (one ? (u_flip < spam.eps_prime) : (u_flip < spam.eps))
                    one = !one;
                bits = one ? (bits | mask) : (bits & ~mask);
            }
            const bool flagged = group.flagged || rng.next_double() < spam.flag_prob;
            ++grouped[{bits, flagged}];
        }
    }

    SampleSet out;
    out.n_qubits = n;
    out.n_shots = samples.n_shots;
    out.seed = seed;
    out.shots.reserve(grouped.size());
    for (const auto& [key, count] : grouped)
        out.shots.push_back({key.first, count, key.second});
    return out;
}

SampleSet post_select(const SampleSet& samples) {
    SampleSet out;
    out.n_qubits = samples.n_qubits;
    out.seed = samples.seed;
    for (const auto& group : samples.shots) {
        if (group.flagged)
            continue;
        out.shots.push_back(group);
        out.n_shots += group.count;
    }
    return out;
}

MetricsReport score_samples(const SampleSet& samples, const DuggInstance& inst,
                            const CostModel& cost, double c_opt,
                            const std::vector<std::uint64_t>* optimal_set) {
    MetricsReport report;
    report.n_shots = samples.n_shots;
    report.c_opt = c_opt;
    report.c_worst = 0.0;

    double best = 0.0;
    long valid = 0;
    for (const auto& group : samples.shots) {
        if (group.flagged)
            continue;
        const auto bits = bits_from_mask(group.bits, samples.n_qubits);
        if (!is_independent(bits, inst))
            continue;
        valid += group.count;
        best = std::max(best, cost_value(bits, inst, cost));
    }
    report.n_valid = static_cast<int>(valid);
    report.has_valid = valid > 0;
    report.best_cost = report.has_valid ? best : 0.0;
    report.valid_fraction = valid_fraction(samples, inst);

    const auto ratio = approximation_ratio(samples, inst, cost, c_opt);
    report.approximation_ratio = ratio.value_or(0.0);

    if (optimal_set && !optimal_set->empty())
        report.success_probability = success_probability(samples, *optimal_set);
    else
        report.success_probability = std::numeric_limits<double>::quiet_NaN();
    return report;
}

double exact_valid_fraction(const StateVector& state, const DuggInstance& inst) {
    double acc = 0.0;
    for (std::uint64_t z = 0; z < state.dim(); ++z)
        if (is_independent_mask(z, inst.edges))
            acc += state.probability(z);
    return acc;
}

std::optional<double> exact_approximation_ratio(const StateVector& state,
                                                const DuggInstance& inst,
                                                double c_opt) {
    if (c_opt <= 0.0)
        throw std::invalid_argument("exact_approximation_ratio: c_opt must be positive");

    double weight = 0.0, cost_acc = 0.0;
    for (std::uint64_t z = 0; z < state.dim(); ++z) {
        if (!is_independent_mask(z, inst.edges))
            continue;
        const double p = state.probability(z);
        weight += p;
        cost_acc += p * static_cast<double>(std::popcount(z));
    }
    if (weight <= 0.0)
        return std::nullopt;
    return cost_acc / weight / c_opt;
}

double exact_success_probability(const StateVector& state,
                                 const std::vector<std::uint64_t>& optimal_set) {
    double acc = 0.0;
    for (std::uint64_t z : optimal_set)
        acc += state.probability(z);
    return acc;
}

} // namespace rydbench
