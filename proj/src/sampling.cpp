#include "rydbench/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rydbench/rng.hpp"

namespace rydbench {

int SampleSet::unflagged_count() const {
    int count = 0;
    for (const auto& group : shots)
        if (!group.flagged)
            count += group.count;
    return count;
}

SampleSet sample(const StateVector& state, int n_shots, std::uint64_t seed) {
    if (n_shots < 1)
        throw std::invalid_argument("sample: need at least one shot");
    if (std::abs(state.norm_squared() - 1.0) > 1e-8)
        throw std::invalid_argument("sample: state not normalized");

    // Cumulative distribution over basis states; draws map through a binary
    // search, so identical seeds give identical shot lists on every lane.
    std::vector<double> cdf(state.dim());
    double running = 0.0;
    for (std::size_t z = 0; z < state.dim(); ++z) {
        running += state.probability(z);
        cdf[z] = running;
    }
    const double total = running;

    Xoshiro256StarStar rng(seed);
    std::map<std::uint64_t, int> counts;
    for (int shot = 0; shot < n_shots; ++shot) {
        const double target = rng.next_double() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
        std::uint64_t z = static_cast<std::uint64_t>(it - cdf.begin());
        if (z >= state.dim())
            z = state.dim() - 1;
        ++counts[z];
    }

    SampleSet out;
    out.n_qubits = state.n_qubits;
    out.n_shots = n_shots;
    out.seed = seed;
    out.shots.reserve(counts.size());
    for (const auto& [bits, count] : counts)
        out.shots.push_back({bits, count, false});
    return out;
}

double estimate_fp(const SampleSet& samples, const DuggInstance& inst,
                   const CostModel& cost) {
    if (samples.n_shots < 1 || samples.shots.empty())
        throw std::invalid_argument("estimate_fp: empty sample set");

    double acc = 0.0;
    for (const auto& group : samples.shots) {
        const auto bits = bits_from_mask(group.bits, samples.n_qubits);
        acc += static_cast<double>(group.count) * cost_value(bits, inst, cost);
    }
    return acc / static_cast<double>(samples.n_shots);
}

} // namespace rydbench
