#pragma once

#include <cstdint>
#include <vector>

#include "rydbench/hamiltonian.hpp"
#include "rydbench/statevector.hpp"

namespace rydbench {

// Measurement record, grouped by outcome. `flagged` marks shots the readout
// diagnostics reported as faulty; the sampler never sets it, the SPAM model
// does.
struct ShotGroup {
    std::uint64_t bits = 0;
    int count = 0;
    bool flagged = false;
};

struct SampleSet {
    int n_qubits = 0;
    int n_shots = 0;
    std::uint64_t seed = 0;
    std::vector<ShotGroup> shots;    // sorted by (bits, flagged)

    int unflagged_count() const;
};

// n_shots i.i.d. draws from |amp|^2, deterministic in the seed.
SampleSet sample(const StateVector& state, int n_shots, std::uint64_t seed);

// Sampled cost estimator: sum_i w_i C(x_i) / n_shots over all shots.
double estimate_fp(const SampleSet& samples, const DuggInstance& inst,
                   const CostModel& cost);

} // namespace rydbench
