#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydbench/device.hpp"
#include "rydbench/instance.hpp"
#include "rydbench/nelder_mead.hpp"
#include "rydbench/schedule.hpp"

namespace rydbench {

struct TrainConfig {
    int p = 10;
    double t_tot_us = 2.0;
    double dt_us = 1e-3;

    // Detuning at which the diagonal objective is evaluated; its ground
    // states are the MIS solutions when it sits below the weakest edge V.
    double delta_objective = 5.5;

    // Weight of the quadratic device-limit penalty. Penalties keep the
    // objective continuous where hard clipping would flatten it.
    double penalty_weight = 100.0;

    // Replace the exact diagonal expectation by the shot-based estimator,
    // with one fixed sampling seed per instance (common random numbers).
    bool sampled_objective = false;
    int objective_shots = 500;

    OptimizerConfig optimizer;
    QaaParams annealing_start;    // discretized at p nodes for the initial point

    TrainConfig() : annealing_start(default_qaa(t_tot_us)) {}
};

struct TrainedParams {
    QaoaParams params;
    double initial_objective = 0.0;
    double final_objective = 0.0;
    int n_evals = 0;

    // Provenance
    std::vector<std::string> instance_ids;
    std::uint64_t seed = 0;
    TrainConfig config;
};

// Optimizes one (omegas, deltas) schedule against the mean diagonal energy
// over all instances, starting from the discretized annealing schedule.
// Omegas are clamped to [0, device limit] and deltas to the device band for
// the physics; excursions are charged through the quadratic penalty.
TrainedParams train_transfer_params(const std::vector<DuggInstance>& instances,
                                    const DeviceSpec& device,
                                    const TrainConfig& config,
                                    std::uint64_t seed);

} // namespace rydbench
