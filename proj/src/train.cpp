#include "rydbench/train.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rydbench/evolve.hpp"
#include "rydbench/metrics.hpp"
#include "rydbench/rng.hpp"
#include "rydbench/sampling.hpp"

namespace rydbench {

namespace {

struct ClampedParams {
    QaoaParams params;
    double penalty = 0.0;
};

ClampedParams clamp_to_device(const std::vector<double>& x, int p, double t_tot,
                              const DeviceSpec& device, double weight) {
    ClampedParams out;
    out.params.t_tot_us = t_tot;
    out.params.omegas.resize(p);
    out.params.deltas.resize(p);
    for (int k = 0; k < p; ++k) {
        const double omega = x[k];
        const double delta = x[p + k];
        const double omega_phys = std::clamp(omega, 0.0, device.omega_max);
        const double delta_phys =
            std::clamp(delta, -device.delta_abs_max, device.delta_abs_max);
        out.params.omegas[k] = omega_phys;
        out.params.deltas[k] = delta_phys;
        const double d_omega = omega - omega_phys;
        const double d_delta = delta - delta_phys;
        out.penalty += weight * (d_omega * d_omega + d_delta * d_delta);
    }
    return out;
}

} // namespace

TrainedParams train_transfer_params(const std::vector<DuggInstance>& instances,
                                    const DeviceSpec& device,
                                    const TrainConfig& config,
                                    std::uint64_t seed) {
    if (instances.empty())
        throw std::invalid_argument("train_transfer_params: no instances");
    if (config.p < 1)
        throw std::invalid_argument("train_transfer_params: need p >= 1");
    if (std::abs(config.annealing_start.t_tot_us() - config.t_tot_us) > 1e-9)
        throw std::invalid_argument(
            "train_transfer_params: annealing start and t_tot disagree");

    struct Prepared {
        RydbergTerms terms;
        const DuggInstance* inst;
        std::uint64_t sample_seed;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        if (inst.n_qubits() > kMaxSimQubits)
            throw std::runtime_error("train_transfer_params: instance " + inst.id +
                                     " exceeds the simulator cap");
        prepared.push_back({build_rydberg_terms(inst, device), &inst,
                            splitmix64(seed + i)});
    }

    EvolveOptions evolve_options;
    evolve_options.dt_us = config.dt_us;
    const CostModel cost;

    auto objective = [&](const std::vector<double>& x) {
        const auto clamped = clamp_to_device(x, config.p, config.t_tot_us, device,
                                             config.penalty_weight);
        const Waveform wf = build_qaoa_schedule(clamped.params);
        double acc = 0.0;
        for (const auto& item : prepared) {
            const StateVector state = evolve_ground(item.terms, wf, evolve_options);
            if (config.sampled_objective) {
                // Shot-based estimator with one fixed seed per instance;
                // negated so "lower is better" matches the exact mode.
                const SampleSet samples =
                    sample(state, config.objective_shots, item.sample_seed);
                acc -= estimate_fp(samples, *item.inst, cost);
            } else {
                acc += expectation_diagonal(state, item.terms,
                                            config.delta_objective);
            }
        }
        return acc / static_cast<double>(prepared.size()) + clamped.penalty;
    };

    const QaoaParams start = discretize_qaa(config.annealing_start, config.p);
    std::vector<double> x0;
    x0.reserve(2 * config.p);
    x0.insert(x0.end(), start.omegas.begin(), start.omegas.end());
    x0.insert(x0.end(), start.deltas.begin(), start.deltas.end());

    const double initial_value = objective(x0);
    const OptResult result = nelder_mead(objective, x0, config.optimizer);

    TrainedParams trained;
    trained.params = clamp_to_device(result.best_x, config.p, config.t_tot_us,
                                     device, config.penalty_weight)
                         .params;
    trained.initial_objective = initial_value;
    trained.final_objective = result.best_value;
    trained.n_evals = result.n_evals;
    trained.seed = seed;
    trained.config = config;
    for (const auto& inst : instances)
        trained.instance_ids.push_back(inst.id);
    return trained;
}

} // namespace rydbench
