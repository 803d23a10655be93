#pragma once

#include <functional>
#include <vector>

namespace rydbench {

struct OptimizerConfig {
    int max_evals = 2000;
    double simplex_spread_tol = 1e-4;
    double reflection = 1.0;     // alpha > 0
    double expansion = 2.0;      // chi > 1
    double contraction = 0.5;    // 0 < gamma < 1
    double shrink = 0.5;         // 0 < sigma < 1
};

struct OptResult {
    std::vector<double> best_x;
    double best_value = 0.0;
    int n_evals = 0;
    bool hit_max_evals = false;
};

// Standard Nelder-Mead simplex minimization. Deterministic in (x0, config).
// Terminates when both the x- and f-spread of the simplex fall below
// simplex_spread_tol, or at max_evals. Throws if the objective returns a
// non-finite value.
OptResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                      const std::vector<double>& x0, const OptimizerConfig& config);

} // namespace rydbench
