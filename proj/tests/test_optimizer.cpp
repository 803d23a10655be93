#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "rydbench/evolve.hpp"
#include "rydbench/instance.hpp"
#include "rydbench/metrics.hpp"
#include "rydbench/nelder_mead.hpp"
#include "rydbench/rng.hpp"
#include "rydbench/train.hpp"

using namespace rydbench;

TEST_CASE("convex quadratic converges to the origin") {
    OptimizerConfig config;
    config.simplex_spread_tol = 1e-8;
    config.max_evals = 2000;
    const auto result = nelder_mead(
        [](const std::vector<double>& x) {
            return x[0] * x[0] + x[1] * x[1];
        },
        {1.0, 1.0}, config);
    CHECK(std::abs(result.best_x[0]) < 1e-6);
    CHECK(std::abs(result.best_x[1]) < 1e-6);
    CHECK(result.best_value < 1e-10);
    CHECK(!result.hit_max_evals);
}

TEST_CASE("rosenbrock valley from the classic start") {
    auto rosenbrock = [](const std::vector<double>& x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };

    OptimizerConfig config;
    config.simplex_spread_tol = 1e-10;
    config.max_evals = 2000;
    const auto result = nelder_mead(rosenbrock, {-1.2, 1.0}, config);
    CHECK(std::abs(result.best_x[0] - 1.0) < 1e-4);
    CHECK(std::abs(result.best_x[1] - 1.0) < 1e-4);
    CHECK(result.best_value < 1e-8);

    // Grid search near the optimum confirms the minimizer location.
    double best_grid = std::numeric_limits<double>::infinity();
    double best_u = 0, best_v = 0;
    for (int i = -100; i <= 100; ++i) {
        for (int j = -100; j <= 100; ++j) {
            const double u = 1.0 + i * 1e-3, v = 1.0 + j * 1e-3;
            const double f = rosenbrock({u, v});
            if (f < best_grid) {
                best_grid = f;
                best_u = u;
                best_v = v;
            }
        }
    }
    CHECK(best_u == doctest::Approx(1.0));
    CHECK(best_v == doctest::Approx(1.0));
    CHECK(result.best_value <= best_grid + 1e-12);
}

TEST_CASE("constant objective terminates on the spread tolerance") {
    OptimizerConfig config;
    const auto result = nelder_mead(
        [](const std::vector<double>&) { return 3.5; }, {1.0, 2.0, 3.0}, config);
    CHECK(result.best_value == 3.5);
    CHECK(!result.hit_max_evals);
    CHECK(result.n_evals < 200);
}

TEST_CASE("non-finite objectives are rejected with context") {
    OptimizerConfig config;
    CHECK_THROWS_WITH_AS(
        nelder_mead(
            [](const std::vector<double>& x) {
                return x[0] > 1.02 ? std::numeric_limits<double>::infinity()
                                   : x[0];
            },
            {1.0, 1.0}, config),
        doctest::Contains("non-finite"), std::runtime_error);

    OptimizerConfig bad;
    bad.expansion = 0.5;
    CHECK_THROWS(nelder_mead([](const std::vector<double>&) { return 0.0; },
                             {1.0}, bad));
}

TEST_CASE("result never degrades below the best initial vertex") {
    Xoshiro256StarStar rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + rng.next() % 4;
        std::vector<double> lin(d), x0(d);
        for (auto& v : lin)
            v = rng.next_double() * 4.0 - 2.0;
        for (auto& v : x0)
            v = rng.next_double() * 4.0 - 2.0;
        const double curve = 0.5 + rng.next_double();

        auto f = [&](const std::vector<double>& x) {
            double acc = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                acc += curve * x[i] * x[i] + lin[i] * x[i];
            return acc;
        };

        // Reproduce the optimizer's own initial simplex to bound it.
        double best_initial = f(x0);
        for (std::size_t i = 0; i < d; ++i) {
            auto v = x0;
            v[i] += (v[i] != 0.0) ? 0.05 * std::abs(v[i]) : 0.00025;
            best_initial = std::min(best_initial, f(v));
        }

        OptimizerConfig config;
        config.max_evals = 40;
        const auto result = nelder_mead(f, x0, config);
        CHECK(result.best_value <= best_initial + 1e-15);
    }
}

TEST_CASE("training a single blockaded pair reaches the MIS ground states") {
    const auto inst = generate_dugg(1, 2, 1.0, 5.0, 3);
    const auto device = builtin_device("pasqal_fresnel");

    TrainConfig config;
    config.p = 2;
    config.t_tot_us = 2.0;
    config.dt_us = 2e-3;
    config.annealing_start = default_qaa(2.0);
    config.optimizer.max_evals = 400;

    const TrainedParams trained = train_transfer_params({inst}, device, config, 7);
    CHECK(trained.final_objective <= trained.initial_objective + 1e-12);
    CHECK(trained.n_evals <= 400);
    CHECK(trained.instance_ids == std::vector<std::string>{inst.id});

    const auto terms = build_rydberg_terms(inst, device);
    EvolveOptions opt;
    opt.dt_us = config.dt_us;
    const StateVector psi =
        evolve_ground(terms, build_qaoa_schedule(trained.params), opt);
    const double success = psi.probability(1) + psi.probability(2);
    CHECK(success >= 0.8);

    for (double w : trained.params.omegas) {
        CHECK(w >= 0.0);
        CHECK(w <= device.omega_max);
    }
}

TEST_CASE("edge-free instance is driven toward the all-excited state") {
    // Two atoms far enough apart that no interaction pair survives.
    DuggInstance inst;
    inst.id = "isolated_pair";
    inst.rows = 1;
    inst.cols = 6;
    inst.spacing_um = 5.0;
    inst.sites = {{0, 0}, {0, 5}};

    TrainConfig config;
    config.p = 2;
    config.t_tot_us = 2.0;
    config.dt_us = 2e-3;
    config.annealing_start = default_qaa(2.0);
    config.optimizer.max_evals = 300;

    const auto trained =
        train_transfer_params({inst}, builtin_device("pasqal_fresnel"), config, 11);
    CHECK(trained.final_objective <= trained.initial_objective + 1e-12);
    // Ground level is -delta_fin * N = -11; the optimizer should get close.
    CHECK(trained.final_objective <= -0.8 * 11.0);
}

TEST_CASE("training validates its inputs") {
    TrainConfig config;
    CHECK_THROWS(train_transfer_params({}, builtin_device("pasqal_fresnel"),
                                       config, 1));

    const auto inst = generate_dugg(1, 2, 1.0, 5.0, 3);
    TrainConfig mismatched;
    mismatched.t_tot_us = 3.0;    // annealing_start still spans 2 us
    CHECK_THROWS(train_transfer_params({inst}, builtin_device("pasqal_fresnel"),
                                       mismatched, 1));
}

TEST_CASE("sampled objective mode is deterministic") {
    const auto inst = generate_dugg(1, 2, 1.0, 5.0, 3);
    TrainConfig config;
    config.p = 2;
    config.t_tot_us = 2.0;
    config.dt_us = 4e-3;
    config.annealing_start = default_qaa(2.0);
    config.sampled_objective = true;
    config.objective_shots = 200;
    config.optimizer.max_evals = 60;

    const auto a =
        train_transfer_params({inst}, builtin_device("pasqal_fresnel"), config, 5);
    const auto b =
        train_transfer_params({inst}, builtin_device("pasqal_fresnel"), config, 5);
    CHECK(a.final_objective == b.final_objective);
    CHECK(a.params.omegas == b.params.omegas);
    CHECK(a.params.deltas == b.params.deltas);
}
