#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>
#include <vector>

#include "rydbench/evolve.hpp"
#include "rydbench/instance.hpp"
#include "rydbench/schedule.hpp"

using namespace rydbench;
using cplx = std::complex<double>;

namespace {

Waveform constant_drive(double omega, double delta, double t_tot) {
    Waveform wf;
    wf.points = {{0.0, omega, delta}, {t_tot, omega, delta}};
    return wf;
}

RydbergTerms pair_terms(double v) {
    RydbergTerms terms;
    terms.n_qubits = 2;
    terms.pairs = {{0, 1, v}};
    return terms;
}

// Dense piecewise-constant propagator: H sampled at each step midpoint and
// exponentiated exactly. H is real symmetric, so the exponential comes from
// an eigendecomposition. Independent of the product-formula code path.
StateVector dense_reference(const RydbergTerms& terms, const Waveform& wf,
                            double dt) {
    const int n = terms.n_qubits;
    const std::size_t dim = std::size_t{1} << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = 1.0;

    const double t_tot = wf.t_total_us();
    const auto steps = static_cast<std::size_t>(std::llround(t_tot / dt));
    REQUIRE(std::abs(steps * dt - t_tot) < 1e-9);

    for (std::size_t k = 0; k < steps; ++k) {
        const auto [omega, delta] = wf.at((k + 0.5) * dt);
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
        for (std::size_t z = 0; z < dim; ++z) {
            h(z, z) = interaction_energy(z, terms) -
                      delta * static_cast<double>(std::popcount(z));
            for (int q = 0; q < n; ++q)
                h(z, z ^ (std::size_t{1} << q)) = 0.5 * omega;
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
        const Eigen::VectorXd phase = eig.eigenvalues() * dt;
        Eigen::VectorXcd rotated = eig.eigenvectors().transpose() * psi;
        for (Eigen::Index i = 0; i < rotated.size(); ++i)
            rotated(i) *= std::exp(cplx(0.0, -phase(i)));
        psi = eig.eigenvectors() * rotated;
    }

    StateVector out;
    out.n_qubits = n;
    out.amps.assign(dim, {0.0, 0.0});
    for (std::size_t z = 0; z < dim; ++z)
        out.amps[z] = psi(z);
    return out;
}

double l2_distance(const StateVector& a, const StateVector& b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.amps.size(); ++k)
        acc += std::norm(a.amps[k] - b.amps[k]);
    return std::sqrt(acc);
}

double fidelity(const StateVector& a, const StateVector& b) {
    cplx overlap = 0.0;
    for (std::size_t k = 0; k < a.amps.size(); ++k)
        overlap += std::conj(a.amps[k]) * b.amps[k];
    return std::norm(overlap);
}

} // namespace

TEST_CASE("resonant Rabi oscillation matches the closed form") {
    RydbergTerms one_atom;
    one_atom.n_qubits = 1;
    const double omega = 5.5;

    EvolveOptions opt;
    opt.dt_us = 1e-4;
    double worst = 0.0;
    for (int k = 1; k <= 40; ++k) {
        const double t = 2.0 * k / 40.0;
        const StateVector psi =
            evolve_ground(one_atom, constant_drive(omega, 0.0, t), opt);
        const double expected = std::pow(std::sin(0.5 * omega * t), 2);
        worst = std::max(worst, std::abs(psi.probability(1) - expected));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("detuned Rabi oscillation matches the generalized closed form") {
    RydbergTerms one_atom;
    one_atom.n_qubits = 1;
    const double omega = 5.5, delta = 3.0;
    const double gen = std::sqrt(omega * omega + delta * delta);

    EvolveOptions opt;
    opt.dt_us = 1e-4;
    for (int k = 1; k <= 10; ++k) {
        const double t = 1.5 * k / 10.0;
        const StateVector psi =
            evolve_ground(one_atom, constant_drive(omega, delta, t), opt);
        const double expected =
            (omega * omega / (gen * gen)) * std::pow(std::sin(0.5 * gen * t), 2);
        CHECK(std::abs(psi.probability(1) - expected) < 1e-5);
    }
}

TEST_CASE("strong blockade pins the doubly-excited state") {
    const double omega = 5.5;
    const double v = 100.0 * omega;
    const RydbergTerms terms = pair_terms(v);
    const double collective = std::numbers::sqrt2 * omega;
    const double cycle = 2.0 * std::numbers::pi / collective;

    EvolveOptions opt;
    opt.dt_us = 2e-4;

    double max_p11 = 0.0;
    double crossing = -1.0;
    double prev_p00 = 1.0, prev_t = 0.0;
    for (int k = 1; k <= 160; ++k) {
        const double t = cycle * k / 160.0;
        const StateVector psi =
            evolve_ground(terms, constant_drive(omega, 0.0, t), opt);
        max_p11 = std::max(max_p11, psi.probability(3));
        const double p00 = psi.probability(0);
        if (crossing < 0.0 && prev_p00 >= 0.5 && p00 < 0.5) {
            // linear interpolation of the 1/2 crossing
            crossing = prev_t + (prev_p00 - 0.5) / (prev_p00 - p00) * (t - prev_t);
        }
        prev_p00 = p00;
        prev_t = t;
    }

    CHECK(max_p11 < 0.01);
    REQUIRE(crossing > 0.0);
    const double fitted = std::numbers::pi / (2.0 * crossing);
    CHECK(std::abs(fitted - collective) / collective < 0.01);
}

TEST_CASE("two-atom evolution agrees with dense diagonalization") {
    const RydbergTerms terms = pair_terms(55.406272);
    const Waveform wf = constant_drive(5.5, 2.2, 1.0);
    EvolveOptions opt;
    opt.dt_us = 1e-4;
    const StateVector trotter = evolve_ground(terms, wf, opt);
    const StateVector reference = dense_reference(terms, wf, 1e-4);
    CHECK(fidelity(trotter, reference) >= 1.0 - 1e-8);
}

TEST_CASE("pure diagonal evolution leaves populations alone") {
    const auto inst = generate_dugg(2, 2, 1.0, 5.0, 3);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));

    EvolveOptions opt;
    opt.dt_us = 1e-3;
    const StateVector ground =
        evolve_ground(terms, constant_drive(0.0, -4.0, 1.0), opt);
    CHECK(ground.probability(0) == doctest::Approx(1.0).epsilon(1e-12));

    // A basis state only accumulates the phase of its diagonal energy.
    StateVector excited = StateVector::ground_state(terms.n_qubits);
    excited.amps[0] = 0.0;
    excited.amps[5] = 1.0;
    const double t = 0.8, delta = -4.0;
    const StateVector evolved =
        evolve(terms, constant_drive(0.0, delta, t), opt, excited);
    const double energy =
        interaction_energy(5, terms) - delta * std::popcount(5u);
    const cplx expected = std::polar(1.0, -energy * t);
    CHECK(std::abs(evolved.amps[5] - expected) < 1e-9);
    CHECK(evolved.probability(5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm is conserved through every step") {
    const auto inst = generate_dugg(2, 3, 1.0, 5.0, 11);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    const Waveform wf = build_qaa_schedule(default_qaa(2.0));
    const double dt = 1e-3;

    // Drive the integrator one step at a time: each single-step waveform is
    // the schedule segment shifted to the origin, so midpoint sampling
    // matches the full run.
    StateVector psi = StateVector::ground_state(terms.n_qubits);
    for (int k = 0; k < 400; ++k) {
        Waveform segment;
        const double t0 = k * dt;
        segment.points = {{0.0, wf.omega_at(t0), wf.delta_at(t0)},
                          {dt, wf.omega_at(t0 + dt), wf.delta_at(t0 + dt)}};
        psi = evolve(terms, segment, dt, std::move(psi));
        CHECK(std::abs(psi.norm_squared() - 1.0) < 1e-10);
    }

    EvolveOptions opt;
    opt.dt_us = dt;
    const StateVector full = evolve_ground(terms, wf, opt);
    CHECK(std::abs(full.norm_squared() - 1.0) < 1e-10);
}

TEST_CASE("second-order convergence in the step size") {
    const auto inst = generate_dugg(2, 3, 1.0, 5.0, 4);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    const Waveform wf = build_qaa_schedule(default_qaa(1.6));

    auto run = [&](double dt) {
        EvolveOptions opt;
        opt.dt_us = dt;
        return evolve_ground(terms, wf, opt);
    };

    std::vector<double> errors;
    for (double dt : {0.02, 0.01, 0.005}) {
        const StateVector coarse = run(dt);
        const StateVector fine = run(dt / 16.0);
        errors.push_back(l2_distance(coarse, fine));
    }
    for (std::size_t k = 1; k < errors.size(); ++k) {
        const double ratio = errors[k - 1] / errors[k];
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
}

TEST_CASE("product formula agrees with the dense propagator") {
    const auto inst = generate_dugg(2, 3, 1.0, 5.0, 4);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    const Waveform wf = build_qaa_schedule(default_qaa(1.0));

    EvolveOptions opt;
    opt.dt_us = 1e-3;
    const StateVector trotter = evolve_ground(terms, wf, opt);
    const StateVector reference = dense_reference(terms, wf, 1e-3);
    CHECK(fidelity(trotter, reference) >= 1.0 - 1e-6);
}

TEST_CASE("blockaded edge pair stays singly excited through annealing") {
    // V / Omega_max >= 20 at nearest-neighbor spacing.
    const auto inst = generate_dugg(1, 2, 1.0, 5.0, 2);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    QaaParams qaa = default_qaa(4.0);
    qaa.omega_max = 2.5;
    REQUIRE(terms.pairs[0].v >= 20.0 * qaa.omega_max);

    EvolveOptions opt;
    opt.dt_us = 1e-3;
    const StateVector psi = evolve_ground(terms, build_qaa_schedule(qaa), opt);
    CHECK(psi.probability(3) < 0.02);
    CHECK(psi.probability(1) + psi.probability(2) > 0.9);
}

TEST_CASE("table, on-the-fly, and pairwise diagonal paths agree") {
    const auto inst = generate_dugg(2, 3, 1.0, 5.0, 8);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    const Waveform wf = build_qaa_schedule(default_qaa(1.0));

    EvolveOptions table_opt;
    table_opt.dt_us = 1e-3;
    EvolveOptions fly_opt = table_opt;
    fly_opt.force_on_the_fly_diagonal = true;
    EvolveOptions pairwise_opt = table_opt;
    pairwise_opt.diagonal_table_max_qubits = 0;

    const StateVector a = evolve_ground(terms, wf, table_opt);
    const StateVector b = evolve_ground(terms, wf, fly_opt);
    const StateVector c = evolve_ground(terms, wf, pairwise_opt);
    for (std::size_t z = 0; z < a.amps.size(); ++z) {
        CHECK(std::abs(a.amps[z] - b.amps[z]) < 1e-10);
        CHECK(std::abs(b.amps[z] - c.amps[z]) < 1e-10);
    }
}

TEST_CASE("evolution is deterministic") {
    const auto inst = generate_dugg(2, 2, 1.0, 5.0, 5);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    const Waveform wf = build_qaa_schedule(default_qaa(0.7));
    EvolveOptions opt;
    opt.dt_us = 1e-3;
    const StateVector a = evolve_ground(terms, wf, opt);
    const StateVector b = evolve_ground(terms, wf, opt);
    CHECK(std::memcmp(a.amps.data(), b.amps.data(),
                      a.amps.size() * sizeof(cplx)) == 0);
}

TEST_CASE("expectation of the diagonal part") {
    RydbergTerms one_atom;
    one_atom.n_qubits = 1;
    StateVector psi = StateVector::ground_state(1);
    CHECK(expectation_diagonal(psi, one_atom, 5.5) == 0.0);

    psi.amps = {0.0, 1.0};
    CHECK(expectation_diagonal(psi, one_atom, 5.5) == doctest::Approx(-5.5));

    const double inv = 1.0 / std::numbers::sqrt2;
    psi.amps = {inv, inv};
    CHECK(expectation_diagonal(psi, one_atom, 5.5) == doctest::Approx(-2.75));
}

TEST_CASE("evolution rejects invalid inputs") {
    const auto inst = generate_dugg(1, 2, 1.0, 5.0, 6);
    const auto terms = build_rydberg_terms(inst, builtin_device("pasqal_fresnel"));
    const Waveform wf = constant_drive(1.0, 0.0, 1.0);

    CHECK_THROWS(evolve(terms, wf, 0.0, StateVector::ground_state(2)));
    CHECK_THROWS(evolve(terms, wf, -1e-3, StateVector::ground_state(2)));

    StateVector bad = StateVector::ground_state(2);
    bad.amps[0] = 2.0;
    CHECK_THROWS(evolve(terms, wf, 1e-3, bad));

    CHECK_THROWS(evolve(terms, wf, 1e-3, StateVector::ground_state(1)));
    CHECK_THROWS(StateVector::ground_state(31));
}
