#include "rydbench/evolve.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "rydbench/kernels.hpp"

namespace rydbench {

namespace {

using cplx = std::complex<double>;

struct DiagonalStepper {
    const RydbergTerms& terms;
    int n_qubits;
    double dt_us;
    bool use_phase_table;

    std::vector<double> interaction;    // P(z); empty above the table cap
    std::vector<cplx> half_phase;       // exp(-i P(z) dt/2) for full steps

    DiagonalStepper(const RydbergTerms& t, const EvolveOptions& options)
        : terms(t), n_qubits(t.n_qubits), dt_us(options.dt_us) {
        const bool table_fits = n_qubits <= options.diagonal_table_max_qubits;
        use_phase_table = table_fits && !options.force_on_the_fly_diagonal;
        if (table_fits)
            interaction = interaction_table(terms);
        if (use_phase_table) {
            half_phase.resize(interaction.size());
            for (std::size_t z = 0; z < interaction.size(); ++z)
                half_phase[z] = std::polar(1.0, -0.5 * interaction[z] * dt_us);
        }
    }

    // amp *= exp(-i (P(z) - delta*popcount(z)) h / 2)
    void apply_half(cplx* amp, std::size_t dim, double h, double delta) const {
        if (use_phase_table && h == dt_us) {
            cplx pop_factors[kMaxSimQubits + 1];
            for (int m = 0; m <= n_qubits; ++m)
                pop_factors[m] = std::polar(1.0, 0.5 * delta * m * h);
            kernels::diagonal_phase(amp, half_phase.data(), pop_factors, dim);
            return;
        }
        for (std::size_t z = 0; z < dim; ++z) {
            const double p = interaction.empty()
                                 ? interaction_energy(z, terms)
                                 : interaction[z];
            const double pc = static_cast<double>(std::popcount(z));
            amp[z] *= std::polar(1.0, -0.5 * h * (p - delta * pc));
        }
    }
};

} // namespace

StateVector evolve(const RydbergTerms& terms, const Waveform& waveform,
                   const EvolveOptions& options, StateVector state) {
    waveform.check();
    if (options.dt_us <= 0.0)
        throw std::invalid_argument("evolve: dt must be positive");
    if (terms.n_qubits < 1 || terms.n_qubits > kMaxSimQubits)
        throw std::runtime_error("evolve: qubit count outside simulator range");
    if (state.n_qubits != terms.n_qubits ||
        state.amps.size() != (std::size_t{1} << terms.n_qubits))
        throw std::invalid_argument("evolve: state does not match terms");
    if (std::abs(state.norm_squared() - 1.0) > 1e-8)
        throw std::invalid_argument("evolve: initial state not normalized");

    const double t_total = waveform.t_total_us();
    const double dt = options.dt_us;
    auto n_full = static_cast<std::size_t>(std::floor(t_total / dt + 1e-9));
    double remainder = t_total - static_cast<double>(n_full) * dt;
    if (remainder < 1e-12 * std::max(1.0, t_total))
        remainder = 0.0;

    DiagonalStepper diagonal(terms, options);
    cplx* amp = state.amps.data();
    const std::size_t dim = state.amps.size();

    auto step = [&](double t0, double h) {
        const auto [omega, delta] = waveform.at(t0 + 0.5 * h);
        diagonal.apply_half(amp, dim, h, delta);
        const double phi = 0.5 * omega * h;
        if (phi != 0.0) {
            const double c = std::cos(phi);
            const double s = std::sin(phi);
            for (int q = 0; q < terms.n_qubits; ++q)
                kernels::rotate_x(amp, dim, q, c, s);
        }
        diagonal.apply_half(amp, dim, h, delta);
    };

    for (std::size_t k = 0; k < n_full; ++k)
        step(static_cast<double>(k) * dt, dt);
    if (remainder > 0.0)
        step(static_cast<double>(n_full) * dt, remainder);

    if (std::abs(state.norm_squared() - 1.0) > 1e-6)
        throw std::runtime_error("evolve: norm drifted; integrator is unsound");
    return state;
}

StateVector evolve(const RydbergTerms& terms, const Waveform& waveform,
                   double dt_us, StateVector initial) {
    EvolveOptions options;
    options.dt_us = dt_us;
    return evolve(terms, waveform, options, std::move(initial));
}

StateVector evolve_ground(const RydbergTerms& terms, const Waveform& waveform,
                          const EvolveOptions& options) {
    return evolve(terms, waveform, options,
                  StateVector::ground_state(terms.n_qubits));
}

double expectation_diagonal(const StateVector& state, const RydbergTerms& terms,
                            double delta) {
    if (state.n_qubits != terms.n_qubits)
        throw std::invalid_argument("expectation_diagonal: state/terms mismatch");

    // O(2^n * pairs); evolution dominates every caller, so no table here.
    double acc = 0.0;
    for (std::size_t z = 0; z < state.amps.size(); ++z) {
        const double p = state.probability(z);
        if (p == 0.0)
            continue;
        const double energy = interaction_energy(z, terms) -
                              delta * static_cast<double>(std::popcount(z));
        acc += p * energy;
    }
    return acc;
}

} // namespace rydbench
