#pragma once

#include "rydbench/hamiltonian.hpp"
#include "rydbench/statevector.hpp"
#include "rydbench/waveform.hpp"

namespace rydbench {

struct EvolveOptions {
    double dt_us = 1e-3;

    // Above this qubit count the 2^n diagonal phase table is skipped and
    // phases are recomputed every step.
    int diagonal_table_max_qubits = 26;

    // Forces the no-table path regardless of size (exercised by tests).
    bool force_on_the_fly_diagonal = false;
};

// Second-order Strang step: exp(-i D h/2) exp(-i X h) exp(-i D h/2), with
// Omega and Delta sampled at each step midpoint. D is the diagonal part
// (-Delta n + V n n), X the driving part (Omega/2 sum sigma_x), applied as
// exact single-qubit rotations.
StateVector evolve(const RydbergTerms& terms, const Waveform& waveform,
                   const EvolveOptions& options, StateVector initial);

StateVector evolve(const RydbergTerms& terms, const Waveform& waveform,
                   double dt_us, StateVector initial);

// Evolution of |0...0> under the waveform.
StateVector evolve_ground(const RydbergTerms& terms, const Waveform& waveform,
                          const EvolveOptions& options = {});

// <psi| -delta n + V n n |psi>, exact over the amplitude distribution.
double expectation_diagonal(const StateVector& state, const RydbergTerms& terms,
                            double delta);

} // namespace rydbench
