#pragma once

#include <complex>
#include <cstddef>

// Amplitude-array kernels behind the state-vector evolution. Each kernel has
// a scalar reference implementation and, on x86-64, an AVX2 variant selected
// at runtime. The two lanes are bit-identical for the in-place transforms
// (same multiply/add order, no FMA contraction); reductions may differ in
// the last ulp because lane sums associate differently.

namespace rydbench::kernels {

using cplx = std::complex<double>;

// amp[k] *= factors[k]
void pointwise_multiply(cplx* amp, const cplx* factors, std::size_t n);

// amp[z] *= table[z] * pop_factors[popcount(z)]
// Diagonal Trotter half-step: table holds the interaction phases, the
// popcount factor carries the detuning phase of the current step.
void diagonal_phase(cplx* amp, const cplx* table, const cplx* pop_factors,
                    std::size_t n);

// In-place exp(-i*phi*sigma_x) on one qubit, c = cos(phi), s = sin(phi):
//   a' = c*a - i*s*b,  b' = c*b - i*s*a  over pairs (a, b) split by `qubit`.
void rotate_x(cplx* amp, std::size_t n, int qubit, double c, double s);

double norm_squared(const cplx* amp, std::size_t n);

namespace scalar {
void pointwise_multiply(cplx* amp, const cplx* factors, std::size_t n);
void diagonal_phase(cplx* amp, const cplx* table, const cplx* pop_factors,
                    std::size_t n);
void rotate_x(cplx* amp, std::size_t n, int qubit, double c, double s);
double norm_squared(const cplx* amp, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void pointwise_multiply(cplx* amp, const cplx* factors, std::size_t n);
void diagonal_phase(cplx* amp, const cplx* table, const cplx* pop_factors,
                    std::size_t n);
void rotate_x(cplx* amp, std::size_t n, int qubit, double c, double s);
double norm_squared(const cplx* amp, std::size_t n);
} // namespace avx2
#endif

} // namespace rydbench::kernels
