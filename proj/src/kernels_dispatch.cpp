#include "rydbench/kernels.hpp"

#include "rydbench/simd.hpp"

namespace rydbench::kernels {

namespace {

inline bool use_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return simd::active_level() == simd::IsaLevel::avx2;
#else
    return false;
#endif
}

} // namespace

void pointwise_multiply(cplx* amp, const cplx* factors, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2())
        return avx2::pointwise_multiply(amp, factors, n);
#endif
    scalar::pointwise_multiply(amp, factors, n);
}

void diagonal_phase(cplx* amp, const cplx* table, const cplx* pop_factors,
                    std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2())
        return avx2::diagonal_phase(amp, table, pop_factors, n);
#endif
    scalar::diagonal_phase(amp, table, pop_factors, n);
}

void rotate_x(cplx* amp, std::size_t n, int qubit, double c, double s) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2())
        return avx2::rotate_x(amp, n, qubit, c, s);
#endif
    scalar::rotate_x(amp, n, qubit, c, s);
}

double norm_squared(const cplx* amp, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2())
        return avx2::norm_squared(amp, n);
#endif
    return scalar::norm_squared(amp, n);
}

} // namespace rydbench::kernels
