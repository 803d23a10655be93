#include "rydbench/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <bit>
#include <cstdint>
#include <immintrin.h>

// AVX2 lane, two complex doubles per vector. Multiplies and adds are issued
// in the same per-element order as the scalar lane (no FMA), so amplitudes
// come out bit-identical to the reference.

namespace rydbench::kernels::avx2 {

namespace {

// [x0, x1] * [y0, y1] complex; matches scalar cmul_inplace op for op.
inline __m256d cmul(__m256d x, __m256d y) {
    const __m256d y_re = _mm256_movedup_pd(y);
    const __m256d y_im = _mm256_permute_pd(y, 0xF);
    const __m256d x_swap = _mm256_permute_pd(x, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(x, y_re), _mm256_mul_pd(x_swap, y_im));
}

} // namespace

void pointwise_multiply(cplx* amp, const cplx* factors, std::size_t n) {
    double* a = reinterpret_cast<double*>(amp);
    const double* f = reinterpret_cast<const double*>(factors);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(a + 2 * k);
        const __m256d vf = _mm256_loadu_pd(f + 2 * k);
        _mm256_storeu_pd(a + 2 * k, cmul(va, vf));
    }
    if (k < n)
        scalar::pointwise_multiply(amp + k, factors + k, n - k);
}

void diagonal_phase(cplx* amp, const cplx* table, const cplx* pop_factors,
                    std::size_t n) {
    double* a = reinterpret_cast<double*>(amp);
    const double* t = reinterpret_cast<const double*>(table);
    const double* p = reinterpret_cast<const double*>(pop_factors);
    std::size_t z = 0;
    for (; z + 2 <= n; z += 2) {
        const unsigned pc0 = static_cast<unsigned>(std::popcount(z));
        const unsigned pc1 = static_cast<unsigned>(std::popcount(z + 1));
        const __m128d f0 = _mm_loadu_pd(p + 2 * pc0);
        const __m128d f1 = _mm_loadu_pd(p + 2 * pc1);
        const __m256d vf = _mm256_set_m128d(f1, f0);
        const __m256d vt = _mm256_loadu_pd(t + 2 * z);
        const __m256d va = _mm256_loadu_pd(a + 2 * z);
        _mm256_storeu_pd(a + 2 * z, cmul(va, cmul(vt, vf)));
    }
    if (z < n)
        scalar::diagonal_phase(amp + z, table + z, pop_factors, n - z);
}

void rotate_x(cplx* amp, std::size_t n, int qubit, double c, double s) {
    double* a = reinterpret_cast<double*>(amp);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_setr_pd(s, -s, s, -s);

    if (qubit == 0) {
        // Pair (lo, hi) sits inside one 256-bit lane.
        std::size_t k = 0;
        for (; k + 2 <= n; k += 2) {
            const __m256d v = _mm256_loadu_pd(a + 2 * k);
            const __m256d partner = _mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 3, 2));
            const __m256d partner_swap = _mm256_permute_pd(partner, 0x5);
            const __m256d out =
                _mm256_add_pd(_mm256_mul_pd(vc, v), _mm256_mul_pd(vs, partner_swap));
            _mm256_storeu_pd(a + 2 * k, out);
        }
        if (k < n)
            scalar::rotate_x(amp + k, n - k, qubit, c, s);
        return;
    }

    // stride >= 2 complexes: both halves of a pair are contiguous runs.
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = 0; k + 2 <= stride; k += 2) {
            double* lo = a + 2 * (base + k);
            double* hi = lo + 2 * stride;
            const __m256d v_lo = _mm256_loadu_pd(lo);
            const __m256d v_hi = _mm256_loadu_pd(hi);
            const __m256d lo_swap = _mm256_permute_pd(v_lo, 0x5);
            const __m256d hi_swap = _mm256_permute_pd(v_hi, 0x5);
            _mm256_storeu_pd(
                lo, _mm256_add_pd(_mm256_mul_pd(vc, v_lo), _mm256_mul_pd(vs, hi_swap)));
            _mm256_storeu_pd(
                hi, _mm256_add_pd(_mm256_mul_pd(vc, v_hi), _mm256_mul_pd(vs, lo_swap)));
        }
    }
}

double norm_squared(const cplx* amp, std::size_t n) {
    const double* a = reinterpret_cast<const double*>(amp);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d v = _mm256_loadu_pd(a + 2 * k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    if (k < n)
        total += scalar::norm_squared(amp + k, n - k);
    return total;
}

} // namespace rydbench::kernels::avx2

#endif // x86-64
