#include <bit>
#include <cstdint>

#include "rydbench/kernels.hpp"

// Reference lane. Complex arithmetic is spelled out on the re/im parts so
// the operation order is pinned; the AVX2 lane reproduces it exactly.

namespace rydbench::kernels::scalar {

namespace {

inline void cmul_inplace(double& ar, double& ai, double br, double bi) {
    const double re = ar * br - ai * bi;
    const double im = ar * bi + ai * br;
    ar = re;
    ai = im;
}

} // namespace

void pointwise_multiply(cplx* amp, const cplx* factors, std::size_t n) {
    double* a = reinterpret_cast<double*>(amp);
    const double* f = reinterpret_cast<const double*>(factors);
    for (std::size_t k = 0; k < n; ++k)
        cmul_inplace(a[2 * k], a[2 * k + 1], f[2 * k], f[2 * k + 1]);
}

void diagonal_phase(cplx* amp, const cplx* table, const cplx* pop_factors,
                    std::size_t n) {
    double* a = reinterpret_cast<double*>(amp);
    const double* t = reinterpret_cast<const double*>(table);
    const double* p = reinterpret_cast<const double*>(pop_factors);
    for (std::size_t z = 0; z < n; ++z) {
        const unsigned pc = static_cast<unsigned>(std::popcount(z));
        double cr = t[2 * z];
        double ci = t[2 * z + 1];
        cmul_inplace(cr, ci, p[2 * pc], p[2 * pc + 1]);
        cmul_inplace(a[2 * z], a[2 * z + 1], cr, ci);
    }
}

void rotate_x(cplx* amp, std::size_t n, int qubit, double c, double s) {
    double* a = reinterpret_cast<double*>(amp);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t lo = 2 * (base + k);
            const std::size_t hi = 2 * (base + k + stride);
            const double lo_r = a[lo], lo_i = a[lo + 1];
            const double hi_r = a[hi], hi_i = a[hi + 1];
            a[lo] = c * lo_r + s * hi_i;
            a[lo + 1] = c * lo_i - s * hi_r;
            a[hi] = c * hi_r + s * lo_i;
            a[hi + 1] = c * hi_i - s * lo_r;
        }
    }
}

double norm_squared(const cplx* amp, std::size_t n) {
    const double* a = reinterpret_cast<const double*>(amp);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        acc += a[2 * k] * a[2 * k] + a[2 * k + 1] * a[2 * k + 1];
    return acc;
}

} // namespace rydbench::kernels::scalar
