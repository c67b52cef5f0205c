#include "quatla/kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define QUATLA_HAVE_X86 1
#else
#define QUATLA_HAVE_X86 0
#endif

namespace quatla::kernels::avx2 {

#if QUATLA_HAVE_X86

namespace {

// s * v for a broadcast complex s and two interleaved complex lanes v.
__attribute__((target("avx2,fma"))) inline __m256d cmul(__m256d sr, __m256d si, __m256d v) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, swapped));
}

__attribute__((target("avx2,fma"))) void mix_pair_impl(double* x, double* y, std::size_t count, Complex a,
                                                       Complex b, Complex c, Complex d) {
    const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
    const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
    const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
    const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256d xv = _mm256_loadu_pd(x + 2 * i);
        const __m256d yv = _mm256_loadu_pd(y + 2 * i);
        _mm256_storeu_pd(x + 2 * i, _mm256_add_pd(cmul(ar, ai, xv), cmul(br, bi, yv)));
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(cmul(cr, ci, xv), cmul(dr, di, yv)));
    }
    for (; i < count; ++i) {
        const Complex xi{x[2 * i], x[2 * i + 1]};
        const Complex yi{y[2 * i], y[2 * i + 1]};
        const Complex nx = a * xi + b * yi;
        const Complex ny = c * xi + d * yi;
        x[2 * i] = nx.real();
        x[2 * i + 1] = nx.imag();
        y[2 * i] = ny.real();
        y[2 * i + 1] = ny.imag();
    }
}

__attribute__((target("avx2,fma"))) void sym_update_impl(double* out, const double* ha, const double* hb,
                                                         const double* ga, const double* gb, std::size_t dim,
                                                         double alpha, double beta, double gamma) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t off = packed_row_offset(i, dim) - i;
        const __m256d gai = _mm256_set1_pd(gamma * ga[i]);
        const __m256d gbi = _mm256_set1_pd(gamma * gb[i]);
        std::size_t j = i;
        for (; j + 4 <= dim; j += 4) {
            __m256d acc = _mm256_mul_pd(va, _mm256_loadu_pd(ha + off + j));
            acc = _mm256_fmadd_pd(vb, _mm256_loadu_pd(hb + off + j), acc);
            acc = _mm256_fmadd_pd(gai, _mm256_loadu_pd(gb + j), acc);
            acc = _mm256_fmadd_pd(gbi, _mm256_loadu_pd(ga + j), acc);
            _mm256_storeu_pd(out + off + j, acc);
        }
        for (; j < dim; ++j)
            out[off + j] = alpha * ha[off + j] + beta * hb[off + j] + gamma * (ga[i] * gb[j] + gb[i] * ga[j]);
    }
}

} // namespace

void mix_pair(std::span<Complex> x, std::span<Complex> y, Complex a, Complex b, Complex c, Complex d) {
    if (x.size() != y.size()) throw std::invalid_argument("mix_pair: length mismatch");
    // std::complex<double> is layout-compatible with double[2].
    mix_pair_impl(reinterpret_cast<double*>(x.data()), reinterpret_cast<double*>(y.data()), x.size(), a, b, c, d);
}

void sym_update(std::span<double> out, std::span<const double> ha, std::span<const double> hb,
                std::span<const double> ga, std::span<const double> gb, double alpha, double beta,
                double gamma) {
    const std::size_t dim = ga.size();
    if (gb.size() != dim || out.size() != packed_size(dim) || ha.size() != out.size() || hb.size() != out.size())
        throw std::invalid_argument("sym_update: size mismatch");
    sym_update_impl(out.data(), ha.data(), hb.data(), ga.data(), gb.data(), dim, alpha, beta, gamma);
}

#else

void mix_pair(std::span<Complex>, std::span<Complex>, Complex, Complex, Complex, Complex) {
    throw std::logic_error("avx2 kernels are not available on this architecture");
}

void sym_update(std::span<double>, std::span<const double>, std::span<const double>, std::span<const double>,
                std::span<const double>, double, double, double) {
    throw std::logic_error("avx2 kernels are not available on this architecture");
}

#endif

} // namespace quatla::kernels::avx2
