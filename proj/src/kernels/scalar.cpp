#include "quatla/kernels.hpp"

#include <stdexcept>

namespace quatla::kernels::scalar {

void mix_pair(std::span<Complex> x, std::span<Complex> y, Complex a, Complex b, Complex c, Complex d) {
    if (x.size() != y.size()) throw std::invalid_argument("mix_pair: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Complex xi = x[i];
        const Complex yi = y[i];
        x[i] = a * xi + b * yi;
        y[i] = c * xi + d * yi;
    }
}

void sym_update(std::span<double> out, std::span<const double> ha, std::span<const double> hb,
                std::span<const double> ga, std::span<const double> gb, double alpha, double beta,
                double gamma) {
    const std::size_t dim = ga.size();
    if (gb.size() != dim || out.size() != packed_size(dim) || ha.size() != out.size() || hb.size() != out.size())
        throw std::invalid_argument("sym_update: size mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t off = packed_row_offset(i, dim);
        for (std::size_t j = i; j < dim; ++j) {
            const std::size_t k = off + (j - i);
            out[k] = alpha * ha[k] + beta * hb[k] + gamma * (ga[i] * gb[j] + gb[i] * ga[j]);
        }
    }
}

} // namespace quatla::kernels::scalar
