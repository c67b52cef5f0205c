#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and an
// AVX2/FMA version; the public entry points dispatch on the backend chosen at
// startup (CPU detection, overridable with QUATLA_KERNELS=scalar|avx2).

#include <complex>
#include <span>
#include <string_view>

namespace quatla::kernels {

using Complex = std::complex<double>;

enum class Backend { scalar, avx2 };

bool avx2_available() noexcept;
Backend active_backend() noexcept;
/// Throws std::invalid_argument if the backend is not supported on this CPU.
void set_backend(Backend b);
std::string_view backend_name(Backend b) noexcept;

/// x <- a x + b y, y <- c x + d y (elementwise, using the old x and y).
void mix_pair(std::span<Complex> x, std::span<Complex> y, Complex a, Complex b, Complex c, Complex d);

/// Packed upper-triangular symmetric update
///   out_ij = alpha * ha_ij + beta * hb_ij + gamma * (ga_i gb_j + gb_i ga_j),  j >= i.
/// Row i of the packed layout holds columns i..dim-1 contiguously.
void sym_update(std::span<double> out, std::span<const double> ha, std::span<const double> hb,
                std::span<const double> ga, std::span<const double> gb, double alpha, double beta,
                double gamma);

namespace scalar {
void mix_pair(std::span<Complex> x, std::span<Complex> y, Complex a, Complex b, Complex c, Complex d);
void sym_update(std::span<double> out, std::span<const double> ha, std::span<const double> hb,
                std::span<const double> ga, std::span<const double> gb, double alpha, double beta,
                double gamma);
} // namespace scalar

namespace avx2 {
void mix_pair(std::span<Complex> x, std::span<Complex> y, Complex a, Complex b, Complex c, Complex d);
void sym_update(std::span<double> out, std::span<const double> ha, std::span<const double> hb,
                std::span<const double> ga, std::span<const double> gb, double alpha, double beta,
                double gamma);
} // namespace avx2

constexpr std::size_t packed_size(std::size_t dim) { return dim * (dim + 1) / 2; }
constexpr std::size_t packed_row_offset(std::size_t i, std::size_t dim) { return i * dim - i * (i - 1) / 2; }

} // namespace quatla::kernels
