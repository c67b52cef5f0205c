#pragma once

// Deterministic random inputs for the verification suites.

#include <cstdint>
#include <random>
#include <string_view>

#include "quatla/exterior.hpp"
#include "quatla/fields.hpp"
#include "quatla/quaternion.hpp"

namespace quatla {

/// SplitMix64; satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream; advances this one.
    SplitMix64 split() { return SplitMix64((*this)() ^ 0x6a09e667f3bcc909ULL); }

private:
    std::uint64_t state_;
};

/// Stream for case k of the named check, independent of every other case.
SplitMix64 case_rng(std::uint64_t seed, std::string_view tag, std::uint64_t k);

double normal(SplitMix64& rng);
double uniform(SplitMix64& rng, double lo, double hi);
int uniform_int(SplitMix64& rng, int lo, int hi);

Quaternion random_quaternion(SplitMix64& rng);
QMatrix random_qmatrix(SplitMix64& rng, std::size_t rows, std::size_t cols);
QMatrix random_hyperhermitian(SplitMix64& rng, std::size_t n);
/// Complex Hermitian matrix viewed as quaternionic.
QMatrix random_complex_hermitian(SplitMix64& rng, std::size_t n);
CMatrix random_cmatrix(SplitMix64& rng, std::size_t rows, std::size_t cols);
CMatrix random_skew(SplitMix64& rng, std::size_t m);
/// Invertible U with smallest singular value of tau(U) at least 0.1.
QMatrix random_gl(SplitMix64& rng, std::size_t n);
/// E from diagonalizing a random hyperhermitian matrix.
QMatrix random_unitary(SplitMix64& rng, std::size_t n);
std::vector<double> random_point(SplitMix64& rng, std::size_t dim, double scale = 1.0);

/// Real polynomial in `vars` variables with `terms` random monomials of
/// degree <= max_degree. Integer coefficients in [-5, 5] when `integer`.
Polynomial random_real_polynomial(SplitMix64& rng, int vars, int max_degree, int terms, bool integer);
/// Sparse grade-k form with a few standard-normal complex coefficients.
Form random_form(SplitMix64& rng, int n, int grade, int terms);

} // namespace quatla
