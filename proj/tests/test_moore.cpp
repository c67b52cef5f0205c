#include "doctest.h"

#include <cmath>

#include "quatla/moore.hpp"
#include "quatla/random.hpp"

using namespace quatla;

namespace {

const Quaternion kOne{1, 0, 0, 0}, kI{0, 1, 0, 0}, kJ{0, 0, 1, 0};

QMatrix diag(std::initializer_list<double> v) {
    QMatrix m(v.size(), v.size());
    std::size_t i = 0;
    for (double x : v) {
        m(i, i) = Quaternion{x, 0, 0, 0};
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("diagonalize examples") {
    const SpectralData a = diagonalize_hyperhermitian(diag({3, -1}));
    CHECK(a.nu[0] == doctest::Approx(3.0));
    CHECK(a.nu[1] == doctest::Approx(-1.0));
    CHECK(is_quaternionic_unitary(a.E));

    const SpectralData b = diagonalize_hyperhermitian(QMatrix(2, 2, {kOne, kJ, -kJ, kOne}));
    CHECK(b.nu[0] == doctest::Approx(2.0));
    CHECK(std::abs(b.nu[1]) < 1e-12);

    const QMatrix m(2, 2, {2.0 * kOne, kI + kJ, -(kI + kJ), 2.0 * kOne});
    const SpectralData c = diagonalize_hyperhermitian(m);
    CHECK(c.nu[0] == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK(c.nu[1] == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(max_abs(adjoint(c.E) * m * c.E - diag({c.nu[0], c.nu[1]})) < 1e-10);
}

TEST_CASE("degenerate spectrum keeps structure") {
    SplitMix64 rng(17);
    const QMatrix e = random_unitary(rng, 4);
    const QMatrix m = e * diag({2, 2, 2, -1}) * adjoint(e);
    const SpectralData sd = diagonalize_hyperhermitian(m, 1e-8);
    CHECK(is_quaternionic_unitary(sd.E, 1e-10));
    CHECK(sd.nu[0] == doctest::Approx(2.0));
    CHECK(sd.nu[2] == doctest::Approx(2.0));
    CHECK(sd.nu[3] == doctest::Approx(-1.0));
    CHECK(max_abs(adjoint(sd.E) * m * sd.E - diag({2, 2, 2, -1})) < 1e-9);
}

TEST_CASE("non-hyperhermitian input") {
    CHECK_THROWS_AS(diagonalize_hyperhermitian(QMatrix(1, 1, {kI})), NotHyperhermitian);
    CHECK_THROWS_AS(moore_det(QMatrix(2, 2, {kOne, kJ, kJ, kOne})), NotHyperhermitian);
}

TEST_CASE("moore determinant examples") {
    CHECK(moore_det(QMatrix::identity(3)) == doctest::Approx(1.0));
    const QMatrix h(2, 2, {2.0 * kOne, kI, -1.0 * kI, 2.0 * kOne});
    CHECK(moore_det(h) == doctest::Approx(3.0));
    const QMatrix m(2, 2, {2.0 * kOne, kI + kJ, -(kI + kJ), 2.0 * kOne});
    CHECK(moore_det(m) == doctest::Approx(2.0));
}

TEST_CASE("mixed discriminant examples") {
    SplitMix64 rng(2);
    const QMatrix m = random_hyperhermitian(rng, 3);
    const std::vector<QMatrix> same(3, m);
    CHECK(mixed_discriminant(same) == doctest::Approx(moore_det(m)));
    const std::vector<QMatrix> ids(2, QMatrix::identity(2));
    CHECK(mixed_discriminant(ids) == doctest::Approx(1.0));
    const std::vector<QMatrix> ab{diag({2, 3}), diag({5, 7})};
    CHECK(mixed_discriminant(ab) == doctest::Approx((2.0 * 7 + 3.0 * 5) / 2));
    const std::vector<QMatrix> bad{diag({1, 2}), diag({1})};
    CHECK_THROWS_AS(mixed_discriminant(bad), ShapeError);
}

TEST_CASE("eigenvalue pairs") {
    const auto a = eigenvalue_pairs(CMatrix::identity(4));
    CHECK(a == std::vector<double>{1.0, 1.0});
    const auto b = eigenvalue_pairs(tau(diag({3, -1})));
    CHECK(b[0] == doctest::Approx(3.0));
    CHECK(b[1] == doctest::Approx(-1.0));
    const auto c = eigenvalue_pairs(tau(QMatrix(2, 2, {kOne, kJ, -kJ, kOne})));
    CHECK(c[0] == doctest::Approx(2.0));
    CHECK(std::abs(c[1]) < 1e-12);
    CMatrix not_j(2, 2);
    not_j(0, 0) = 1.0;
    CHECK_THROWS_AS(eigenvalue_pairs(not_j), StructureError);
}

TEST_CASE("Jacobi sweep limit") {
    SplitMix64 rng(4);
    const CMatrix h = tau(random_hyperhermitian(rng, 3));
    CHECK_THROWS_AS(hermitian_eigen(h, {1e-13, 0}), ConvergenceError);
    const HermitianEigen eig = hermitian_eigen(h);
    CHECK(max_abs(h * eig.vectors - eig.vectors * [&] {
              CMatrix d(6, 6);
              for (std::size_t i = 0; i < 6; ++i) d(i, i) = eig.values[i];
              return d;
          }()) < 1e-12);
}
