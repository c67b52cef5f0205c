#include "doctest.h"

#include "quatla/quaternion.hpp"
#include "quatla/random.hpp"

using namespace quatla;

namespace {

const Quaternion kOne{1, 0, 0, 0}, kI{0, 1, 0, 0}, kJ{0, 0, 1, 0}, kK{0, 0, 0, 1};

QMatrix q1(const Quaternion& q) { return QMatrix(1, 1, {q}); }

CMatrix c2(Complex a, Complex b, Complex c, Complex d) { return CMatrix(2, 2, {a, b, c, d}); }

} // namespace

TEST_CASE("Hamilton product") {
    CHECK(kI * kJ == kK);
    CHECK(kJ * kK == kI);
    CHECK(kK * kI == kJ);
    CHECK(kJ * kI == -kK);
    CHECK(conj(Quaternion{1, 2, 3, 4}) == Quaternion{1, -2, -3, -4});
    CHECK(abs2(Quaternion{1, 2, 3, 4}) == 30.0);
}

TEST_CASE("j d = conj(d) j") {
    const Quaternion d = Quaternion::from_pair({2.0, 5.0}, 0.0);
    CHECK(kJ * d == Quaternion::from_pair(std::conj(d.a()), 0.0) * kJ);
}

TEST_CASE("tau examples") {
    CHECK(tau(q1(kJ)) == c2(0.0, -1.0, 1.0, 0.0));
    CHECK(tau(QMatrix::identity(3)) == CMatrix::identity(6));
    const CMatrix k = c2(0.0, Complex{0, -1}, Complex{0, -1}, 0.0);
    CHECK(tau(q1(kI)) * tau(q1(kJ)) == k);
    CHECK(tau(q1(kK)) == k);
}

TEST_CASE("tau_inverse examples") {
    CHECK(tau_inverse(c2(0.0, -1.0, 1.0, 0.0)) == q1(kJ));
    CHECK(tau_inverse(CMatrix::identity(4)) == QMatrix::identity(2));
    CHECK_THROWS_AS(tau_inverse(c2(1.0, 0.0, 0.0, 2.0)), StructureError);
    CHECK_THROWS_AS(tau_inverse(CMatrix(3, 3)), ShapeError);
}

TEST_CASE("structural predicates") {
    const QMatrix h(2, 2, {kOne, kJ, -kJ, kOne});
    CHECK(structural_predicate(h, Structure::hyperhermitian));
    CHECK(structural_predicate(q1(kJ), Structure::quaternionic_unitary));
    CHECK_FALSE(structural_predicate(q1(2.0 * kOne), Structure::quaternionic_unitary));
    SplitMix64 rng(5);
    const QMatrix e = random_unitary(rng, 3);
    CHECK(structural_predicate(tau(e), Structure::complex_symplectic_unitary));
    CHECK_THROWS_AS(structural_predicate(QMatrix(2, 3), Structure::hyperhermitian), ShapeError);
}

TEST_CASE("J matrix") {
    CHECK(j_matrix(1) == c2(0.0, 1.0, -1.0, 0.0));
    const CMatrix j = j_matrix(3);
    CHECK(j * j == -CMatrix::identity(6));
    CHECK(transpose(j) == -j);
}

TEST_CASE("real representation") {
    const RMatrix expected(4, 4, {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
    CHECK(real_rep(q1(kI)) == expected);
    CHECK(real_rep(QMatrix::identity(2)) == RMatrix::identity(8));
    SplitMix64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const QMatrix u = random_qmatrix(rng, 3, 3), q = random_qmatrix(rng, 3, 1);
        const RMatrix ur = real_rep(u);
        const auto lhs = real_vec(u * q);
        const auto qr = real_vec(q);
        for (std::size_t i = 0; i < 12; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < 12; ++j) s += ur(i, j) * qr[j];
            CHECK(std::abs(lhs[i] - s) < 1e-12);
        }
    }
}

TEST_CASE("coordinate round trip") {
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
    const QMatrix q = from_coords(x);
    CHECK(q(1, 0) == Quaternion{5, 6, 7, 8});
    CHECK(to_coords(q) == x);
    CHECK(block_index(5, 2) == 3);
}

TEST_CASE("complex determinant") {
    CHECK(std::abs(det(c2(2.0, Complex{0, 1}, Complex{0, -1}, 2.0)) - 3.0) < 1e-14);
    CHECK(std::abs(det(CMatrix(3, 3))) == 0.0);
}
