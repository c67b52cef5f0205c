#include "doctest.h"

#include "quatla/exterior.hpp"
#include "quatla/random.hpp"

using namespace quatla;

namespace {

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

TEST_CASE("masks and signs") {
    const int idx[] = {0, 2, 5};
    CHECK(mask_of(idx) == 0b100101u);
    CHECK(indices_of(0b100101u) == std::vector<int>{0, 2, 5});
    CHECK(grade_of(0b100101u) == 3);
    CHECK(wedge_sign(0b01, 0b10) == 1);
    CHECK(wedge_sign(0b10, 0b01) == -1);
}

TEST_CASE("wedge examples") {
    const Form a = Form::monomial(2, {0, 1}), b = Form::monomial(2, {2, 3});
    const Form ab = wedge(a, b);
    CHECK(ab.coeff(0b1111) == Complex{1.0});
    CHECK(wedge(Form::monomial(1, {0}), Form::monomial(1, {0})).is_zero());
    CHECK(max_abs_diff(wedge(beta_n(2), beta_n(2)), 2.0 * omega_2n(2)) == 0.0);
    CHECK(Form::monomial(2, {1, 0}).coeff(0b11) == Complex{-1.0});
    CHECK(Form::monomial(2, {1, 1}).is_zero());
}

TEST_CASE("rho_j examples") {
    CHECK(rho_j(Form::monomial(1, {0})) == Form::monomial(1, {1}));
    CHECK(rho_j(Form::monomial(1, {1})) == Form::monomial(1, {0}, -1.0));
    CHECK(rho_j(beta_n(3)) == beta_n(3));
    const Complex c{2.0, 3.0};
    CHECK(rho_j(Form::monomial(1, {0, 1}, c)) == Form::monomial(1, {0, 1}, std::conj(c)));
}

TEST_CASE("reality") {
    CHECK(is_real_form(beta_n(3)));
    CHECK(is_real_form(omega_2n(3)));
    CHECK_FALSE(is_real_form(Form::monomial(1, {0, 1}, Complex{0, 1})));
    CHECK_THROWS_AS(is_real_form(Form::monomial(1, {0})), GradeError);
}

TEST_CASE("matrix and 2-form dictionary") {
    CHECK(matrix_to_2form(j_matrix(1)) == Form::monomial(1, {0, 1}, 2.0));
    SplitMix64 rng(8);
    const CMatrix s = random_skew(rng, 6);
    CHECK(max_abs(form_to_matrix(matrix_to_2form(s)) - s) <= 1e-14);
    CHECK(matrix_to_2form(tau(QMatrix(1, 1, {Quaternion{3, 0, 0, 0}})) * j_matrix(1)) ==
          Form::monomial(1, {0, 1}, 6.0));
    CHECK_THROWS_AS(matrix_to_2form(CMatrix::identity(2)), NotSkew);
}

TEST_CASE("hh_to_2form") {
    CHECK(hh_to_2form(QMatrix::identity(3)) == 2.0 * beta_n(3));
    const Form f = hh_to_2form(diag({3, -1}));
    CHECK(f == Form::monomial(2, {0, 2}, 6.0) + Form::monomial(2, {1, 3}, -2.0));
    SplitMix64 rng(1);
    CHECK(is_real_form(hh_to_2form(random_hyperhermitian(rng, 4))));
    CHECK_THROWS_AS(hh_to_2form(QMatrix(1, 1, {Quaternion{0, 1, 0, 0}})), NotHyperhermitian);
}

TEST_CASE("Omega and beta") {
    CHECK(omega_2n(1) == Form::monomial(1, {0, 1}));
    CHECK(omega_2n(2).coeff(0b1111) == Complex{-1.0});
    CHECK(beta_n(4).terms().size() == 4u);
    CHECK(max_abs_diff(wedge_power(beta_n(3), 3), 6.0 * omega_2n(3)) == 0.0);
}

TEST_CASE("delta_n") {
    const std::vector<CMatrix> one{j_matrix(1)};
    CHECK(delta_n(one) == Complex{2.0});
    const std::vector<Form> betas(3, beta_n(3));
    CHECK(delta_n_forms(betas) == Complex{6.0});
    const std::vector<CMatrix> nonreal{CMatrix(2, 2, {0.0, Complex{0, 1}, Complex{0, -1}, 0.0})};
    CHECK_THROWS_AS(delta_n(nonreal), NotReal);
    const std::vector<CMatrix> wrong(2, j_matrix(1));
    CHECK_THROWS_AS(delta_n(wrong), ShapeError);
}

TEST_CASE("normalization examples") {
    const SpectralData a = normalize_real_2form(2.0 * beta_n(3));
    for (double v : a.nu) CHECK(v == doctest::Approx(1.0));
    const SpectralData b = normalize_real_2form(Form::monomial(1, {0, 1}, 5.0));
    CHECK(b.nu[0] == doctest::Approx(2.5));
    SplitMix64 rng(6);
    const QMatrix m = random_hyperhermitian(rng, 4);
    const Form f = hh_to_2form(m);
    const SpectralData c = normalize_real_2form(f);
    const SpectralData d = diagonalize_hyperhermitian(m);
    for (std::size_t l = 0; l < 4; ++l) CHECK(c.nu[l] == doctest::Approx(d.nu[l]));
    CHECK(normalization_residual(f, c) < 1e-10);
    CHECK_THROWS_AS(normalize_real_2form(Form::monomial(1, {0, 1}, Complex{0, 1})), NotReal);
}

TEST_CASE("strong positivity") {
    CHECK(is_strongly_positive_2form(2.0 * beta_n(2)));
    CHECK_FALSE(is_strongly_positive_2form(Form(2, 2)));
    CHECK_FALSE(is_strongly_positive_2form(hh_to_2form(diag({1, -1}))));
    CHECK(is_strongly_positive_2form(hh_to_2form(diag({1, 0}))));
}

TEST_CASE("actions and pullbacks") {
    SplitMix64 rng(12);
    const Form f = random_form(rng, 3, 2, 5);
    CHECK(act_matrix_on_form(CMatrix::identity(6), f) == f);
    const QMatrix e = random_unitary(rng, 3);
    CHECK(max_abs_diff(act_matrix_on_form(tau(e), beta_n(3)), beta_n(3)) < 1e-12);
    CHECK(max_abs_diff(act_matrix_on_form(tau(e), omega_2n(3)), omega_2n(3)) < 1e-12);

    QMatrix proj(1, 2);
    proj(0, 0) = Quaternion{1, 0, 0, 0};
    const std::vector<QMatrix> etas{proj};
    CHECK(elementary_strongly_positive(etas, 2) == Form::monomial(2, {0, 2}));
    QMatrix p1(1, 2);
    p1(0, 1) = Quaternion{1, 0, 0, 0};
    const std::vector<QMatrix> both{proj, p1};
    CHECK(elementary_strongly_positive(both, 2) == omega_2n(2));
    const std::vector<QMatrix> scaled{3.0 * proj};
    CHECK(max_abs_diff(elementary_strongly_positive(scaled, 2), 9.0 * Form::monomial(2, {0, 2})) < 1e-14);
    CHECK_THROWS_AS(pullback(QMatrix(2, 3), Form::monomial(1, {0})), ShapeError);
}
