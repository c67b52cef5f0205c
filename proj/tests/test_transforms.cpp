#include "doctest.h"

#include "quatla/baston.hpp"
#include "quatla/random.hpp"
#include "quatla/transforms.hpp"

using namespace quatla;

TEST_CASE("x-order real representation") {
    SplitMix64 rng(1);
    const QMatrix u = random_qmatrix(rng, 3, 3);
    const RMatrix l = real_rep_x(u);
    const auto x = random_point(rng, 12);
    const auto ux = apply_quaternionic(u, x);
    for (std::size_t i = 0; i < 12; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 12; ++j) s += l(i, j) * x[j];
        CHECK(std::abs(s - ux[i]) < 1e-12);
    }
    CHECK(real_rep_x(QMatrix::identity(2)) == RMatrix::identity(8));
}

TEST_CASE("pullback of fields") {
    const FieldExpr x0 = FieldExpr::coord(0);
    const std::vector<double> q{0.5, 2.0, -1.0, 3.0};
    CHECK(pullback_field(QMatrix::identity(1), x0).evaluate(q) == 0.5);
    CHECK(pullback_field(QMatrix(1, 1, {Quaternion{0, 1, 0, 0}}), x0).evaluate(q) == -2.0);
    SplitMix64 rng(2);
    const QMatrix e = random_unitary(rng, 2);
    const auto p = random_point(rng, 8);
    CHECK(pullback_field(e, norm_sq_expr(2)).evaluate(p) == doctest::Approx(norm_sq_expr(2).evaluate(p)));
}

TEST_CASE("chain rule") {
    const std::vector<double> q{0.5, 2.0, -1.0, 3.0};
    const FieldExpr x0 = FieldExpr::coord(0);
    CHECK(chain_rule_check(QMatrix::identity(1), x0 * x0, q) == 0.0);
    CHECK(chain_rule_check(QMatrix(1, 1, {Quaternion{0, 0, 1, 0}}), x0, q) <= 1e-12);
    SplitMix64 rng(3);
    const QMatrix u = random_gl(rng, 2);
    const FieldExpr e = to_expr(random_real_polynomial(rng, 8, 3, 10, false));
    CHECK(chain_rule_check(u, e, random_point(rng, 8)) <= 1e-9);
}

TEST_CASE("basis change") {
    CHECK(basis_change(QMatrix::identity(2)) == CMatrix::identity(4));
    CHECK_THROWS_AS(basis_change(QMatrix(2, 2)), SingularError);
    SplitMix64 rng(4);
    const QMatrix e = random_unitary(rng, 3);
    CHECK(max_abs_diff(act_matrix_on_form(basis_change(e), beta_n(3)), beta_n(3)) < 1e-12);
    CHECK(max_abs_diff(act_matrix_on_form(basis_change(e), omega_2n(3)), omega_2n(3)) < 1e-12);
}

TEST_CASE("invariance") {
    const std::vector<double> q{0.5, 2.0, -1.0, 3.0, 0.1, 0.2, 0.3, 0.4};
    SplitMix64 rng(5);
    const FieldExpr e = to_expr(random_real_polynomial(rng, 8, 2, 10, false));
    for (auto op : {InvariantOp::d0, InvariantOp::d1, InvariantOp::baston})
        CHECK(invariance_check(QMatrix::identity(2), e, q, op) == 0.0);
    const QMatrix u = random_unitary(rng, 2);
    CHECK(invariance_check(u, norm_sq_expr(2), q, InvariantOp::baston) < 1e-12);
    CHECK(max_abs_diff(baston_point(pullback_field(u, norm_sq_expr(2)), q), 8.0 * beta_n(2)) < 1e-12);
    const QMatrix g = random_gl(rng, 2);
    CHECK(invariance_check(g, e, q, InvariantOp::baston) < 1e-8);
}
