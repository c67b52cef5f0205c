#include "doctest.h"

#include "quatla/fields.hpp"
#include "quatla/random.hpp"

using namespace quatla;

namespace {

const Complex kI{0.0, 1.0};

Polynomial x(int vars, int k) { return Polynomial::coordinate(vars, k); }

} // namespace

TEST_CASE("polynomial arithmetic") {
    const Polynomial a = x(2, 0) + 2.0 * x(2, 1);
    const Polynomial sq = a * a;
    CHECK(sq.degree() == 2);
    CHECK(sq.coeff({1, 1}) == Complex{4.0});
    CHECK(sq.derivative(1).coeff({1, 0}) == Complex{4.0});
    CHECK((a - a).is_zero());
    const double pt[] = {1.0, 2.0};
    CHECK(sq.evaluate(pt) == Complex{25.0});
    CHECK(conj(kI * a) == -1.0 * kI * a);
    CHECK_THROWS_AS(x(2, 0) + x(3, 0), ShapeError);
}

TEST_CASE("nabla on z coordinates") {
    const auto z = z_coords(1);
    CHECK(nabla(1, 0, Prime::zero, z[0][0]) == Polynomial::constant(4, 2.0));
    CHECK(nabla(1, 0, Prime::zero, z[0][1]).is_zero());
    CHECK(z[0][0] == x(4, 0) - kI * x(4, 1));
    CHECK(z[1][1] == x(4, 0) + kI * x(4, 1));
    const Polynomial r2 = norm_sq(1);
    for (int a = 0; a < 2; ++a)
        for (int al = 0; al < 2; ++al)
            CHECK(nabla(1, a, static_cast<Prime>(al), r2) ==
                  2.0 * conj(z[static_cast<std::size_t>(a)][static_cast<std::size_t>(al)]));
    CHECK(z[0][0] * z[1][1] - z[1][0] * z[0][1] == r2);
}

TEST_CASE("nabla operators commute") {
    SplitMix64 rng(21);
    const Polynomial p = random_real_polynomial(rng, 8, 4, 10, true);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(nabla(2, a, Prime::zero, nabla(2, b, Prime::one, p)) ==
                  nabla(2, b, Prime::one, nabla(2, a, Prime::zero, p)));
}

TEST_CASE("jet examples") {
    const std::vector<double> q{0.3, -1.0, 2.0, 0.5, 1.5, 0.0, -0.7, 0.2};
    const Jet2 j = norm_sq_expr(2).jet(q);
    CHECK(max_abs(j.hessian_matrix() - 2.0 * RMatrix::identity(8)) == 0.0);

    const std::vector<double> origin(4, 0.0);
    const Jet2 f = fundamental_expr(1, 1.0).jet(origin);
    CHECK(f.value == -1.0);
    for (double g : f.grad) CHECK(g == 0.0);
    CHECK(max_abs(f.hessian_matrix() - 2.0 * RMatrix::identity(4)) < 1e-15);

    const std::vector<double> p{3.0, 5.0, 0.0, 0.0};
    const Jet2 m = (FieldExpr::coord(0) * FieldExpr::coord(1)).jet(p);
    CHECK(m.grad[0] == 5.0);
    CHECK(m.grad[1] == 3.0);
    CHECK(m.hessian(0, 1) == 1.0);
    CHECK(m.hessian(1, 0) == 1.0);
}

TEST_CASE("powers and quotients") {
    const std::vector<double> p{2.0};
    const FieldExpr x0 = FieldExpr::coord(0);
    const Jet2 cube = FieldExpr::pow(x0, 3).jet(p);
    CHECK(cube.value == 8.0);
    CHECK(cube.grad[0] == 12.0);
    CHECK(cube.hessian(0, 0) == 12.0);
    const Jet2 inv = FieldExpr::pow(x0, -2).jet(p);
    CHECK(inv.value == doctest::Approx(0.25));
    CHECK(inv.grad[0] == doctest::Approx(-0.25));
    CHECK(inv.hessian(0, 0) == doctest::Approx(6.0 / 16.0));
    const Jet2 q = (FieldExpr::constant(1.0) / x0).jet(p);
    CHECK(q.hessian(0, 0) == doctest::Approx(0.25));
    const std::vector<double> zero{0.0};
    CHECK_THROWS_AS((FieldExpr::constant(1.0) / x0).jet(zero), DivisionByZeroAt);
    try {
        (FieldExpr::constant(1.0) / x0).evaluate(zero);
    } catch (const DivisionByZeroAt& e) {
        CHECK(e.point() == zero);
    }
}

TEST_CASE("fundamental expression and substitution") {
    const std::vector<double> origin(8, 0.0);
    CHECK(fundamental_expr(2, 1.0).evaluate(origin) == -1.0);
    CHECK_THROWS_AS(fundamental_expr(1, 0.0), std::invalid_argument);
    const std::vector<FieldExpr> repl{FieldExpr::constant(2.0), FieldExpr::coord(0)};
    const FieldExpr e = FieldExpr::coord(0) * FieldExpr::coord(1);
    const std::vector<double> pt{3.0};
    CHECK(e.substitute(repl).evaluate(pt) == 6.0);
    CHECK(e.max_var() == 1);
}

TEST_CASE("to_expr agrees with evaluation") {
    SplitMix64 rng(30);
    const Polynomial p = random_real_polynomial(rng, 4, 4, 6, false);
    const auto pt = random_point(rng, 4);
    CHECK(to_expr(p).evaluate(pt) == doctest::Approx(p.evaluate(pt).real()));
    CHECK_THROWS_AS(to_expr(kI * x(4, 0)), std::invalid_argument);
}
