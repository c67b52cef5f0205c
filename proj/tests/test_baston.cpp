#include "doctest.h"

#include <cmath>

#include "quatla/baston.hpp"
#include "quatla/random.hpp"

using namespace quatla;

namespace {

FormField one_form_field(int n, const std::vector<Polynomial>& coeffs) {
    FormField f(n, 1);
    for (int a = 0; a < 2 * n; ++a) f.add(IndexMask{1} << a, coeffs[static_cast<std::size_t>(a)]);
    return f;
}

} // namespace

TEST_CASE("d on the squared norm") {
    for (int n = 1; n <= 3; ++n) {
        const auto z = z_coords(n);
        const FormField r2 = FormField::scalar(norm_sq(n));
        std::vector<Polynomial> d1(static_cast<std::size_t>(2 * n), Polynomial(4 * n));
        for (int l = 0; l < n; ++l) {
            d1[static_cast<std::size_t>(l)] = -2.0 * z[static_cast<std::size_t>(n + l)][0];
            d1[static_cast<std::size_t>(n + l)] = 2.0 * z[static_cast<std::size_t>(l)][0];
        }
        CHECK(d_op(Prime::one, r2) == one_form_field(n, d1));
        for (int alpha = 0; alpha < 2; ++alpha) {
            std::vector<Polynomial> d(static_cast<std::size_t>(2 * n), Polynomial(4 * n));
            for (int a = 0; a < 2 * n; ++a)
                d[static_cast<std::size_t>(a)] = 2.0 * conj(z[static_cast<std::size_t>(a)][static_cast<std::size_t>(alpha)]);
            CHECK(d_op(static_cast<Prime>(alpha), r2) == one_form_field(n, d));
        }
    }
    CHECK(d_op(Prime::zero, FormField::scalar(Polynomial::constant(4, 3.0))).is_zero());
}

TEST_CASE("Baston operator examples") {
    for (int n = 1; n <= 3; ++n) {
        const FormField d = baston_poly(norm_sq(n));
        const std::vector<double> pt(static_cast<std::size_t>(4 * n), 0.25);
        CHECK(d.evaluate(pt) == 8.0 * beta_n(n));
    }
    SplitMix64 rng(3);
    CHECK(baston_poly(random_real_polynomial(rng, 8, 1, 5, true)).is_zero());

    const std::vector<double> origin(4, 0.0);
    const Form w = baston_point(fundamental_expr(1, 1.0), origin);
    CHECK(max_abs(form_to_matrix(w) - 4.0 * j_matrix(1)) < 1e-14);
    const std::vector<Form> one{w};
    CHECK(delta_n_forms(one).real() == doctest::Approx(8.0));
}

TEST_CASE("closedness") {
    CHECK(is_closed(FormField::scalar(Polynomial::constant(8, 1.0))));
    CHECK_FALSE(is_closed(FormField::scalar(norm_sq(2))));
    CHECK(is_closed(baston_poly(norm_sq(2))));
}

TEST_CASE("quaternionic Hessian examples") {
    SplitMix64 rng(4);
    const auto q = random_point(rng, 12);
    const QMatrix h = quaternionic_hessian(norm_sq_expr(3), q);
    CHECK(max_abs(h - 8.0 * QMatrix::identity(3)) < 1e-13);

    const FieldExpr x0 = FieldExpr::coord(0);
    const std::vector<double> p{0.4, 1.0, -2.0, 3.0};
    const QMatrix hx = quaternionic_hessian(x0 * x0, p);
    CHECK(max_abs(hx - 2.0 * QMatrix::identity(1)) < 1e-14);

    const Polynomial u = random_real_polynomial(rng, 8, 2, 10, false);
    const auto a = random_point(rng, 8), b = random_point(rng, 8);
    CHECK(max_abs(quaternionic_hessian(u, a) - quaternionic_hessian(u, b)) < 1e-12);
    CHECK(max_abs(quaternionic_hessian(u, a) - quaternionic_hessian(to_expr(u), a)) < 1e-12);
}

TEST_CASE("Monge-Ampere examples") {
    for (int n = 1; n <= 3; ++n) {
        const std::vector<FieldExpr> us(static_cast<std::size_t>(n), norm_sq_expr(n));
        const std::vector<double> pt(static_cast<std::size_t>(4 * n), 0.5);
        CHECK(ma_mixed(us, pt) == doctest::Approx(std::pow(8.0, n)));
    }
    const std::vector<double> pt(8, 1.0);
    const std::vector<FieldExpr> lin{norm_sq_expr(2), FieldExpr::coord(3) + FieldExpr::constant(2.0)};
    CHECK(std::abs(ma_mixed(lin, pt)) < 1e-12);
    const FieldExpr x0 = FieldExpr::coord(0), x4 = FieldExpr::coord(4);
    const std::vector<FieldExpr> diag{x0 * x0, x4 * x4};
    CHECK(ma_mixed(diag, pt) == doctest::Approx(2.0));
    const std::vector<FieldExpr> too_many(3, norm_sq_expr(2));
    CHECK_THROWS_AS(ma_mixed(too_many, pt), ShapeError);
}

TEST_CASE("fundamental solution examples") {
    const std::vector<double> origin(4, 0.0);
    const auto a = fundamental_check(1, 1.0, origin);
    CHECK(a.lhs == doctest::Approx(8.0));
    CHECK(a.rhs == 8.0);
    const std::vector<double> unit{0.0, 1.0, 0.0, 0.0};
    const auto b = fundamental_check(1, 1.0, unit);
    CHECK(b.rhs == 1.0);
    CHECK(b.lhs == doctest::Approx(1.0));
    const std::vector<double> pt{0.3, -0.2, 0.1, 0.5, 0.0, 0.7, -0.4, 0.2};
    const auto c = fundamental_check(2, 0.5, pt);
    CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-10));
}
