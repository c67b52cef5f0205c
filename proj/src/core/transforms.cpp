#include "quatla/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "quatla/baston.hpp"
#include "quatla/moore.hpp"

namespace quatla {

namespace {

std::size_t require_square_half_dim(const QMatrix& u) {
    if (!u.is_square() || u.rows() == 0) throw ShapeError("expected a nonempty square quaternion matrix");
    return u.rows();
}

void require_point(const QMatrix& u, std::span<const double> q) {
    if (q.size() != 4 * u.rows()) throw ShapeError("point must have 4n coordinates");
}

} // namespace

RMatrix real_rep_x(const QMatrix& u) {
    const std::size_t n = require_square_half_dim(u);
    const RMatrix block = real_rep(u);
    RMatrix out(4 * n, 4 * n);
    for (std::size_t j = 0; j < 4 * n; ++j)
        for (std::size_t k = 0; k < 4 * n; ++k) out(j, k) = block(block_index(j, n), block_index(k, n));
    return out;
}

std::vector<double> apply_quaternionic(const QMatrix& u, std::span<const double> x) {
    require_square_half_dim(u);
    require_point(u, x);
    return to_coords(u * from_coords(x));
}

FieldExpr pullback_field(const QMatrix& u, const FieldExpr& e) {
    const RMatrix l = real_rep_x(u);
    std::vector<FieldExpr> repl;
    repl.reserve(l.rows());
    for (std::size_t j = 0; j < l.rows(); ++j) {
        FieldExpr s = FieldExpr::constant(0.0);
        for (std::size_t k = 0; k < l.cols(); ++k)
            if (l(j, k) != 0.0) s = s + FieldExpr::constant(l(j, k)) * FieldExpr::coord(static_cast<int>(k));
        repl.push_back(s);
    }
    return e.substitute(repl);
}

Form d_point(Prime alpha, const Jet2& jet, int n) {
    if (jet.dim() != static_cast<std::size_t>(4 * n)) throw ShapeError("d_point: jet dimension must be 4n");
    std::vector<Complex> coeffs(static_cast<std::size_t>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (const auto& t : nabla_terms(n, a, alpha))
            coeffs[static_cast<std::size_t>(a)] += t.coeff * jet.grad[static_cast<std::size_t>(t.var)];
    return Form::one_form(n, coeffs);
}

double chain_rule_check(const QMatrix& u, const FieldExpr& e, std::span<const double> q) {
    const std::size_t n = require_square_half_dim(u);
    require_point(u, q);
    const int ni = static_cast<int>(n);
    const Jet2 left = pullback_field(u, e).jet(q);
    const std::vector<double> uq = apply_quaternionic(u, q);
    const Jet2 right = e.jet(uq);
    const CMatrix t = conj(tau(u));
    double res = 0.0;
    for (Prime alpha : {Prime::zero, Prime::one}) {
        const Form dl = d_point(alpha, left, ni);
        const Form dr = d_point(alpha, right, ni);
        for (std::size_t a = 0; a < 2 * n; ++a) {
            Complex s = 0.0;
            for (std::size_t b = 0; b < 2 * n; ++b) s += t(b, a) * dr.coeff(IndexMask{1} << b);
            res = std::max(res, std::abs(dl.coeff(IndexMask{1} << a) - s));
        }
    }
    return res;
}

CMatrix basis_change(const QMatrix& u) {
    require_square_half_dim(u);
    const CMatrix t = tau(u);
    const HermitianEigen eig = hermitian_eigen(adjoint(t) * t);
    const double smax = std::sqrt(std::max(0.0, eig.values.back()));
    const double smin = std::sqrt(std::max(0.0, eig.values.front()));
    if (smin <= 1e-10 * std::max(1.0, smax)) throw SingularError("basis_change: matrix is numerically singular");
    return conj(t);
}

double invariance_check(const QMatrix& u, const FieldExpr& e, std::span<const double> q, InvariantOp which) {
    const std::size_t n = require_square_half_dim(u);
    require_point(u, q);
    const int ni = static_cast<int>(n);
    const CMatrix bc = basis_change(u);
    const FieldExpr pulled = pullback_field(u, e);
    const std::vector<double> uq = apply_quaternionic(u, q);
    Form lhs(ni, 0), rhs(ni, 0);
    switch (which) {
    case InvariantOp::d0:
    case InvariantOp::d1: {
        const Prime alpha = which == InvariantOp::d0 ? Prime::zero : Prime::one;
        lhs = d_point(alpha, pulled.jet(q), ni);
        rhs = d_point(alpha, e.jet(uq), ni);
        break;
    }
    case InvariantOp::baston:
        lhs = baston_point(pulled, q);
        rhs = baston_point(e, uq);
        break;
    }
    return max_abs_diff(lhs, act_matrix_on_form(bc, rhs));
}

} // namespace quatla
