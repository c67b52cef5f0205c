#pragma once

// Right H-linear changes of variables q -> Uq acting on fields and forms.

#include <span>
#include <vector>

#include "quatla/exterior.hpp"
#include "quatla/fields.hpp"

namespace quatla {

/// Matrix of x -> (U from_coords(x)) in the interleaved x-order; this is
/// U^R from real_rep conjugated by the x-order/block-order permutation.
RMatrix real_rep_x(const QMatrix& u);

/// Interleaved coordinates of U q.
std::vector<double> apply_quaternionic(const QMatrix& u, std::span<const double> x);

/// q -> e(Uq).
FieldExpr pullback_field(const QMatrix& u, const FieldExpr& e);

/// sum_A nabla_{A alpha} u(q) w^A from a jet at q.
Form d_point(Prime alpha, const Jet2& jet, int n);

/// max over (A, alpha) of |nabla_{A alpha}(e o U)(q) - sum_B conj(tau(U))_BA (nabla_{B alpha} e)(Uq)|.
double chain_rule_check(const QMatrix& u, const FieldExpr& e, std::span<const double> q);

/// conj(tau(U)), the matrix sending w^A to the transformed basis element.
/// Throws SingularError when tau(U) is numerically singular.
CMatrix basis_change(const QMatrix& u);

enum class InvariantOp { d0, d1, baston };

/// Largest coefficient gap between the operator applied to e o U at q and
/// the operator applied to e at Uq written in the transformed basis.
double invariance_check(const QMatrix& u, const FieldExpr& e, std::span<const double> q, InvariantOp which);

} // namespace quatla
