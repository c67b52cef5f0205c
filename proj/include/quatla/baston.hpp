#pragma once

// d0, d1 on polynomial form-fields, the Baston operator, the quaternionic
// Hessian and the (mixed) quaternionic Monge-Ampere operator.

#include <map>
#include <span>
#include <utility>

#include "quatla/exterior.hpp"
#include "quatla/fields.hpp"

namespace quatla {

/// sum_I f_I w^I with polynomial coefficients on R^{4n}.
class FormField {
public:
    using Terms = std::map<IndexMask, Polynomial>;

    FormField(int half_dim, int grade);
    /// Degree-0 field.
    static FormField scalar(const Polynomial& u);
    static FormField monomial(int half_dim, std::span<const int> indices, const Polynomial& f);

    int half_dim() const noexcept { return n_; }
    int grade() const noexcept { return k_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Polynomial coeff(IndexMask key) const;
    void add(IndexMask key, const Polynomial& f);

    FormField& operator+=(const FormField& o);
    FormField& operator-=(const FormField& o);
    friend FormField operator+(FormField a, const FormField& b) { return a += b; }
    friend FormField operator-(FormField a, const FormField& b) { return a -= b; }

    friend bool operator==(const FormField&, const FormField&) = default;

    /// Pointwise value at interleaved coordinates x (length 4n).
    Form evaluate(std::span<const double> x) const;

private:
    void require_compatible(const FormField& o) const;

    int n_;
    int k_;
    Terms terms_;
};

FormField wedge(const FormField& f, const FormField& g);
/// Largest coefficient modulus over all polynomial coefficients.
double max_abs_coeff(const FormField& f);

/// d_alpha F = sum_A sum_I nabla_{A alpha} f_I w^A ^ w^I.
FormField d_op(Prime alpha, const FormField& f);
/// d0 F = 0 and d1 F = 0.
bool is_closed(const FormField& f);

/// Delta u = d0 d1 u, so the key (A,B), A < B, carries 2 Delta_AB u.
FormField baston_poly(const Polynomial& u);

/// (Delta_AB u) as a complex skew 2n x 2n matrix from a real Hessian in
/// x-order, expanding the nabla products term by term.
CMatrix baston_matrix(const RMatrix& hessian, int n);
CMatrix baston_matrix(const Jet2& jet, int n);

/// Baston 2-form of e at q (length 4n). Throws DivisionByZeroAt.
Form baston_point(const FieldExpr& e, std::span<const double> q);

/// (d^2 u / d qbar_l d q_k) = 2 (Delta_{l,n+k} u + Delta_{lk} u j).
QMatrix quaternionic_hessian(const RMatrix& hessian, int n);
QMatrix quaternionic_hessian(const FieldExpr& e, std::span<const double> q);
/// Symbolic route; the polynomial must have real coefficients.
QMatrix quaternionic_hessian(const Polynomial& u, std::span<const double> q);

/// Mixed discriminant of the quaternionic Hessians of n fields at q.
double ma_mixed(std::span<const FieldExpr> us, std::span<const double> q, double tol = kDefaultTol);

struct FundamentalValues {
    double lhs;
    double rhs;
};

/// lhs: Delta_n coefficient of (Delta(-1/(|q|^2+eps)))^n,
/// rhs: 8^n n! eps / (|q|^2+eps)^{2n+1}.
FundamentalValues fundamental_check(int n, double eps, std::span<const double> q);

} // namespace quatla
