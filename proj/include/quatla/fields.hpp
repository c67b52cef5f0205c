#pragma once

// Scalar fields on R^{4n} = H^n in the coordinates x_0..x_{4n-1}, where
// q_l = x_{4l} + x_{4l+1} i + x_{4l+2} j + x_{4l+3} k.
//
// Two backends: exact complex-coefficient polynomials (closed under the
// nabla operators) and expression trees evaluated with second-order jets.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "quatla/quaternion.hpp"

namespace quatla {

/// Selects the primed index of nabla_{A alpha'} / z^{A alpha'}.
enum class Prime : int { zero = 0, one = 1 };

using Exponent = std::vector<std::uint8_t>;

class Polynomial {
public:
    using Terms = std::map<Exponent, Complex>;

    explicit Polynomial(int num_vars);

    static Polynomial constant(int num_vars, Complex c);
    static Polynomial coordinate(int num_vars, int var);
    /// c * prod x_i^{exp_i}.
    static Polynomial monomial(int num_vars, Exponent exp, Complex c = 1.0);

    int num_vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const;

    Complex coeff(const Exponent& e) const;
    void add(const Exponent& e, Complex c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(Complex c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(int var) const;
    Complex evaluate(std::span<const double> x) const;

private:
    void require_compatible(const Polynomial& o) const;

    int vars_;
    Terms terms_;
};

Polynomial conj(const Polynomial& p);
double max_abs_coeff(const Polynomial& p);

/// One real-coordinate partial derivative with its complex weight.
struct NablaTerm {
    int var;
    Complex coeff;
};

/// nabla_{A alpha'} as a combination of two partial derivatives:
///   nabla_{l0'} = d_{4l} + i d_{4l+1},     nabla_{l1'} = -d_{4l+2} - i d_{4l+3},
///   nabla_{(n+l)0'} = d_{4l+2} - i d_{4l+3}, nabla_{(n+l)1'} = d_{4l} - i d_{4l+1}.
std::array<NablaTerm, 2> nabla_terms(int n, int a, Prime alpha);

Polynomial nabla(int n, int a, Prime alpha, const Polynomial& p);

/// z^{A alpha'} table, indexed [A][alpha].
std::vector<std::array<Polynomial, 2>> z_coords(int n);

/// ||q||^2 = sum x_j^2 on 4n variables.
Polynomial norm_sq(int n);

/// Value, gradient and packed upper-triangular Hessian at a point.
struct Jet2 {
    double value = 0.0;
    std::vector<double> grad;
    std::vector<double> hess; ///< packed rows, see kernels::packed_row_offset

    explicit Jet2(std::size_t dim = 0);
    std::size_t dim() const noexcept { return grad.size(); }
    double hessian(std::size_t i, std::size_t j) const;
    RMatrix hessian_matrix() const;
};

/// Immutable expression tree over {const, coord, add, sub, mul, div, pow}.
class FieldExpr {
public:
    enum class Kind { constant, coord, add, sub, mul, div, pow };

    static FieldExpr constant(double c);
    static FieldExpr coord(int var);
    /// Integer power; negative exponents go through the reciprocal.
    static FieldExpr pow(const FieldExpr& base, int exponent);

    friend FieldExpr operator+(const FieldExpr& a, const FieldExpr& b);
    friend FieldExpr operator-(const FieldExpr& a, const FieldExpr& b);
    friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b);
    friend FieldExpr operator/(const FieldExpr& a, const FieldExpr& b);

    Kind kind() const;
    double value() const;     ///< constant nodes
    int var() const;          ///< coord nodes
    int exponent() const;     ///< pow nodes
    const FieldExpr& lhs() const;
    const FieldExpr& rhs() const; ///< binary nodes

    /// Largest coordinate index used, or -1.
    int max_var() const;

    double evaluate(std::span<const double> x) const;
    /// Throws DivisionByZeroAt when a denominator vanishes.
    Jet2 jet(std::span<const double> x) const;

    /// Replaces every coord(j) by replacement[j].
    FieldExpr substitute(std::span<const FieldExpr> replacement) const;

private:
    struct Node;
    explicit FieldExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline Jet2 jet2_eval(const FieldExpr& e, std::span<const double> x) { return e.jet(x); }

/// Real polynomial as an expression. Throws std::invalid_argument on a
/// non-real coefficient.
FieldExpr to_expr(const Polynomial& p);

/// -1 / (||q||^2 + eps); eps must be positive.
FieldExpr fundamental_expr(int n, double eps);
FieldExpr norm_sq_expr(int n);

} // namespace quatla
