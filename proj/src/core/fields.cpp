#include "quatla/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "quatla/kernels.hpp"

namespace quatla {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(int num_vars) : vars_(num_vars) {
    if (num_vars < 0) throw ShapeError("polynomial: negative variable count");
}

Polynomial Polynomial::constant(int num_vars, Complex c) {
    Polynomial p(num_vars);
    p.add(Exponent(static_cast<std::size_t>(num_vars), 0), c);
    return p;
}

Polynomial Polynomial::coordinate(int num_vars, int var) {
    if (var < 0 || var >= num_vars) throw ShapeError("polynomial: coordinate index out of range");
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    Polynomial p(num_vars);
    p.add(e, 1.0);
    return p;
}

Polynomial Polynomial::monomial(int num_vars, Exponent exp, Complex c) {
    Polynomial p(num_vars);
    p.add(exp, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Complex Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Complex{} : it->second;
}

void Polynomial::add(const Exponent& e, Complex c) {
    if (static_cast<int>(e.size()) != vars_) throw ShapeError("polynomial: exponent length mismatch");
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

void Polynomial::require_compatible(const Polynomial& o) const {
    if (vars_ != o.vars_) throw ShapeError("polynomials have different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial out(a.vars_);
    Exponent e(static_cast<std::size_t>(a.vars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out.add(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= vars_) throw ShapeError("polynomial: derivative variable out of range");
    const auto v = static_cast<std::size_t>(var);
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent d = e;
        d[v] = static_cast<std::uint8_t>(e[v] - 1);
        out.add(d, static_cast<double>(e[v]) * c);
    }
    return out;
}

Complex Polynomial::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != vars_) throw ShapeError("polynomial: point has the wrong dimension");
    Complex s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = 1.0;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int p = 0; p < e[i]; ++p) m *= x[i];
        s += c * m;
    }
    return s;
}

Polynomial conj(const Polynomial& p) {
    Polynomial out(p.num_vars());
    for (const auto& [e, c] : p.terms()) out.add(e, std::conj(c));
    return out;
}

double max_abs_coeff(const Polynomial& p) {
    double r = 0.0;
    for (const auto& [e, c] : p.terms()) r = std::max(r, std::abs(c));
    return r;
}

// ---------------------------------------------------------------- nabla / z

std::array<NablaTerm, 2> nabla_terms(int n, int a, Prime alpha) {
    if (a < 0 || a >= 2 * n) throw ShapeError("nabla: index A out of range");
    const Complex i{0.0, 1.0};
    const int l = a < n ? a : a - n;
    const int x0 = 4 * l, x1 = 4 * l + 1, x2 = 4 * l + 2, x3 = 4 * l + 3;
    if (a < n) {
        if (alpha == Prime::zero) return {{{x0, 1.0}, {x1, i}}};
        return {{{x2, -1.0}, {x3, -i}}};
    }
    if (alpha == Prime::zero) return {{{x2, 1.0}, {x3, -i}}};
    return {{{x0, 1.0}, {x1, -i}}};
}

Polynomial nabla(int n, int a, Prime alpha, const Polynomial& p) {
    if (p.num_vars() != 4 * n) throw ShapeError("nabla: polynomial must have 4n variables");
    Polynomial out(p.num_vars());
    for (const auto& t : nabla_terms(n, a, alpha)) out += t.coeff * p.derivative(t.var);
    return out;
}

std::vector<std::array<Polynomial, 2>> z_coords(int n) {
    const int vars = 4 * n;
    const Complex i{0.0, 1.0};
    auto x = [&](int k) { return Polynomial::coordinate(vars, k); };
    std::vector<std::array<Polynomial, 2>> z(static_cast<std::size_t>(2 * n),
                                             std::array<Polynomial, 2>{Polynomial(vars), Polynomial(vars)});
    for (int l = 0; l < n; ++l) {
        const auto ul = static_cast<std::size_t>(l);
        const auto ud = static_cast<std::size_t>(n + l);
        z[ul][0] = x(4 * l) - i * x(4 * l + 1);
        z[ul][1] = -1.0 * x(4 * l + 2) + i * x(4 * l + 3);
        z[ud][0] = x(4 * l + 2) + i * x(4 * l + 3);
        z[ud][1] = x(4 * l) + i * x(4 * l + 1);
    }
    return z;
}

Polynomial norm_sq(int n) {
    const int vars = 4 * n;
    Polynomial p(vars);
    for (int k = 0; k < vars; ++k) {
        Exponent e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(k)] = 2;
        p.add(e, 1.0);
    }
    return p;
}

// ---------------------------------------------------------------- Jet2

Jet2::Jet2(std::size_t dim) : grad(dim, 0.0), hess(kernels::packed_size(dim), 0.0) {}

double Jet2::hessian(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return hess[kernels::packed_row_offset(i, dim()) + (j - i)];
}

RMatrix Jet2::hessian_matrix() const {
    RMatrix out(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) out(i, j) = hessian(i, j);
    return out;
}

namespace {

Jet2 jet_linear(const Jet2& a, const Jet2& b, double sb) {
    Jet2 out(a.dim());
    out.value = a.value + sb * b.value;
    for (std::size_t i = 0; i < a.dim(); ++i) out.grad[i] = a.grad[i] + sb * b.grad[i];
    kernels::sym_update(out.hess, a.hess, b.hess, a.grad, b.grad, 1.0, sb, 0.0);
    return out;
}

Jet2 jet_mul(const Jet2& a, const Jet2& b) {
    Jet2 out(a.dim());
    out.value = a.value * b.value;
    for (std::size_t i = 0; i < a.dim(); ++i) out.grad[i] = b.value * a.grad[i] + a.value * b.grad[i];
    kernels::sym_update(out.hess, a.hess, b.hess, a.grad, b.grad, b.value, a.value, 1.0);
    return out;
}

Jet2 jet_recip(const Jet2& b, std::span<const double> x) {
    if (b.value == 0.0) throw DivisionByZeroAt(std::vector<double>(x.begin(), x.end()));
    const double f = 1.0 / b.value;
    const double f1 = -f * f;
    const double f2 = 2.0 * f * f * f;
    Jet2 out(b.dim());
    out.value = f;
    for (std::size_t i = 0; i < b.dim(); ++i) out.grad[i] = f1 * b.grad[i];
    kernels::sym_update(out.hess, b.hess, b.hess, b.grad, b.grad, f1, 0.0, 0.5 * f2);
    return out;
}

} // namespace

// ---------------------------------------------------------------- FieldExpr

struct FieldExpr::Node {
    Kind kind;
    double value = 0.0;
    int var = 0;
    int exponent = 0;
    std::vector<FieldExpr> children;
};

FieldExpr FieldExpr::constant(double c) { return FieldExpr(std::make_shared<const Node>(Node{Kind::constant, c, 0, 0, {}})); }

FieldExpr FieldExpr::coord(int var) {
    if (var < 0) throw ShapeError("coord: negative index");
    return FieldExpr(std::make_shared<const Node>(Node{Kind::coord, 0.0, var, 0, {}}));
}

FieldExpr FieldExpr::pow(const FieldExpr& base, int exponent) {
    return FieldExpr(std::make_shared<const Node>(Node{Kind::pow, 0.0, 0, exponent, {base}}));
}

FieldExpr operator+(const FieldExpr& a, const FieldExpr& b) {
    return FieldExpr(std::make_shared<const FieldExpr::Node>(FieldExpr::Node{FieldExpr::Kind::add, 0.0, 0, 0, {a, b}}));
}
FieldExpr operator-(const FieldExpr& a, const FieldExpr& b) {
    return FieldExpr(std::make_shared<const FieldExpr::Node>(FieldExpr::Node{FieldExpr::Kind::sub, 0.0, 0, 0, {a, b}}));
}
FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
    return FieldExpr(std::make_shared<const FieldExpr::Node>(FieldExpr::Node{FieldExpr::Kind::mul, 0.0, 0, 0, {a, b}}));
}
FieldExpr operator/(const FieldExpr& a, const FieldExpr& b) {
    return FieldExpr(std::make_shared<const FieldExpr::Node>(FieldExpr::Node{FieldExpr::Kind::div, 0.0, 0, 0, {a, b}}));
}

FieldExpr::Kind FieldExpr::kind() const { return node_->kind; }
double FieldExpr::value() const { return node_->value; }
int FieldExpr::var() const { return node_->var; }
int FieldExpr::exponent() const { return node_->exponent; }
const FieldExpr& FieldExpr::lhs() const { return node_->children.at(0); }
const FieldExpr& FieldExpr::rhs() const { return node_->children.at(1); }

int FieldExpr::max_var() const {
    switch (node_->kind) {
    case Kind::constant: return -1;
    case Kind::coord: return node_->var;
    case Kind::pow: return lhs().max_var();
    default: return std::max(lhs().max_var(), rhs().max_var());
    }
}

double FieldExpr::evaluate(std::span<const double> x) const {
    switch (node_->kind) {
    case Kind::constant: return node_->value;
    case Kind::coord:
        if (static_cast<std::size_t>(node_->var) >= x.size()) throw ShapeError("evaluate: coordinate out of range");
        return x[static_cast<std::size_t>(node_->var)];
    case Kind::add: return lhs().evaluate(x) + rhs().evaluate(x);
    case Kind::sub: return lhs().evaluate(x) - rhs().evaluate(x);
    case Kind::mul: return lhs().evaluate(x) * rhs().evaluate(x);
    case Kind::div: {
        const double d = rhs().evaluate(x);
        if (d == 0.0) throw DivisionByZeroAt(std::vector<double>(x.begin(), x.end()));
        return lhs().evaluate(x) / d;
    }
    case Kind::pow: {
        const double b = lhs().evaluate(x);
        double r = 1.0;
        for (int k = 0; k < std::abs(node_->exponent); ++k) r *= b;
        if (node_->exponent < 0) {
            if (r == 0.0) throw DivisionByZeroAt(std::vector<double>(x.begin(), x.end()));
            r = 1.0 / r;
        }
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

Jet2 FieldExpr::jet(std::span<const double> x) const {
    const std::size_t dim = x.size();
    switch (node_->kind) {
    case Kind::constant: {
        Jet2 j(dim);
        j.value = node_->value;
        return j;
    }
    case Kind::coord: {
        const auto v = static_cast<std::size_t>(node_->var);
        if (v >= dim) throw ShapeError("jet: coordinate out of range");
        Jet2 j(dim);
        j.value = x[v];
        j.grad[v] = 1.0;
        return j;
    }
    case Kind::add: return jet_linear(lhs().jet(x), rhs().jet(x), 1.0);
    case Kind::sub: return jet_linear(lhs().jet(x), rhs().jet(x), -1.0);
    case Kind::mul: return jet_mul(lhs().jet(x), rhs().jet(x));
    case Kind::div: return jet_mul(lhs().jet(x), jet_recip(rhs().jet(x), x));
    case Kind::pow: {
        const Jet2 base = lhs().jet(x);
        Jet2 acc(dim);
        acc.value = 1.0;
        for (int k = 0; k < std::abs(node_->exponent); ++k) acc = jet_mul(acc, base);
        return node_->exponent < 0 ? jet_recip(acc, x) : acc;
    }
    }
    throw std::logic_error("unreachable");
}

FieldExpr FieldExpr::substitute(std::span<const FieldExpr> replacement) const {
    switch (node_->kind) {
    case Kind::constant: return *this;
    case Kind::coord:
        if (static_cast<std::size_t>(node_->var) >= replacement.size())
            throw ShapeError("substitute: no replacement for coordinate");
        return replacement[static_cast<std::size_t>(node_->var)];
    case Kind::pow: return pow(lhs().substitute(replacement), node_->exponent);
    case Kind::add: return lhs().substitute(replacement) + rhs().substitute(replacement);
    case Kind::sub: return lhs().substitute(replacement) - rhs().substitute(replacement);
    case Kind::mul: return lhs().substitute(replacement) * rhs().substitute(replacement);
    case Kind::div: return lhs().substitute(replacement) / rhs().substitute(replacement);
    }
    throw std::logic_error("unreachable");
}

FieldExpr to_expr(const Polynomial& p) {
    FieldExpr sum = FieldExpr::constant(0.0);
    for (const auto& [e, c] : p.terms()) {
        if (c.imag() != 0.0) throw std::invalid_argument("to_expr: polynomial has a non-real coefficient");
        FieldExpr term = FieldExpr::constant(c.real());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const FieldExpr xi = FieldExpr::coord(static_cast<int>(i));
            term = term * (e[i] == 1 ? xi : FieldExpr::pow(xi, e[i]));
        }
        sum = sum + term;
    }
    return sum;
}

FieldExpr norm_sq_expr(int n) {
    FieldExpr sum = FieldExpr::constant(0.0);
    for (int k = 0; k < 4 * n; ++k) {
        const FieldExpr x = FieldExpr::coord(k);
        sum = sum + x * x;
    }
    return sum;
}

FieldExpr fundamental_expr(int n, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("fundamental_expr: eps must be positive");
    return FieldExpr::constant(-1.0) / (norm_sq_expr(n) + FieldExpr::constant(eps));
}

} // namespace quatla
