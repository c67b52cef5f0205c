#include "quatla/baston.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "quatla/moore.hpp"

namespace quatla {

namespace {

int half_dim_of_vars(int vars) {
    if (vars <= 0 || vars % 4 != 0) throw ShapeError("form field: polynomial must have 4n variables");
    return vars / 4;
}

int half_dim_of_point(std::size_t size) {
    if (size == 0 || size % 4 != 0) throw ShapeError("point must have 4n coordinates");
    return static_cast<int>(size / 4);
}

} // namespace

FormField::FormField(int half_dim, int grade) : n_(half_dim), k_(grade) {
    if (half_dim < 1 || half_dim > kMaxHalfDim) throw ShapeError("form field: half dimension out of range");
    if (grade < 0 || grade > 2 * half_dim) throw GradeError("form field: grade out of range");
}

FormField FormField::scalar(const Polynomial& u) {
    FormField f(half_dim_of_vars(u.num_vars()), 0);
    f.add(0, u);
    return f;
}

FormField FormField::monomial(int half_dim, std::span<const int> indices, const Polynomial& f) {
    const Form unit = Form::monomial(half_dim, indices, 1.0);
    FormField out(half_dim, static_cast<int>(indices.size()));
    for (const auto& [key, sign] : unit.terms()) out.add(key, sign * f);
    return out;
}

Polynomial FormField::coeff(IndexMask key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Polynomial(4 * n_) : it->second;
}

void FormField::add(IndexMask key, const Polynomial& f) {
    if (f.num_vars() != 4 * n_) throw ShapeError("form field: coefficient has the wrong variable count");
    if (grade_of(key) != k_) throw GradeError("form field: key grade mismatch");
    if ((key >> (2 * n_)) != 0) throw ShapeError("form field: index out of range");
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FormField::require_compatible(const FormField& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw ShapeError("form fields differ in dimension or grade");
}

FormField& FormField::operator+=(const FormField& o) {
    require_compatible(o);
    for (const auto& [key, f] : o.terms_) add(key, f);
    return *this;
}

FormField& FormField::operator-=(const FormField& o) {
    require_compatible(o);
    for (const auto& [key, f] : o.terms_) add(key, -1.0 * f);
    return *this;
}

Form FormField::evaluate(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(4 * n_)) throw ShapeError("form field: point has the wrong dimension");
    Form out(n_, k_);
    for (const auto& [key, f] : terms_) out.add(key, f.evaluate(x));
    return out;
}

FormField wedge(const FormField& f, const FormField& g) {
    if (f.half_dim() != g.half_dim()) throw ShapeError("wedge: form fields live on different spaces");
    const int n = f.half_dim();
    const int grade = f.grade() + g.grade();
    if (grade > 2 * n) return FormField(n, std::min(grade, 2 * n));
    FormField out(n, grade);
    for (const auto& [a, fa] : f.terms())
        for (const auto& [b, gb] : g.terms()) {
            if (a & b) continue;
            out.add(a | b, static_cast<double>(wedge_sign(a, b)) * (fa * gb));
        }
    return out;
}

double max_abs_coeff(const FormField& f) {
    double r = 0.0;
    for (const auto& [key, p] : f.terms()) r = std::max(r, max_abs_coeff(p));
    return r;
}

FormField d_op(Prime alpha, const FormField& f) {
    const int n = f.half_dim();
    if (f.grade() == 2 * n) return FormField(n, 2 * n);
    FormField out(n, f.grade() + 1);
    for (const auto& [key, p] : f.terms())
        for (int a = 0; a < 2 * n; ++a) {
            const IndexMask bit = IndexMask{1} << a;
            if (key & bit) continue;
            const Polynomial dp = nabla(n, a, alpha, p);
            if (dp.is_zero()) continue;
            out.add(key | bit, static_cast<double>(wedge_sign(bit, key)) * dp);
        }
    return out;
}

bool is_closed(const FormField& f) { return d_op(Prime::zero, f).is_zero() && d_op(Prime::one, f).is_zero(); }

FormField baston_poly(const Polynomial& u) { return d_op(Prime::zero, d_op(Prime::one, FormField::scalar(u))); }

CMatrix baston_matrix(const RMatrix& hessian, int n) {
    const auto dim = static_cast<std::size_t>(4 * n);
    if (n < 1 || hessian.rows() != dim || hessian.cols() != dim)
        throw ShapeError("baston_matrix: Hessian must be 4n x 4n");
    auto pair = [&](int a, Prime alpha, int b, Prime beta) {
        Complex s = 0.0;
        for (const auto& t : nabla_terms(n, a, alpha))
            for (const auto& r : nabla_terms(n, b, beta))
                s += t.coeff * r.coeff * hessian(static_cast<std::size_t>(t.var), static_cast<std::size_t>(r.var));
        return s;
    };
    const auto m = static_cast<std::size_t>(2 * n);
    CMatrix out(m, m);
    for (int a = 0; a < 2 * n; ++a)
        for (int b = a + 1; b < 2 * n; ++b) {
            const Complex v = 0.5 * (pair(a, Prime::zero, b, Prime::one) - pair(b, Prime::zero, a, Prime::one));
            out(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = v;
            out(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = -v;
        }
    return out;
}

CMatrix baston_matrix(const Jet2& jet, int n) { return baston_matrix(jet.hessian_matrix(), n); }

Form baston_point(const FieldExpr& e, std::span<const double> q) {
    const int n = half_dim_of_point(q.size());
    return matrix_to_2form(baston_matrix(e.jet(q), n), 0.0);
}

QMatrix quaternionic_hessian(const RMatrix& hessian, int n) {
    const CMatrix d = baston_matrix(hessian, n);
    const auto un = static_cast<std::size_t>(n);
    QMatrix out(un, un);
    for (std::size_t l = 0; l < un; ++l)
        for (std::size_t k = 0; k < un; ++k)
            out(l, k) = 2.0 * Quaternion::from_pair(d(l, un + k), d(l, k));
    return out;
}

QMatrix quaternionic_hessian(const FieldExpr& e, std::span<const double> q) {
    return quaternionic_hessian(e.jet(q).hessian_matrix(), half_dim_of_point(q.size()));
}

QMatrix quaternionic_hessian(const Polynomial& u, std::span<const double> q) {
    if (!(conj(u) == u)) throw std::invalid_argument("quaternionic_hessian: polynomial must be real");
    const int n = half_dim_of_point(q.size());
    const std::size_t dim = q.size();
    RMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const Polynomial di = u.derivative(static_cast<int>(i));
        for (std::size_t j = i; j < dim; ++j) h(i, j) = h(j, i) = di.derivative(static_cast<int>(j)).evaluate(q).real();
    }
    return quaternionic_hessian(h, n);
}

double ma_mixed(std::span<const FieldExpr> us, std::span<const double> q, double tol) {
    const int n = half_dim_of_point(q.size());
    if (us.size() != static_cast<std::size_t>(n)) throw ShapeError("ma_mixed: need exactly n fields on H^n");
    std::vector<QMatrix> hs;
    double scale = 1.0;
    for (const auto& u : us) {
        hs.push_back(quaternionic_hessian(u, q));
        scale = std::max(scale, max_abs(hs.back()));
    }
    return mixed_discriminant(hs, tol * scale);
}

FundamentalValues fundamental_check(int n, double eps, std::span<const double> q) {
    if (q.size() != static_cast<std::size_t>(4 * n)) throw ShapeError("fundamental_check: point must have 4n coordinates");
    const Form w = baston_point(fundamental_expr(n, eps), q);
    const std::vector<Form> forms(static_cast<std::size_t>(n), w);
    const double lhs = delta_n_forms(forms, kDefaultTol * std::max(1.0, max_abs(w))).real();

    double r2 = 0.0;
    for (double x : q) r2 += x * x;
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double rhs = std::pow(8.0, n) * fact * eps / std::pow(r2 + eps, 2 * n + 1);
    return {lhs, rhs};
}

} // namespace quatla
