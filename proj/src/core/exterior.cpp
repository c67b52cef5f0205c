#include "quatla/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace quatla {

namespace {

void require_half_dim(int n) {
    if (n < 1 || n > kMaxHalfDim) throw ShapeError("form half dimension must be in [1, " + std::to_string(kMaxHalfDim) + "]");
}

// Sign of the permutation that sorts `seq` (all entries distinct).
int sort_sign(std::vector<int>& seq) {
    int swaps = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
            std::swap(seq[j - 1], seq[j]);
            ++swaps;
        }
    return swaps % 2 == 0 ? 1 : -1;
}

// Image of the row `row` of m as a 1-form on target_half_dim.
Form row_one_form(const CMatrix& m, std::size_t row, int target_half_dim) {
    Form out(target_half_dim, 1);
    for (std::size_t b = 0; b < m.cols(); ++b)
        if (m(row, b) != Complex{}) out.add(IndexMask{1} << b, m(row, b));
    return out;
}

Form act_rect(const CMatrix& m, const Form& f, int target_half_dim) {
    if (static_cast<int>(m.rows()) != f.dim() || static_cast<int>(m.cols()) != 2 * target_half_dim)
        throw ShapeError("act: matrix shape does not match the form dimensions");
    std::vector<Form> images;
    images.reserve(m.rows());
    for (std::size_t a = 0; a < m.rows(); ++a) images.push_back(row_one_form(m, a, target_half_dim));
    Form out(target_half_dim, f.grade());
    for (const auto& [key, c] : f.terms()) {
        Form acc = Form::scalar(target_half_dim, c);
        for (int idx : indices_of(key)) {
            acc = wedge(acc, images[static_cast<std::size_t>(idx)]);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

void require_skew(const CMatrix& m, double tol) {
    if (!m.is_square() || m.rows() % 2 != 0) throw ShapeError("expected a 2n x 2n matrix");
    if (max_abs(m + transpose(m)) > tol) throw NotSkew("matrix is not skew-symmetric");
}

} // namespace

IndexMask mask_of(std::span<const int> sorted_indices) {
    IndexMask m = 0;
    int prev = -1;
    for (int i : sorted_indices) {
        if (i <= prev || i >= 2 * kMaxHalfDim) throw ShapeError("index tuple must be strictly increasing and in range");
        m |= IndexMask{1} << i;
        prev = i;
    }
    return m;
}

std::vector<int> indices_of(IndexMask mask) {
    std::vector<int> out;
    for (IndexMask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

int grade_of(IndexMask mask) { return std::popcount(mask); }

int wedge_sign(IndexMask a, IndexMask b) {
    int inversions = 0;
    for (IndexMask m = b; m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        inversions += std::popcount(j + 1 >= 32 ? IndexMask{0} : a >> (j + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Form::Form(int half_dim, int grade) : n_(half_dim), k_(grade) {
    require_half_dim(half_dim);
    if (grade < 0) throw GradeError("negative grade");
}

Form Form::monomial(int half_dim, std::initializer_list<int> indices, Complex c) {
    return monomial(half_dim, std::span<const int>(indices.begin(), indices.size()), c);
}

Form Form::monomial(int half_dim, std::span<const int> indices, Complex c) {
    Form out(half_dim, static_cast<int>(indices.size()));
    std::vector<int> seq(indices.begin(), indices.end());
    for (int i : seq)
        if (i < 0 || i >= 2 * half_dim) throw ShapeError("monomial index out of range");
    const int sign = sort_sign(seq);
    if (std::adjacent_find(seq.begin(), seq.end()) != seq.end()) return out;
    out.add(mask_of(seq), static_cast<double>(sign) * c);
    return out;
}

Form Form::scalar(int half_dim, Complex c) {
    Form out(half_dim, 0);
    out.add(0, c);
    return out;
}

Form Form::one_form(int half_dim, std::span<const Complex> coeffs) {
    Form out(half_dim, 1);
    if (static_cast<int>(coeffs.size()) != 2 * half_dim) throw ShapeError("one_form: need 2n coefficients");
    for (std::size_t b = 0; b < coeffs.size(); ++b) out.add(IndexMask{1} << b, coeffs[b]);
    return out;
}

Complex Form::coeff(IndexMask key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex{} : it->second;
}

void Form::add(IndexMask key, Complex c) {
    if (c == Complex{}) return;
    if (grade_of(key) != k_) throw GradeError("term grade does not match form grade");
    if (2 * n_ < 32 && (key >> (2 * n_)) != 0) throw ShapeError("term index out of range");
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

void Form::require_compatible(const Form& o) const {
    if (n_ != o.n_) throw ShapeError("forms live on different spaces");
    if (k_ != o.k_) throw GradeError("forms have different grades");
}

Form& Form::operator+=(const Form& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

Form& Form::operator*=(Complex c) {
    if (c == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

double max_abs_diff(const Form& a, const Form& b) {
    if (a.half_dim() != b.half_dim()) throw ShapeError("forms live on different spaces");
    double r = 0.0;
    for (const auto& [k, c] : a.terms()) r = std::max(r, std::abs(c - b.coeff(k)));
    for (const auto& [k, c] : b.terms())
        if (!a.terms().contains(k)) r = std::max(r, std::abs(c));
    return r;
}

double max_abs(const Form& f) {
    double r = 0.0;
    for (const auto& [k, c] : f.terms()) r = std::max(r, std::abs(c));
    return r;
}

Form wedge(const Form& f, const Form& g) {
    if (f.half_dim() != g.half_dim()) throw ShapeError("wedge: forms live on different spaces");
    Form out(f.half_dim(), f.grade() + g.grade());
    if (out.grade() > f.dim()) return out;
    for (const auto& [ka, ca] : f.terms())
        for (const auto& [kb, cb] : g.terms()) {
            if (ka & kb) continue;
            out.add(ka | kb, static_cast<double>(wedge_sign(ka, kb)) * ca * cb);
        }
    return out;
}

Form wedge_power(const Form& f, int count) {
    if (count < 0) throw GradeError("wedge_power: negative exponent");
    Form acc = Form::scalar(f.half_dim(), 1.0);
    for (int i = 0; i < count; ++i) acc = wedge(acc, f);
    return acc;
}

Form rho_j(const Form& f) {
    const int n = f.half_dim();
    Form out(n, f.grade());
    for (const auto& [key, c] : f.terms()) {
        std::vector<int> seq;
        int sign = 1;
        for (int a : indices_of(key)) {
            if (a < n) {
                seq.push_back(a + n);
            } else {
                seq.push_back(a - n);
                sign = -sign;
            }
        }
        sign *= sort_sign(seq);
        out.add(mask_of(seq), static_cast<double>(sign) * std::conj(c));
    }
    return out;
}

bool is_real_form(const Form& f, double tol) {
    if (f.grade() % 2 != 0) throw GradeError("is_real_form: reality is defined for even grades");
    return max_abs_diff(rho_j(f), f) <= tol;
}

Form matrix_to_2form(const CMatrix& m, double tol) {
    require_skew(m, tol);
    const int n = static_cast<int>(m.rows() / 2);
    Form out(n, 2);
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = a + 1; b < m.cols(); ++b)
            out.add((IndexMask{1} << a) | (IndexMask{1} << b), m(a, b) - m(b, a));
    return out;
}

CMatrix form_to_matrix(const Form& f) {
    if (f.grade() != 2) throw GradeError("form_to_matrix: expected a 2-form");
    CMatrix out(static_cast<std::size_t>(f.dim()), static_cast<std::size_t>(f.dim()));
    for (const auto& [key, c] : f.terms()) {
        const auto idx = indices_of(key);
        const auto a = static_cast<std::size_t>(idx[0]);
        const auto b = static_cast<std::size_t>(idx[1]);
        out(a, b) = 0.5 * c;
        out(b, a) = -0.5 * c;
    }
    return out;
}

Form hh_to_2form(const QMatrix& m, double tol) {
    if (!is_hyperhermitian(m, tol)) throw NotHyperhermitian("hh_to_2form: matrix is not hyperhermitian");
    // tau(M) J is skew only up to the hyperhermitian residual; check with 2 tol.
    return matrix_to_2form(tau(m) * j_matrix(m.rows()), 2.0 * tol);
}

Form beta_n(int n) {
    Form out(n, 2);
    for (int l = 0; l < n; ++l) out.add((IndexMask{1} << l) | (IndexMask{1} << (n + l)), 1.0);
    return out;
}

Form omega_2n(int n) {
    Form acc = Form::scalar(n, 1.0);
    for (int l = 0; l < n; ++l) acc = wedge(acc, Form::monomial(n, {l, n + l}));
    return acc;
}

Complex delta_n_forms(std::span<const Form> forms, double tol) {
    if (forms.empty()) throw ShapeError("delta_n: need n forms");
    const int n = forms.front().half_dim();
    if (static_cast<int>(forms.size()) != n) throw ShapeError("delta_n: need exactly n forms on C^{2n}");
    Form acc = Form::scalar(n, 1.0);
    for (const auto& f : forms) {
        if (f.half_dim() != n) throw ShapeError("delta_n: forms live on different spaces");
        if (f.grade() != 2) throw GradeError("delta_n: expected 2-forms");
        if (!is_real_form(f, tol)) throw NotReal("delta_n: input 2-form is not real");
        acc = wedge(acc, f);
    }
    const Form omega = omega_2n(n);
    const auto& [key, sign] = *omega.terms().begin();
    return acc.coeff(key) / sign;
}

Complex delta_n(std::span<const CMatrix> ms, double tol) {
    std::vector<Form> forms;
    forms.reserve(ms.size());
    for (const auto& m : ms) forms.push_back(matrix_to_2form(m, tol));
    return delta_n_forms(forms, tol);
}

CMatrix normal_form_matrix(std::span<const double> nu) {
    const std::size_t n = nu.size();
    CMatrix out(2 * n, 2 * n);
    for (std::size_t l = 0; l < n; ++l) {
        out(l, n + l) = nu[l];
        out(n + l, l) = -nu[l];
    }
    return out;
}

SpectralData normalize_real_2form(const Form& f, double tol) {
    if (f.grade() != 2) throw GradeError("normalize_real_2form: expected a 2-form");
    if (!is_real_form(f, tol)) throw NotReal("normalize_real_2form: form is not real");
    const std::size_t n = static_cast<std::size_t>(f.half_dim());
    const CMatrix m = form_to_matrix(f);
    // M = tau(H) J and J^{-1} = -J.
    const QMatrix h = tau_inverse(-1.0 * (m * j_matrix(n)), tol);
    SpectralData sd = diagonalize_hyperhermitian(h, tol);
    // tau(E)^t M tau(E) is normal for E = -j B j, B the diagonalizer of h;
    // entrywise this negates the i and k parts.
    for (auto& q : sd.E.data()) q = {q.w, -q.x, q.y, -q.z};
    return sd;
}

double normalization_residual(const Form& f, const SpectralData& sd) {
    const CMatrix m = form_to_matrix(f);
    const CMatrix te = tau(sd.E);
    return max_abs(transpose(te) * m * te - normal_form_matrix(sd.nu));
}

bool is_strongly_positive_2form(const Form& f, double tol) {
    if (f.grade() != 2) throw GradeError("is_strongly_positive_2form: expected a 2-form");
    const SpectralData sd = normalize_real_2form(f, tol);
    double top = -1.0;
    for (double v : sd.nu) {
        if (v < -tol) return false;
        top = std::max(top, v);
    }
    return top > tol;
}

Form act_matrix_on_form(const CMatrix& m, const Form& f) {
    if (!m.is_square()) throw ShapeError("act_matrix_on_form: matrix is not square");
    return act_rect(m, f, f.half_dim());
}

Form pullback(const QMatrix& a, const Form& f) {
    if (static_cast<int>(a.rows()) != f.half_dim()) throw ShapeError("pullback: row count must match the form's n");
    return act_rect(tau(a), f, static_cast<int>(a.cols()));
}

Form elementary_strongly_positive(std::span<const QMatrix> etas, int n) {
    if (static_cast<int>(etas.size()) > n) throw ShapeError("elementary_strongly_positive: need k <= n maps");
    Form acc = Form::scalar(n, 1.0);
    const Form pair = Form::monomial(1, {0, 1});
    for (const auto& eta : etas) {
        if (eta.rows() != 1 || static_cast<int>(eta.cols()) != n)
            throw ShapeError("elementary_strongly_positive: each map must be 1 x n");
        acc = wedge(acc, pullback(eta, pair));
    }
    return acc;
}

} // namespace quatla
