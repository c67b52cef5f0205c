#pragma once

// Sparse exterior algebra over C^{2n} with basis w^0..w^{2n-1}.
//
// A monomial w^{a_1} ^ ... ^ w^{a_k} with a_1 < ... < a_k is keyed by the bit
// mask sum 2^{a_i}; wedge signs come from counting inversions between masks.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "quatla/moore.hpp"
#include "quatla/quaternion.hpp"

namespace quatla {

using IndexMask = std::uint32_t;

/// Largest supported n (2n basis vectors must fit in an IndexMask).
inline constexpr int kMaxHalfDim = 16;

IndexMask mask_of(std::span<const int> sorted_indices);
std::vector<int> indices_of(IndexMask mask);
int grade_of(IndexMask mask);

/// (-1)^{inversions} for w^a ^ w^b with disjoint masks a, b.
int wedge_sign(IndexMask a, IndexMask b);

/// Homogeneous element of the k-th exterior power of C^{2n}.
class Form {
public:
    using Terms = std::map<IndexMask, Complex>;

    Form(int half_dim, int grade);

    /// Single monomial c * w^{i_1} ^ ... ^ w^{i_k}; indices in any order.
    static Form monomial(int half_dim, std::initializer_list<int> indices, Complex c = 1.0);
    static Form monomial(int half_dim, std::span<const int> indices, Complex c = 1.0);
    /// Degree-0 form holding a scalar.
    static Form scalar(int half_dim, Complex c);
    /// sum_B coeffs[B] w^B.
    static Form one_form(int half_dim, std::span<const Complex> coeffs);

    int half_dim() const noexcept { return n_; }
    int dim() const noexcept { return 2 * n_; }
    int grade() const noexcept { return k_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Complex coeff(IndexMask key) const;
    /// Adds c to the coefficient of `key`, erasing it when the sum is exactly 0.
    void add(IndexMask key, Complex c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(Complex c);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Complex c, Form a) { return a *= c; }

    friend bool operator==(const Form&, const Form&) = default;

private:
    void require_compatible(const Form& o) const;

    int n_;
    int k_;
    Terms terms_;
};

/// Largest coefficient modulus of a - b.
double max_abs_diff(const Form& a, const Form& b);
double max_abs(const Form& f);

/// Grade adds; terms beyond the top grade vanish.
Form wedge(const Form& f, const Form& g);
/// f ^ f ^ ... (count factors).
Form wedge_power(const Form& f, int count);

/// Antilinear action induced by w^l -> w^{n+l}, w^{n+l} -> -w^l.
Form rho_j(const Form& f);

/// Throws GradeError on odd grade.
bool is_real_form(const Form& f, double tol = kDefaultTol);

/// sum_{A,B} M_AB w^A ^ w^B; the key (A,B), A < B, stores 2 M_AB.
Form matrix_to_2form(const CMatrix& m, double tol = kDefaultTol);
/// Unique skew M with f = sum_{A,B} M_AB w^A ^ w^B.
CMatrix form_to_matrix(const Form& f);

/// 2-form of tau(M) J for hyperhermitian M.
Form hh_to_2form(const QMatrix& m, double tol = kDefaultTol);

/// beta_n = sum_l w^l ^ w^{n+l}.
Form beta_n(int n);
/// Omega_2n = (w^0 ^ w^n) ^ (w^1 ^ w^{n+1}) ^ ... ^ (w^{n-1} ^ w^{2n-1}).
Form omega_2n(int n);

/// Coefficient c with w_1 ^ ... ^ w_n = c Omega_2n, where w_t is the 2-form of
/// the skew matrix ms[t]. Throws NotSkew, NotReal or ShapeError.
Complex delta_n(std::span<const CMatrix> ms, double tol = kDefaultTol);
/// Same for forms given directly (grade 2, real).
Complex delta_n_forms(std::span<const Form> forms, double tol = kDefaultTol);

/// [[0, diag(nu)], [-diag(nu), 0]].
CMatrix normal_form_matrix(std::span<const double> nu);

/// Quaternionic unitary E and nu with tau(E)^t M tau(E) = normal_form_matrix(nu)
/// for M = form_to_matrix(f). Throws GradeError or NotReal.
SpectralData normalize_real_2form(const Form& f, double tol = kDefaultTol);
/// max |tau(E)^t M tau(E) - normal_form_matrix(nu)|.
double normalization_residual(const Form& f, const SpectralData& sd);

/// All nu_l >= -tol and at least one > tol. Throws NotReal.
bool is_strongly_positive_2form(const Form& f, double tol = kDefaultTol);

/// C-linear action w^A -> sum_B M_AB w^B extended multiplicatively.
Form act_matrix_on_form(const CMatrix& m, const Form& f);

/// Pull back along the right H-linear map of A (m x k): a form on C^{2m}
/// becomes a form on C^{2k} via w~^p -> sum_j tau(A)_pj w^j.
Form pullback(const QMatrix& a, const Form& f);

/// eta_1^* w~^0 ^ eta_1^* w~^1 ^ ... ^ eta_k^* w~^0 ^ eta_k^* w~^1 for row
/// maps eta_j : H^n -> H (each 1 x n).
Form elementary_strongly_positive(std::span<const QMatrix> etas, int n);

} // namespace quatla
