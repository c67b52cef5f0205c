#pragma once

// Quaternion scalars, dense quaternion / complex / real matrices, the tau
// embedding H^{p x m} -> C^{2p x 2m} and the real 4n x 4n representation.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "quatla/errors.hpp"

namespace quatla {

using Complex = std::complex<double>;

/// Default absolute structural tolerance (max-norm).
inline constexpr double kDefaultTol = 1e-9;

/// w + x i + y j + z k with ij = k, jk = i, ki = j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    /// q = a + b j with complex a, b.
    static constexpr Quaternion from_pair(Complex a, Complex b) {
        return {a.real(), a.imag(), b.real(), b.imag()};
    }
    Complex a() const { return {w, x}; }
    Complex b() const { return {y, z}; }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    Quaternion& operator*=(const Quaternion& o);

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
inline Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
inline Quaternion operator*(const Quaternion& q, double s) { return s * q; }

/// Hamilton product.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double abs2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double abs(const Quaternion& q) { return std::sqrt(abs2(q)); }

/// Dense row-major matrix. Values are immutable in practice; mutation is only
/// used while building results.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw ShapeError("matrix entry count does not match rows*cols");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> data() noexcept { return data_; }
    std::span<const T> data() const noexcept { return data_; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(double s) {
        for (auto& v : data_) v = s * v;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= -1.0; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Quaternion>;
using CMatrix = Matrix<Complex>;
using RMatrix = Matrix<double>;

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

QMatrix adjoint(const QMatrix& m);
CMatrix adjoint(const CMatrix& m);
/// Entrywise complex conjugate.
CMatrix conj(const CMatrix& m);

double max_abs(const QMatrix& m);
double max_abs(const CMatrix& m);
double max_abs(const RMatrix& m);
double frobenius(const CMatrix& m);

/// Determinant by LU with partial pivoting.
Complex det(const CMatrix& m);

/// Embeds a complex matrix as a quaternionic one (zero j-part).
QMatrix from_complex(const CMatrix& m);

/// tau(a + b j) = [[a, -b], [conj b, conj a]].
CMatrix tau(const QMatrix& m);

/// max |J conj(M) - M J|; zero exactly on the range of tau.
double j_commutator_residual(const CMatrix& m);

/// Inverse of tau on its range. Reads a (top-left) and b (top-right) and
/// returns a - b j. Throws StructureError when J conj(M) != M J within tol.
QMatrix tau_inverse(const CMatrix& m, double tol = kDefaultTol);

/// J = [[0, I_n], [-I_n, 0]].
CMatrix j_matrix(std::size_t n);

enum class Structure { hyperhermitian, quaternionic_unitary, complex_symplectic_unitary };

bool is_hyperhermitian(const QMatrix& m, double tol = kDefaultTol);
bool is_quaternionic_unitary(const QMatrix& m, double tol = kDefaultTol);
bool is_complex_symplectic_unitary(const CMatrix& m, double tol = kDefaultTol);

/// Dispatching form of the three predicates. ShapeError on non-square input
/// or when the structure kind does not match the matrix type.
bool structural_predicate(const QMatrix& m, Structure kind, double tol = kDefaultTol);
bool structural_predicate(const CMatrix& m, Structure kind, double tol = kDefaultTol);

/// U = U0 + i U1 + j U2 + k U3 mapped to the 4n x 4n block matrix acting on
/// q^R = (x^(0); x^(1); x^(2); x^(3)).
RMatrix real_rep(const QMatrix& u);

/// Block-ordered real coordinates of a quaternion n-vector (n x 1 matrix).
std::vector<double> real_vec(const QMatrix& q);

/// Position of interleaved coordinate x_{4l+beta} inside q^R.
constexpr std::size_t block_index(std::size_t x_index, std::size_t n) {
    return (x_index % 4) * n + x_index / 4;
}

/// Quaternion n-vector (n x 1) from interleaved real coordinates x_0..x_{4n-1}.
QMatrix from_coords(std::span<const double> x);
std::vector<double> to_coords(const QMatrix& q);

} // namespace quatla
