#include "quatla/quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace quatla {

QMatrix adjoint(const QMatrix& m) {
    QMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
    return out;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

CMatrix conj(const CMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    auto src = m.data();
    auto dst = out.data();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::conj(src[i]);
    return out;
}

double max_abs(const QMatrix& m) {
    double r = 0.0;
    for (const auto& q : m.data()) r = std::max(r, abs(q));
    return r;
}

double max_abs(const CMatrix& m) {
    double r = 0.0;
    for (const auto& c : m.data()) r = std::max(r, std::abs(c));
    return r;
}

double max_abs(const RMatrix& m) {
    double r = 0.0;
    for (double v : m.data()) r = std::max(r, std::abs(v));
    return r;
}

double frobenius(const CMatrix& m) {
    double s = 0.0;
    for (const auto& c : m.data()) s += std::norm(c);
    return std::sqrt(s);
}

Complex det(const CMatrix& m) {
    if (!m.is_square()) throw ShapeError("det: matrix is not square");
    const std::size_t n = m.rows();
    CMatrix a = m;
    Complex result = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == Complex{}) return 0.0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            result = -result;
        }
        const Complex p = a(col, col);
        result *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / p;
            if (f == Complex{}) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return result;
}

QMatrix from_complex(const CMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Quaternion::from_pair(m(i, j), 0.0);
    return out;
}

CMatrix tau(const QMatrix& m) {
    const std::size_t p = m.rows();
    const std::size_t q = m.cols();
    CMatrix out(2 * p, 2 * q);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < q; ++c) {
            const Complex a = m(r, c).a();
            const Complex b = m(r, c).b();
            out(r, c) = a;
            out(r, q + c) = -b;
            out(p + r, c) = std::conj(b);
            out(p + r, q + c) = std::conj(a);
        }
    return out;
}

double j_commutator_residual(const CMatrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw ShapeError("j_commutator_residual: matrix must be square of even size");
    const std::size_t n = m.rows() / 2;
    // (J conj M)_{rc}: rows r < n pick conj(M)_{n+r, c}; rows n+r pick -conj(M)_{r, c}.
    // (M J)_{rc}: columns c < n pick -M_{r, n+c}; columns n+c pick M_{r, c}.
    double res = 0.0;
    for (std::size_t r = 0; r < 2 * n; ++r)
        for (std::size_t c = 0; c < 2 * n; ++c) {
            const Complex jm = r < n ? std::conj(m(n + r, c)) : -std::conj(m(r - n, c));
            const Complex mj = c < n ? -m(r, n + c) : m(r, c - n);
            res = std::max(res, std::abs(jm - mj));
        }
    return res;
}

QMatrix tau_inverse(const CMatrix& m, double tol) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw ShapeError("tau_inverse: matrix must be square of even size");
    if (j_commutator_residual(m) > tol)
        throw StructureError("tau_inverse: matrix does not satisfy J conj(M) = M J");
    const std::size_t n = m.rows() / 2;
    QMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = Quaternion::from_pair(m(r, c), -m(r, n + c));
    return out;
}

CMatrix j_matrix(std::size_t n) {
    CMatrix out(2 * n, 2 * n);
    for (std::size_t l = 0; l < n; ++l) {
        out(l, n + l) = 1.0;
        out(n + l, l) = -1.0;
    }
    return out;
}

bool is_hyperhermitian(const QMatrix& m, double tol) {
    if (!m.is_square()) throw ShapeError("is_hyperhermitian: matrix is not square");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c)
            if (abs(m(r, c) - conj(m(c, r))) > tol) return false;
    return true;
}

bool is_quaternionic_unitary(const QMatrix& m, double tol) {
    if (!m.is_square()) throw ShapeError("is_quaternionic_unitary: matrix is not square");
    return max_abs(adjoint(m) * m - QMatrix::identity(m.rows())) <= tol;
}

bool is_complex_symplectic_unitary(const CMatrix& m, double tol) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw ShapeError("is_complex_symplectic_unitary: matrix must be square of even size");
    const std::size_t n = m.rows() / 2;
    const CMatrix jm = j_matrix(n);
    if (max_abs(adjoint(m) * m - CMatrix::identity(2 * n)) > tol) return false;
    return max_abs(m * jm * transpose(m) - jm) <= tol;
}

bool structural_predicate(const QMatrix& m, Structure kind, double tol) {
    switch (kind) {
    case Structure::hyperhermitian: return is_hyperhermitian(m, tol);
    case Structure::quaternionic_unitary: return is_quaternionic_unitary(m, tol);
    case Structure::complex_symplectic_unitary: break;
    }
    throw ShapeError("structural_predicate: symplectic test needs a complex matrix");
}

bool structural_predicate(const CMatrix& m, Structure kind, double tol) {
    if (kind != Structure::complex_symplectic_unitary)
        throw ShapeError("structural_predicate: quaternionic tests need a quaternion matrix");
    return is_complex_symplectic_unitary(m, tol);
}

RMatrix real_rep(const QMatrix& u) {
    if (!u.is_square()) throw ShapeError("real_rep: matrix is not square");
    const std::size_t n = u.rows();
    RMatrix out(4 * n, 4 * n);
    // Block (row beta, col gamma) holds sign * U_{idx}; rows follow
    // [U0 -U1 -U2 -U3; U1 U0 -U3 U2; U2 U3 U0 -U1; U3 -U2 U1 U0].
    static constexpr int kIdx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kSign[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Quaternion& q = u(r, c);
            const double part[4] = {q.w, q.x, q.y, q.z};
            for (int br = 0; br < 4; ++br)
                for (int bc = 0; bc < 4; ++bc)
                    out(br * n + r, bc * n + c) = kSign[br][bc] * part[kIdx[br][bc]];
        }
    return out;
}

std::vector<double> real_vec(const QMatrix& q) {
    if (q.cols() != 1) throw ShapeError("real_vec: expected a column vector");
    const std::size_t n = q.rows();
    std::vector<double> out(4 * n);
    for (std::size_t l = 0; l < n; ++l) {
        out[l] = q(l, 0).w;
        out[n + l] = q(l, 0).x;
        out[2 * n + l] = q(l, 0).y;
        out[3 * n + l] = q(l, 0).z;
    }
    return out;
}

QMatrix from_coords(std::span<const double> x) {
    if (x.size() % 4 != 0) throw ShapeError("from_coords: length must be a multiple of 4");
    QMatrix out(x.size() / 4, 1);
    for (std::size_t l = 0; l < out.rows(); ++l)
        out(l, 0) = {x[4 * l], x[4 * l + 1], x[4 * l + 2], x[4 * l + 3]};
    return out;
}

std::vector<double> to_coords(const QMatrix& q) {
    if (q.cols() != 1) throw ShapeError("to_coords: expected a column vector");
    std::vector<double> out(4 * q.rows());
    for (std::size_t l = 0; l < q.rows(); ++l) {
        out[4 * l] = q(l, 0).w;
        out[4 * l + 1] = q(l, 0).x;
        out[4 * l + 2] = q(l, 0).y;
        out[4 * l + 3] = q(l, 0).z;
    }
    return out;
}

} // namespace quatla
