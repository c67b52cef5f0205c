#include "quatla/moore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quatla/kernels.hpp"

namespace quatla {

namespace {

// Columns of Q are kept contiguous (column-major) so that both the row
// rotation of H and the column rotation of Q run through mix_pair.
struct JacobiState {
    std::size_t m;
    std::vector<Complex> a; // row-major Hermitian working copy
    std::vector<Complex> q; // column-major accumulated rotations

    std::span<Complex> row(std::size_t i) { return {a.data() + i * m, m}; }
    std::span<Complex> col(std::size_t j) { return {q.data() + j * m, m}; }
    Complex& at(std::size_t i, std::size_t j) { return a[i * m + j]; }

    double off_norm() const {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) s += 2.0 * std::norm(a[i * m + j]);
        return std::sqrt(s);
    }

    void rotate(std::size_t p, std::size_t r) {
        const Complex hpq = at(p, r);
        const double mag = std::abs(hpq);
        const Complex e = hpq / mag;
        const double app = at(p, p).real();
        const double aqq = at(r, r).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // H <- V^* H on rows p, r with V = [[c, s e], [-s conj(e), c]].
        kernels::mix_pair(row(p), row(r), c, -s * e, s * std::conj(e), c);
        // The right multiplication only touches columns p and r; hermiticity
        // gives them from the updated rows.
        for (std::size_t i = 0; i < m; ++i) {
            if (i == p || i == r) continue;
            at(i, p) = std::conj(at(p, i));
            at(i, r) = std::conj(at(r, i));
        }
        at(p, p) = app - t * mag;
        at(r, r) = aqq + t * mag;
        at(p, r) = 0.0;
        at(r, p) = 0.0;
        // Q <- Q V.
        kernels::mix_pair(col(p), col(r), c, -s * std::conj(e), s * e, c);
    }
};

std::vector<std::size_t> descending_order(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
    return idx;
}

Complex dot(std::span<const Complex> u, std::span<const Complex> v) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

// -J conj(v): the partner of v under the quaternionic structure, chosen so
// that [v | partner] has the column shape of tau(E).
std::vector<Complex> j_partner(std::span<const Complex> v) {
    const std::size_t n = v.size() / 2;
    std::vector<Complex> w(v.size());
    for (std::size_t l = 0; l < n; ++l) {
        w[l] = -std::conj(v[n + l]);
        w[n + l] = std::conj(v[l]);
    }
    return w;
}

void orthogonalize(std::vector<Complex>& v, const std::vector<std::vector<Complex>>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            const Complex proj = dot(b, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
        }
}

} // namespace

HermitianEigen hermitian_eigen(const CMatrix& h, JacobiOptions opts) {
    if (!h.is_square()) throw ShapeError("hermitian_eigen: matrix is not square");
    const std::size_t m = h.rows();
    JacobiState st{m, std::vector<Complex>(m * m), std::vector<Complex>(m * m)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) st.at(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        st.q[i * m + i] = 1.0;
    }
    double norm = 0.0;
    for (const auto& c : st.a) norm += std::norm(c);
    norm = std::sqrt(norm);

    bool converged = norm == 0.0;
    for (int sweep = 0; !converged && sweep <= opts.max_sweeps; ++sweep) {
        if (st.off_norm() <= opts.threshold * norm) {
            converged = true;
            break;
        }
        if (sweep == opts.max_sweeps) break;
        const double skip = opts.threshold * norm / static_cast<double>(m);
        for (std::size_t p = 0; p + 1 < m; ++p)
            for (std::size_t r = p + 1; r < m; ++r)
                if (std::abs(st.at(p, r)) > skip) st.rotate(p, r);
    }
    if (!converged) throw ConvergenceError("hermitian_eigen: Jacobi sweeps exhausted");

    std::vector<double> diag(m);
    for (std::size_t i = 0; i < m; ++i) diag[i] = st.at(i, i).real();
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    HermitianEigen out{std::vector<double>(m), CMatrix(m, m)};
    for (std::size_t k = 0; k < m; ++k) {
        out.values[k] = diag[idx[k]];
        for (std::size_t i = 0; i < m; ++i) out.vectors(i, k) = st.q[idx[k] * m + i];
    }
    return out;
}

SpectralData diagonalize_hyperhermitian(const QMatrix& m, double tol) {
    if (!is_hyperhermitian(m, tol)) throw NotHyperhermitian("diagonalize_hyperhermitian: matrix is not hyperhermitian");
    const std::size_t n = m.rows();
    if (n == 0) return {QMatrix(0, 0), {}};
    const CMatrix h = tau(m);
    const HermitianEigen eig = hermitian_eigen(h);

    std::vector<double> values = eig.values;
    const std::vector<std::size_t> order = descending_order(values);
    double scale = 1.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double gap = 1e-10 * scale;

    // Clusters of (numerically) equal eigenvalues, widened until even-sized.
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const bool join = !clusters.empty() &&
                          (values[clusters.back().back()] - values[order[k]] <= gap || clusters.back().size() % 2 != 0);
        if (!join) clusters.emplace_back();
        clusters.back().push_back(order[k]);
    }
    if (clusters.back().size() % 2 != 0) throw PairingError("diagonalize_hyperhermitian: odd eigenvalue cluster");

    std::vector<std::vector<Complex>> basis;
    std::vector<std::vector<Complex>> chosen;
    for (const auto& cl : clusters) {
        std::vector<std::vector<Complex>> cand;
        for (std::size_t idx : cl) {
            std::vector<Complex> u(2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i) u[i] = eig.vectors(i, idx);
            cand.push_back(std::move(u));
        }
        for (std::size_t pick = 0; pick < cl.size() / 2; ++pick) {
            double best = -1.0;
            std::vector<Complex> best_vec;
            for (auto& u : cand) {
                std::vector<Complex> r = u;
                orthogonalize(r, basis);
                const double nr = norm2(r);
                if (nr > best) {
                    best = nr;
                    best_vec = std::move(r);
                }
            }
            if (best < 1e-3) throw ConvergenceError("diagonalize_hyperhermitian: eigenspace is not j-invariant");
            for (auto& c : best_vec) c /= best;
            std::vector<Complex> w = j_partner(best_vec);
            basis.push_back(best_vec);
            basis.push_back(std::move(w));
            chosen.push_back(std::move(best_vec));
        }
    }

    std::vector<double> nu(n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto& v = chosen[l];
        Complex s = 0.0;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            Complex hv = 0.0;
            for (std::size_t j = 0; j < 2 * n; ++j) hv += h(i, j) * v[j];
            s += std::conj(v[i]) * hv;
        }
        nu[l] = s.real();
    }
    const std::vector<std::size_t> final_order = descending_order(nu);

    CMatrix qmat(2 * n, 2 * n);
    SpectralData out{QMatrix(), std::vector<double>(n)};
    for (std::size_t l = 0; l < n; ++l) {
        const auto& v = chosen[final_order[l]];
        const std::vector<Complex> w = j_partner(v);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            qmat(i, l) = v[i];
            qmat(i, n + l) = w[i];
        }
        out.nu[l] = nu[final_order[l]];
    }
    out.E = tau_inverse(qmat, 1e-12);
    return out;
}

double moore_det(const QMatrix& m, double tol) {
    const SpectralData sd = diagonalize_hyperhermitian(m, tol);
    double p = 1.0;
    for (double v : sd.nu) p *= v;
    return p;
}

double mixed_discriminant(std::span<const QMatrix> ms, double tol) {
    const std::size_t n = ms.size();
    if (n == 0) throw ShapeError("mixed_discriminant: need at least one matrix");
    if (n > 20) throw ShapeError("mixed_discriminant: too many arguments for subset polarization");
    for (const auto& m : ms) {
        if (m.rows() != n || m.cols() != n)
            throw ShapeError("mixed_discriminant: expected n matrices of size n x n");
        if (!is_hyperhermitian(m, tol)) throw NotHyperhermitian("mixed_discriminant: argument is not hyperhermitian");
    }
    double total = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        QMatrix sum(n, n);
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                sum += ms[i];
                ++count;
            }
        const double sign = (n - count) % 2 == 0 ? 1.0 : -1.0;
        total += sign * moore_det(sum, tol * static_cast<double>(count));
    }
    double fact = 1.0;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<double>(k);
    return total / fact;
}

std::vector<double> eigenvalue_pairs(const CMatrix& h, double tol) {
    if (!h.is_square() || h.rows() % 2 != 0) throw ShapeError("eigenvalue_pairs: matrix must be square of even size");
    if (max_abs(h - adjoint(h)) > tol) throw StructureError("eigenvalue_pairs: matrix is not Hermitian");
    if (j_commutator_residual(h) > tol) throw StructureError("eigenvalue_pairs: J conj(H) != H J");
    const HermitianEigen eig = hermitian_eigen(h);
    std::vector<double> desc(eig.values.rbegin(), eig.values.rend());
    double scale = 1.0;
    for (double v : desc) scale = std::max(scale, std::abs(v));
    std::vector<double> out;
    for (std::size_t k = 0; k < desc.size(); k += 2) {
        if (std::abs(desc[k] - desc[k + 1]) > 1e3 * tol * scale)
            throw PairingError("eigenvalue_pairs: eigenvalues do not occur in pairs");
        out.push_back(0.5 * (desc[k] + desc[k + 1]));
    }
    return out;
}

double tau_det(const QMatrix& m) { return det(tau(m)).real(); }

} // namespace quatla
