#pragma once

// Structure-preserving diagonalization of hyperhermitian matrices, the Moore
// determinant and the mixed discriminant.

#include <span>
#include <vector>

#include "quatla/quaternion.hpp"

namespace quatla {

/// Quaternionic unitary E and real eigenvalues nu (descending) with
/// E^* M E = diag(nu) for the source matrix M.
struct SpectralData {
    QMatrix E;
    std::vector<double> nu;
};

/// Eigen-decomposition of a complex Hermitian matrix. Eigenvalues ascending;
/// `vectors` holds the matching unit eigenvectors as columns.
struct HermitianEigen {
    std::vector<double> values;
    CMatrix vectors;
};

struct JacobiOptions {
    double threshold = 1e-13; ///< converged once off(H) <= threshold * ||H||_F
    int max_sweeps = 30;
};

/// Cyclic complex Jacobi. Only the Hermitian part of `h` is used.
/// Throws ConvergenceError if `max_sweeps` is exhausted.
HermitianEigen hermitian_eigen(const CMatrix& h, JacobiOptions opts = {});

/// Throws NotHyperhermitian or ConvergenceError.
SpectralData diagonalize_hyperhermitian(const QMatrix& m, double tol = kDefaultTol);

/// Product of the real eigenvalues of a hyperhermitian matrix.
double moore_det(const QMatrix& m, double tol = kDefaultTol);

/// (1/n!) * coefficient of lambda_1...lambda_n in det(sum lambda_i M_i),
/// computed by inclusion-exclusion over the 2^n subsets.
double mixed_discriminant(std::span<const QMatrix> ms, double tol = kDefaultTol);

/// One eigenvalue per j-conjugate pair of a Hermitian H with J conj(H) = H J,
/// descending. Throws PairingError if the spectrum does not pair up.
std::vector<double> eigenvalue_pairs(const CMatrix& h, double tol = kDefaultTol);

/// Hermitian determinant through the embedding: det_C(tau(M)).
double tau_det(const QMatrix& m);

} // namespace quatla
