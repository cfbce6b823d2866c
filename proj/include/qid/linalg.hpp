// Copyright 2026 The qid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// Dense complex linear algebra used throughout qid: singular value
/// decomposition with an explicit rank tolerance, Moore-Penrose
/// pseudoinverse, Schatten norms, range/kernel projectors and the entropies
/// of spectra. All entropies are in bits (log base 2).

#ifndef QID_LINALG_HPP
#define QID_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace qid {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Singular values at or below kTolRank * sigma_1 count as zero.
inline constexpr double kTolRank = 1e-10;
/// Default tolerance for algebraic identities (idempotence, unitarity, ...).
inline constexpr double kTolAlgebra = 1e-9;
/// Completeness tolerance for constructed instruments (sum of M_i^dag M_i).
inline constexpr double kTolCompleteness = 1e-8;
/// Ensemble weights lambda_i at or below this are excluded from supports.
inline constexpr double kTolSupport = 1e-12;

/// SVD of A as left * diag(singular_values) * right.adjoint(), with the
/// singular values sorted non-increasing and zeros included. `rank` counts
/// values above tol_rank * sigma_1.
struct SvdFactors {
    Matrix left;
    RealVector singular_values;
    Matrix right;
    int rank = 0;
    double tol_rank = kTolRank;

    double sigma_max() const { return singular_values.size() ? singular_values(0) : 0.0; }
    /// Smallest non-vanishing singular value; 0 for the zero matrix.
    double sigma_min_positive() const {
        return rank > 0 ? singular_values(rank - 1) : 0.0;
    }
    Matrix reconstruct() const {
        return left * singular_values.asDiagonal() * right.adjoint();
    }
};

/// Throws InvalidInput on non-finite entries.
SvdFactors svd(const Matrix& a, double tol_rank = kTolRank);

/// SVD of `a` whose factors are additionally aligned with the Hermitian
/// operator `rho`: within every block of (numerically) equal singular
/// values, the right factor is rotated so that right.adjoint()*rho*right is
/// diagonal there, and the left factor is rotated identically, leaving the
/// product left*Sigma*right.adjoint() unchanged. When rho commutes with
/// a.adjoint()*a this makes the diagonal of right.adjoint()*rho*right equal
/// to the joint eigenvalues, which several identities in the tradeoff
/// module rely on.
SvdFactors svd_aligned(const Matrix& a, const Matrix& rho, double tol_rank = kTolRank);

/// Moore-Penrose pseudoinverse via the SVD, inverting only singular values
/// above tol_rank * sigma_1.
Matrix pseudoinverse(const Matrix& a, double tol_rank = kTolRank);

/// p-Schatten norm (sum_i sigma_i^p)^(1/p); p = infinity gives sigma_1,
/// p = 1 the trace norm, p = 2 the Hilbert-Schmidt norm. Requires p >= 1.
double schatten_norm(const Matrix& a, double p);

/// sigma_1 / sigma_d for full-rank square A; +infinity when rank deficient.
double condition_number(const Matrix& a, double tol_rank = kTolRank);

/// Orthogonal projector onto the range of A (equals A * pinv(A)).
Matrix range_projector(const Matrix& a, double tol_rank = kTolRank);

/// Orthogonal projector onto the orthogonal complement of the kernel of A,
/// i.e. onto the range of A.adjoint() (equals pinv(A) * A).
Matrix kernel_complement_projector(const Matrix& a, double tol_rank = kTolRank);

/// Shannon entropy in bits with the 0 log 0 = 0 convention. Entries may dip
/// to -1e-12 from floating point and are clamped to [0, 1]; the vector must
/// sum to 1 within 1e-9. Throws InvalidDistribution otherwise.
double shannon_entropy(const RealVector& p);

/// Shannon entropy of an unchecked nonnegative vector (no normalization
/// test); used for sub-distributions where the total is known by context.
double entropy_bits(const RealVector& p);

/// Von Neumann entropy in bits of a density operator (Hermitian, positive
/// semidefinite, unit trace within 1e-9). Throws InvalidDistribution.
double von_neumann_entropy(const Matrix& rho);

/// Eigenvalues of a Hermitian matrix, sorted non-increasing.
RealVector hermitian_eigenvalues(const Matrix& a);

/// Hilbert-Schmidt norm of the commutator [a, b].
double commutator_norm(const Matrix& a, const Matrix& b);

/// Partial trace over the second factor of a (dim_a*dim_b) x (dim_a*dim_b)
/// operator on a bipartite space, with the first-factor index major.
Matrix partial_trace_second(const Matrix& rho, int dim_a, int dim_b);

bool is_finite(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kTolAlgebra);

/// Validates Hermiticity, positivity and unit trace within `tol`.
bool is_density_operator(const Matrix& rho, double tol = kTolAlgebra);

} // namespace qid

#endif // QID_LINALG_HPP
