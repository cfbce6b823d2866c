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

#include "qid/linalg.hpp"

#include "qid/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qid {

namespace {

int count_rank(const RealVector& sigma, double tol_rank) {
    if (sigma.size() == 0) {
        return 0;
    }
    const double cutoff = tol_rank * sigma(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) {
            ++r;
        }
    }
    return r;
}

} // namespace

bool is_finite(const Matrix& a) {
    return a.allFinite();
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_density_operator(const Matrix& rho, double tol) {
    if (!is_hermitian(rho, tol)) {
        return false;
    }
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

SvdFactors svd(const Matrix& a, double tol_rank) {
    if (!is_finite(a)) {
        throw InvalidInput("svd: matrix has non-finite entries");
    }
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdFactors f;
    f.left = solver.matrixU();
    f.right = solver.matrixV();
    f.tol_rank = tol_rank;
    // Keep the full min(rows, cols) spectrum, zeros included.
    const Eigen::Index n = std::min(a.rows(), a.cols());
    f.singular_values = solver.singularValues().head(n);
    f.rank = count_rank(f.singular_values, tol_rank);
    return f;
}

SvdFactors svd_aligned(const Matrix& a, const Matrix& rho, double tol_rank) {
    SvdFactors f = svd(a, tol_rank);
    const Eigen::Index n = f.singular_values.size();
    if (n < 2) {
        return f;
    }
    const double scale = std::max(1.0, f.sigma_max());
    const double group_tol = 1e-8 * scale;

    const Matrix projected = f.right.adjoint() * rho * f.right;
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n &&
               f.singular_values(stop - 1) - f.singular_values(stop) <= group_tol) {
            ++stop;
        }
        const Eigen::Index len = stop - start;
        if (len > 1) {
            Matrix block = projected.block(start, start, len, len);
            block = 0.5 * (block + block.adjoint());
            Eigen::SelfAdjointEigenSolver<Matrix> es(block);
            // Descending eigenvalue order within the block.
            Matrix w(len, len);
            for (Eigen::Index k = 0; k < len; ++k) {
                w.col(k) = es.eigenvectors().col(len - 1 - k);
            }
            f.right.middleCols(start, len) = f.right.middleCols(start, len) * w;
            f.left.middleCols(start, len) = f.left.middleCols(start, len) * w;
        }
        start = stop;
    }
    return f;
}

Matrix pseudoinverse(const Matrix& a, double tol_rank) {
    const SvdFactors f = svd(a, tol_rank);
    RealVector inv = RealVector::Zero(f.singular_values.size());
    for (int i = 0; i < f.rank; ++i) {
        inv(i) = 1.0 / f.singular_values(i);
    }
    return f.right * inv.asDiagonal() * f.left.adjoint();
}

double schatten_norm(const Matrix& a, double p) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidInput("schatten_norm: requires p >= 1 or p = infinity");
    }
    const RealVector sigma = svd(a).singular_values;
    if (sigma.size() == 0) {
        return 0.0;
    }
    if (std::isinf(p)) {
        return sigma(0);
    }
    if (sigma(0) == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        sum += std::pow(sigma(i), p);
    }
    return std::pow(sum, 1.0 / p);
}

double condition_number(const Matrix& a, double tol_rank) {
    if (a.rows() != a.cols()) {
        throw InvalidInput("condition_number: matrix must be square");
    }
    const SvdFactors f = svd(a, tol_rank);
    if (f.rank < a.rows()) {
        return std::numeric_limits<double>::infinity();
    }
    return f.singular_values(0) / f.singular_values(a.rows() - 1);
}

Matrix range_projector(const Matrix& a, double tol_rank) {
    const SvdFactors f = svd(a, tol_rank);
    Matrix p = Matrix::Zero(a.rows(), a.rows());
    for (int i = 0; i < f.rank; ++i) {
        p.noalias() += f.left.col(i) * f.left.col(i).adjoint();
    }
    return p;
}

Matrix kernel_complement_projector(const Matrix& a, double tol_rank) {
    const SvdFactors f = svd(a, tol_rank);
    Matrix p = Matrix::Zero(a.cols(), a.cols());
    for (int i = 0; i < f.rank; ++i) {
        p.noalias() += f.right.col(i) * f.right.col(i).adjoint();
    }
    return p;
}

double entropy_bits(const RealVector& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        const double x = p(i);
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

double shannon_entropy(const RealVector& p) {
    constexpr double clamp_window = 1e-12;
    double total = 0.0;
    RealVector q(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        const double x = p(i);
        if (!std::isfinite(x) || x < -clamp_window) {
            throw InvalidDistribution("shannon_entropy: negative probability entry");
        }
        q(i) = std::clamp(x, 0.0, 1.0);
        total += x;
    }
    if (std::abs(total - 1.0) > kTolAlgebra) {
        throw InvalidDistribution("shannon_entropy: probabilities do not sum to 1");
    }
    return entropy_bits(q);
}

RealVector hermitian_eigenvalues(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().reverse();
}

double von_neumann_entropy(const Matrix& rho) {
    if (!is_density_operator(rho)) {
        throw InvalidDistribution("von_neumann_entropy: not a density operator");
    }
    RealVector ev = hermitian_eigenvalues(rho);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        ev(i) = std::clamp(ev(i), 0.0, 1.0);
    }
    return entropy_bits(ev);
}

double commutator_norm(const Matrix& a, const Matrix& b) {
    return (a * b - b * a).norm();
}

Matrix partial_trace_second(const Matrix& rho, int dim_a, int dim_b) {
    if (rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw InvalidInput("partial_trace_second: dimension mismatch");
    }
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_a; ++j) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < dim_b; ++k) {
                acc += rho(static_cast<Eigen::Index>(i) * dim_b + k,
                           static_cast<Eigen::Index>(j) * dim_b + k);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

} // namespace qid
