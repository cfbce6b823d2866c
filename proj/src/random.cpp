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

#include "qid/random.hpp"

#include "qid/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

namespace qid {

Matrix ginibre(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            a(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    return a;
}

Vector haar_random_state(int dim, Rng& rng) {
    if (dim < 1) {
        throw InvalidInput("haar_random_state: dim must be positive");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = Complex(gauss(rng), gauss(rng));
    }
    return v / v.norm();
}

Vector haar_random_state(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_state(dim, rng);
}

Matrix haar_random_unitary(int dim, Rng& rng) {
    const Matrix a = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity column by column; this makes Q exactly Haar.
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        q.col(i) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
    return q;
}

RealVector random_simplex(int n, Rng& rng) {
    std::exponential_distribution<double> expo(1.0);
    RealVector w(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        w(i) = expo(rng) + 1e-12;
        total += w(i);
    }
    return w / total;
}

Matrix random_density(int dim, Rng& rng) {
    const Matrix u = haar_random_unitary(dim, rng);
    const RealVector w = random_simplex(dim, rng);
    return u * w.asDiagonal() * u.adjoint();
}

Matrix random_contraction_matrix(int dim, Rng& rng, int rank) {
    Matrix a = ginibre(dim, dim, rng);
    SvdFactors f = svd(a);
    if (rank > 0 && rank < dim) {
        RealVector sigma = f.singular_values;
        for (int i = rank; i < dim; ++i) {
            sigma(i) = 0.0;
        }
        a = f.left * sigma.asDiagonal() * f.right.adjoint();
        f = svd(a);
    }
    return a / f.sigma_max();
}

std::vector<Matrix> random_instrument_matrices(int dim, int n_outcomes, Rng& rng) {
    std::vector<Matrix> raw;
    raw.reserve(n_outcomes);
    Matrix gram = Matrix::Zero(dim, dim);
    for (int i = 0; i < n_outcomes; ++i) {
        raw.push_back(ginibre(dim, dim, rng));
        gram.noalias() += raw.back().adjoint() * raw.back();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const RealVector inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    const Matrix whitener = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    for (auto& m : raw) {
        m = m * whitener;
    }
    return raw;
}

RealMatrix random_conditional_probabilities(int n_outcomes, int dim, Rng& rng) {
    RealMatrix p(n_outcomes, dim);
    for (int x = 0; x < dim; ++x) {
        p.col(x) = random_simplex(n_outcomes, rng);
    }
    return p;
}

} // namespace qid
