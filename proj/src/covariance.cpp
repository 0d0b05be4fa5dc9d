// Copyright 2026 The gaussmet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussmet/covariance.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "gaussmet/errors.hpp"

namespace gaussmet {

Eigen::MatrixXd symplectic_form(int modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    omega.topRightCorner(modes, modes) = Eigen::MatrixXd::Identity(modes, modes);
    omega.bottomLeftCorner(modes, modes) = -Eigen::MatrixXd::Identity(modes, modes);
    return omega;
}

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd sigma) : sigma_(std::move(sigma)) {
    const int n = static_cast<int>(sigma_.rows());
    if (n < 2 || n % 2 != 0 || sigma_.cols() != n)
        throw ValidationError("covariance matrix must be square with even side");

    const double scale = std::max(1.0, sigma_.cwiseAbs().maxCoeff());
    if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ValidationError("covariance matrix is not symmetric");
    sigma_ = ((sigma_ + sigma_.transpose()) / 2.0).eval();

    Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
    if (llt.info() != Eigen::Success)
        throw NumericalError("covariance matrix is singular or not positive definite");

    // Uncertainty relation: Sigma + i Omega must be positive semidefinite.
    const int m = n / 2;
    Eigen::MatrixXcd h = sigma_.cast<std::complex<double>>();
    h += std::complex<double>(0.0, 1.0) * symplectic_form(m).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw ValidationError("covariance matrix violates the uncertainty relation");
}

CovarianceMatrix CovarianceMatrix::identity(int modes) {
    return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

Eigen::MatrixXd CovarianceMatrix::inverse() const {
    Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
    if (llt.info() != Eigen::Success)
        throw NumericalError("covariance matrix is singular");
    return llt.solve(Eigen::MatrixXd::Identity(side(), side()));
}

double CovarianceMatrix::determinant() const {
    Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
    if (llt.info() != Eigen::Success)
        throw NumericalError("covariance matrix is singular");
    const Eigen::MatrixXd l = llt.matrixL();
    double logdet = 0.0;
    for (int i = 0; i < side(); ++i) logdet += std::log(l(i, i));
    return std::exp(2.0 * logdet);
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov) {
    const int m = cov.modes();
    // i Omega Sigma is similar to the Hermitian matrix i K Omega K with
    // K = Sigma^(1/2), so its spectrum is real and comes in +/- pairs.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sqrt_solver(cov.matrix());
    if (sqrt_solver.info() != Eigen::Success)
        throw NumericalError("covariance eigendecomposition failed");
    Eigen::MatrixXd k = sqrt_solver.operatorSqrt();
    Eigen::MatrixXcd h =
        std::complex<double>(0.0, 1.0) * (k * symplectic_form(m) * k).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);

    std::vector<double> nu;
    nu.reserve(2 * m);
    for (int i = 0; i < 2 * m; ++i) nu.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(nu.begin(), nu.end());
    // Merge the +/- duplicates pairwise.
    std::vector<double> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        const double a = nu[2 * i], b = nu[2 * i + 1];
        if (std::abs(a - b) > 1e-9 * std::max(1.0, b))
            throw NumericalError("symplectic spectrum did not pair up");
        out.push_back((a + b) / 2.0);
    }
    return out;
}

bool is_pure(const CovarianceMatrix& cov, double tol) {
    for (double nu : symplectic_eigenvalues(cov))
        if (std::abs(nu - 1.0) > tol) return false;
    return true;
}

}  // namespace gaussmet
