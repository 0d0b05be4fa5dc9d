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

#ifndef GAUSSMET_COVARIANCE_HPP
#define GAUSSMET_COVARIANCE_HPP

#include <Eigen/Core>
#include <vector>

namespace gaussmet {

// Quadrature ordering is (Y+_1..Y+_M, Y-_1..Y-_M) everywhere, with
// Y+ = b^dag + b and Y- = i(b^dag - b). Vacuum covariance is the identity;
// a coherent amplitude alpha has mean (2 Re alpha, 2 Im alpha).

/// Symplectic form Omega = [[0, I], [-I, 0]] for M modes, so [Y_a, Y_b] = 2i Omega_ab.
Eigen::MatrixXd symplectic_form(int modes);

/// 2M x 2M real symmetric quadrature covariance matrix.
///
/// Construction validates the state is admissible: symmetric (to 1e-12,
/// scaled by the matrix norm), positive definite, and satisfying the
/// uncertainty relation eig(Sigma + i Omega) >= -1e-10. The stored matrix
/// is exactly symmetrized.
class CovarianceMatrix {
  public:
    CovarianceMatrix() = default;
    explicit CovarianceMatrix(Eigen::MatrixXd sigma);

    static CovarianceMatrix identity(int modes);

    int side() const { return static_cast<int>(sigma_.rows()); }
    int modes() const { return side() / 2; }
    const Eigen::MatrixXd& matrix() const { return sigma_; }
    double operator()(int i, int j) const { return sigma_(i, j); }

    Eigen::MatrixXd inverse() const;
    double determinant() const;

  private:
    Eigen::MatrixXd sigma_;
};

/// Absolute values of the eigenvalues of i Omega Sigma, one per mode
/// (duplicate +/- pairs merged to tolerance 1e-9), sorted ascending.
/// All are >= 1 for physical states; all equal to 1 iff the state is pure.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov);

/// Pure state test: every symplectic eigenvalue within `tol` of 1.
/// Strictly stronger than checking det(Sigma) = 1 alone.
bool is_pure(const CovarianceMatrix& cov, double tol = 1e-9);

}  // namespace gaussmet

#endif  // GAUSSMET_COVARIANCE_HPP
