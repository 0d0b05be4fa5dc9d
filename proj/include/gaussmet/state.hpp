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

#ifndef GAUSSMET_STATE_HPP
#define GAUSSMET_STATE_HPP

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <vector>

#include "gaussmet/covariance.hpp"
#include "gaussmet/modes.hpp"

namespace gaussmet {

/// Multimode Gaussian state: mean quadrature vector and covariance matrix,
/// together with the mode basis the quadratures refer to.
struct GaussianState {
    Eigen::VectorXd mean;  // length 2M, ordering (Y+_1..Y+_M, Y-_1..Y-_M)
    CovarianceMatrix cov;
    ModeBasis basis;

    GaussianState(Eigen::VectorXd mean_in, CovarianceMatrix cov_in);
    GaussianState(Eigen::VectorXd mean_in, CovarianceMatrix cov_in, ModeBasis basis_in);

    int modes() const { return cov.modes(); }

    /// Zero-mean state with the given covariance.
    static GaussianState centered(CovarianceMatrix cov_in);

    /// Vacuum in M modes.
    static GaussianState vacuum(int modes);
};

/// Mean quadratures of a coherent amplitude `alpha` placed in mode `u`:
/// Y+_k = 2 Re(alpha u_k), Y-_k = 2 Im(alpha u_k).
Eigen::VectorXd quadrature_mean(const ModeVector& u, std::complex<double> alpha);

/// Quadrature direction of mode `u` on the Y+ side: (Re u; Im u). This is the
/// unit vector along which a real amplitude placed in `u` displaces the mean.
Eigen::VectorXd quadrature_embedding(const ModeVector& u);

/// Total mean photon number: |mean|^2/4 + (tr Sigma - 2M)/4.
double photon_number(const GaussianState& state);

/// s squeezed vacua in the first s of M modes: mode i has Y+ variance
/// sigma_i^2 and Y- variance 1/sigma_i^2; remaining modes are vacuum.
GaussianState squeezed_vacuum_state(const std::vector<double>& sigmas, int modes);

/// Applies the linear-coupler unitary U (M x M, checked unitary to 1e-10) to
/// the state. On quadratures it acts as the orthogonal symplectic matrix
/// S(U) = [[Re U, -Im U], [Im U, Re U]]: mean -> S mean, cov -> S cov S^T.
/// Photon number and the symplectic spectrum are preserved.
GaussianState apply_passive_transform(const GaussianState& state, const Eigen::MatrixXcd& u);

/// The 2M x 2M quadrature matrix S(U) for a mode unitary U.
Eigen::MatrixXd quadrature_transform(const Eigen::MatrixXcd& u);

/// Re-expresses the state in the complete basis `target` (modes given in the
/// same reference coordinates as the state's current basis).
GaussianState express_in_basis(const GaussianState& state, const ModeBasis& target);

/// Log of the Wigner density at quadrature point y:
///   -M ln(2 pi) - (1/2) ln det Sigma - (1/2) (y - mean)^T Sigma^-1 (y - mean).
/// The det term is kept so mixed states integrate to 1 as well.
double wigner_log_density(const GaussianState& state, const Eigen::VectorXd& y);

/// Precomputed factorization for repeated Wigner log-density evaluations.
class WignerEvaluator {
  public:
    explicit WignerEvaluator(const GaussianState& state);
    double operator()(const Eigen::VectorXd& y) const;

  private:
    Eigen::VectorXd mean_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    double log_norm_ = 0.0;  // -M ln(2 pi) - (1/2) ln det
};

}  // namespace gaussmet

#endif  // GAUSSMET_STATE_HPP
