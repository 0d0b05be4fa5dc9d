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

#ifndef GAUSSMET_MODEL_HPP
#define GAUSSMET_MODEL_HPP

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "gaussmet/covariance.hpp"
#include "gaussmet/modes.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

/// A parameter-dependent Gaussian optical field: the normalized mean-field
/// mode u1(p) carrying N photons, plus the covariance family Sigma(p) written
/// in a fixed p-independent working basis (the reference basis). The mean
/// amplitude convention is real: mean field = sqrt(N) u1(p).
struct ParameterizedModel {
    std::function<ModeVector(double)> mode;             // u1(p), normalized
    std::function<ModeVector(double)> mode_derivative;  // analytic du1/dp, may be empty
    std::function<Eigen::MatrixXd(double)> covariance;  // Sigma(p), working basis
    double photons = 0.0;                               // N, p-independent
    double p0 = 0.0;                                    // expansion point
    int dim = 0;                                        // working-basis dimension = mode count

    ModeVector mode_at(double p) const;
    CovarianceMatrix covariance_at(double p) const;

    /// Mean quadratures 2 sqrt(N) (Re u1(p); Im u1(p)) in the working basis.
    Eigen::VectorXd mean_quadratures(double p) const;

    /// Full Gaussian state (mean + covariance) at parameter value p.
    GaussianState state_at(double p) const;
};

// Named mode families. Each supplies the analytic derivative.

/// u1(p) = cos(rate p) e_from + sin(rate p) e_to; p_c = 1/rate.
ParameterizedModel rotation_model(int dim, int from, int to, double rate, double photons);

/// u1(p) = exp(i rate p) e_index; pure phase encoding, p_c = 1/rate.
ParameterizedModel phase_model(int dim, int index, double rate, double photons);

/// Tabulated u1 on a p-grid; linear interpolation, renormalized after
/// interpolation. No analytic derivative (finite differences apply).
/// Table nodes must be normalized and the grid strictly increasing.
ParameterizedModel table_model(std::vector<double> grid, std::vector<ModeVector> nodes,
                               double photons);

// Covariance families (all in the working basis).

/// p-independent covariance.
std::function<Eigen::MatrixXd(double)> constant_covariance(Eigen::MatrixXd sigma);

/// Single-mode squeezed covariance rotating in the (Y+, Y-) plane of mode
/// `which` at angular rate `rate`:
///   block(p) = R(rate p) diag(sigma^2, 1/sigma^2) R(rate p)^T,
/// identity elsewhere. det is constant, the family stays pure.
std::function<Eigen::MatrixXd(double)> rotating_squeezed_covariance(int modes, int which,
                                                                    double sigma, double rate);

/// Tabulated covariance on a p-grid with entrywise linear interpolation.
std::function<Eigen::MatrixXd(double)> table_covariance(std::vector<double> grid,
                                                        std::vector<Eigen::MatrixXd> nodes);

}  // namespace gaussmet

#endif  // GAUSSMET_MODEL_HPP
