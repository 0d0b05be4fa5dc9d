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

#ifndef GAUSSMET_ESTIMATION_HPP
#define GAUSSMET_ESTIMATION_HPP

#include <complex>

#include "gaussmet/covariance.hpp"
#include "gaussmet/model.hpp"
#include "gaussmet/modes.hpp"

namespace gaussmet {

/// Detection mode: normalized derivative of the mean-field mode, plus the
/// characteristic parameter scale p_c = 1 / |du1/dp|.
struct DetectionMode {
    ModeVector v1;
    double p_c = 0.0;
};

/// Orthonormal pair (v1, v2) spanning {u1(p0), v1} together with the overlap
/// decomposition u1(p0) = i c11 v1 + c12 v2, c11 real. `degenerate` marks the
/// pure-phase case u1(p0) parallel to i v1, where v2 is an arbitrary unit
/// vector orthogonal to v1 and c12 = 0.
struct DetectionBasis {
    ModeVector v1;
    ModeVector v2;
    double p_c = 0.0;
    double c11 = 0.0;
    std::complex<double> c12;
    bool degenerate = false;
};

/// Fisher information split into its mean-displacement and covariance
/// curvature parts. `cov_term` is (1/2) tr[Sigma (Sigma^-1)''] by central
/// second difference; `classical_cov_term` is the Gaussian likelihood
/// curvature (1/2) tr[(Sigma^-1 Sigma')^2] by central first difference. The
/// two agree whenever det Sigma(p) is constant; both are reported so the gap
/// is visible for families where it is not. total = mean_term + cov_term.
/// p_c is 0 when the mean field does not move with p (mean_term = 0).
struct FisherBreakdown {
    double mean_term = 0.0;
    double cov_term = 0.0;
    double classical_cov_term = 0.0;
    double total = 0.0;
    double p_c = 0.0;
};

/// du1/dp at model.p0: the model's analytic derivative when present,
/// otherwise the central difference (u1(p0+h) - u1(p0-h)) / (2h) with
/// h = step, defaulting to 1e-5 max(1, |p0|). Throws NumericalError when the
/// difference is indistinguishable from zero.
ModeVector mean_field_derivative(const ParameterizedModel& model, double step = 0.0);

/// Normalizes du into the detection mode; p_c = 1/|du|.
DetectionMode detection_mode(const ModeVector& du);

/// Builds the detection basis from u1(p0) and the detection mode. v2 is the
/// normalized residual of u1(p0) after projecting out v1; when the residual
/// norm falls below 1e-10 the degenerate branch picks any unit vector
/// orthogonal to v1 (impossible in dimension 1, which is an error).
DetectionBasis detection_basis(const ModeVector& u1_at_p0, const ModeVector& v1,
                               double p_c);

/// Convenience: derivative, detection mode and basis straight from a model.
DetectionBasis detection_basis(const ParameterizedModel& model, double step = 0.0);

/// Completes {v1, v2} to a full basis whose first mode is the detection
/// mode; covariances re-expressed in it have the detection quadrature at
/// index 0.
ModeBasis detection_mode_basis(const DetectionBasis& basis);

/// Which route computes the mean-displacement term.
enum class BasisChoice {
    working,    // g^T Sigma^-1 g directly in the working basis
    detection,  // re-express Sigma in the detection basis, use 4N/p_c^2 (Sigma^-1)_11
};

struct FisherOptions {
    BasisChoice basis_choice = BasisChoice::working;
    double mean_step = 0.0;  // 0 = default 1e-5 max(1, |p0|)
    double cov_step = 1e-3;  // curvature amplifies roundoff; keep coarse
};

/// Full Fisher information of the model at p0 (both terms). A mean field
/// with no dependence on p contributes mean_term = 0 rather than an error.
FisherBreakdown fisher_information(const ParameterizedModel& model,
                                   const FisherOptions& options = {});

/// Single-element form 4N (Sigma^-1)_(k,k) / p_c^2 for a covariance
/// expressed in a basis whose mode `v1_index` is the detection mode.
double fisher_simplified(double photons, double p_c, const CovarianceMatrix& cov_at_p0,
                         int v1_index = 0);

/// Cramer-Rao bound 1/sqrt(fisher) on any unbiased estimator of p.
double cramer_rao_bound(double fisher);

}  // namespace gaussmet

#endif  // GAUSSMET_ESTIMATION_HPP
