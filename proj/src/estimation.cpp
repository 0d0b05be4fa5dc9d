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

#include "gaussmet/estimation.hpp"

#include <cmath>
#include <optional>

#include "gaussmet/errors.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

namespace {

constexpr double kZeroDerivative = 1e-13;

double default_mean_step(double p0) {
    return 1e-5 * std::max(1.0, std::abs(p0));
}

// nullopt when the mean field is numerically constant in p.
std::optional<ModeVector> try_mean_field_derivative(const ParameterizedModel& model,
                                                    double step) {
    if (model.mode_derivative) {
        ModeVector du = model.mode_derivative(model.p0);
        if (du.norm() < kZeroDerivative) {
            return std::nullopt;
        }
        return du;
    }
    double h = step > 0 ? step : default_mean_step(model.p0);
    ModeVector plus = model.mode_at(model.p0 + h);
    ModeVector minus = model.mode_at(model.p0 - h);
    ModeVector diff = plus - minus;
    if (diff.norm() < kZeroDerivative) {
        return std::nullopt;
    }
    return diff * (1.0 / (2.0 * h));
}

}  // namespace

ModeVector mean_field_derivative(const ParameterizedModel& model, double step) {
    std::optional<ModeVector> du = try_mean_field_derivative(model, step);
    if (!du) {
        throw NumericalError("derivative indistinguishable from zero");
    }
    return *du;
}

DetectionMode detection_mode(const ModeVector& du) {
    double n = du.norm();
    if (n < 1e-12) {
        throw NumericalError(
            "zero mean-field derivative: parameter not encoded in the mean field");
    }
    DetectionMode dm;
    dm.p_c = 1.0 / n;
    dm.v1 = du * dm.p_c;
    return dm;
}

DetectionBasis detection_basis(const ModeVector& u1_at_p0, const ModeVector& v1,
                               double p_c) {
    if (u1_at_p0.dim() != v1.dim()) {
        throw ValidationError("u1 and v1 live in different dimensions");
    }
    if (!u1_at_p0.is_normalized(1e-10) || !v1.is_normalized(1e-10)) {
        throw ValidationError("detection_basis requires normalized inputs");
    }
    if (!(p_c > 0)) {
        throw ValidationError("p_c must be positive");
    }

    std::complex<double> overlap = inner_product(v1, u1_at_p0);
    // |u1(p)| = 1 for all p forces the v1 component of u1(p0) to be imaginary.
    if (std::abs(overlap.real()) > 1e-8) {
        throw NumericalError("overlap <v1, u1(p0)> has a non-imaginary part: "
                             "the mean-field mode is not normalized along the path");
    }

    DetectionBasis basis;
    basis.v1 = v1;
    basis.p_c = p_c;
    basis.c11 = (std::complex<double>(0, -1) * overlap).real();

    ModeVector residual = u1_at_p0 - v1 * overlap;
    double residual_norm = residual.norm();
    if (residual_norm > 1e-10) {
        basis.v2 = residual * (1.0 / residual_norm);
        basis.c12 = inner_product(basis.v2, u1_at_p0);
        return basis;
    }

    if (v1.dim() < 2) {
        throw ValidationError(
            "u1(p0) is parallel to i*v1 and the space is one-dimensional: "
            "no companion detection mode exists");
    }
    basis.degenerate = true;
    basis.c12 = 0.0;
    // Orthogonalize the reference vector least aligned with v1.
    int best = 0;
    double best_overlap = std::abs(v1[0]);
    for (int k = 1; k < v1.dim(); ++k) {
        double o = std::abs(v1[k]);
        if (o < best_overlap) {
            best_overlap = o;
            best = k;
        }
    }
    ModeVector candidate = ModeVector::unit(v1.dim(), best);
    ModeVector ortho = candidate - v1 * inner_product(v1, candidate);
    basis.v2 = ortho * (1.0 / ortho.norm());
    return basis;
}

DetectionBasis detection_basis(const ParameterizedModel& model, double step) {
    ModeVector du = mean_field_derivative(model, step);
    DetectionMode dm = detection_mode(du);
    return detection_basis(model.mode_at(model.p0), dm.v1, dm.p_c);
}

ModeBasis detection_mode_basis(const DetectionBasis& basis) {
    std::vector<ModeVector> seed{basis.v1};
    if (basis.v1.dim() >= 2) {
        seed.push_back(basis.v2);
    }
    return complete_basis(seed, basis.v1.dim());
}

namespace {

double mean_term_working(const ParameterizedModel& model, const DetectionMode& dm,
                         const CovarianceMatrix& cov0) {
    Eigen::VectorXd g =
        quadrature_embedding(dm.v1) * (2.0 * std::sqrt(model.photons) / dm.p_c);
    return g.dot(cov0.inverse() * g);
}

double mean_term_detection(const ParameterizedModel& model, const DetectionBasis& db,
                           const CovarianceMatrix& cov0) {
    ModeBasis full = detection_mode_basis(db);
    Eigen::MatrixXd s = quadrature_transform(basis_change_unitary(full));
    CovarianceMatrix cov_det(s * cov0.matrix() * s.transpose());
    return fisher_simplified(model.photons, db.p_c, cov_det, 0);
}

}  // namespace

FisherBreakdown fisher_information(const ParameterizedModel& model,
                                   const FisherOptions& options) {
    FisherBreakdown out;
    CovarianceMatrix cov0 = model.covariance_at(model.p0);

    std::optional<ModeVector> du = try_mean_field_derivative(model, options.mean_step);
    if (du) {
        DetectionMode dm = detection_mode(*du);
        out.p_c = dm.p_c;
        if (options.basis_choice == BasisChoice::working) {
            out.mean_term = mean_term_working(model, dm, cov0);
        } else {
            DetectionBasis db = detection_basis(model.mode_at(model.p0), dm.v1, dm.p_c);
            out.mean_term = mean_term_detection(model, db, cov0);
        }
    }

    double h = options.cov_step;
    if (!(h > 0)) {
        throw ValidationError("cov_step must be positive");
    }
    CovarianceMatrix cov_plus = model.covariance_at(model.p0 + h);
    CovarianceMatrix cov_minus = model.covariance_at(model.p0 - h);

    Eigen::MatrixXd inv0 = cov0.inverse();
    Eigen::MatrixXd inv_curvature =
        (cov_plus.inverse() - 2.0 * inv0 + cov_minus.inverse()) / (h * h);
    out.cov_term = 0.5 * (cov0.matrix() * inv_curvature).trace();

    Eigen::MatrixXd cov_slope = (cov_plus.matrix() - cov_minus.matrix()) / (2.0 * h);
    Eigen::MatrixXd a = inv0 * cov_slope;
    out.classical_cov_term = 0.5 * (a * a).trace();

    if (!std::isfinite(out.mean_term) || !std::isfinite(out.cov_term) ||
        !std::isfinite(out.classical_cov_term)) {
        throw NumericalError("Fisher information differencing produced a non-finite value");
    }
    if (out.cov_term < 0) {
        if (out.cov_term < -1e-8) {
            throw NumericalError("covariance curvature term is negative beyond "
                                 "differencing noise");
        }
        out.cov_term = 0.0;
    }
    if (out.classical_cov_term < 0) {
        if (out.classical_cov_term < -1e-8) {
            throw NumericalError("classical curvature term is negative beyond "
                                 "differencing noise");
        }
        out.classical_cov_term = 0.0;
    }

    out.total = out.mean_term + out.cov_term;
    return out;
}

double fisher_simplified(double photons, double p_c, const CovarianceMatrix& cov_at_p0,
                         int v1_index) {
    if (!(photons > 0)) {
        throw ValidationError("photon number must be positive");
    }
    if (!(p_c > 0)) {
        throw ValidationError("p_c must be positive");
    }
    if (v1_index < 0 || v1_index >= cov_at_p0.modes()) {
        throw ValidationError("v1_index out of range");
    }
    Eigen::MatrixXd inv = cov_at_p0.inverse();
    return 4.0 * photons * inv(v1_index, v1_index) / (p_c * p_c);
}

double cramer_rao_bound(double fisher) {
    if (!(fisher > 0)) {
        throw ValidationError("Fisher information must be positive");
    }
    return 1.0 / std::sqrt(fisher);
}

}  // namespace gaussmet
