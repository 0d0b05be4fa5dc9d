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

#include "gaussmet/resource.hpp"

#include <Eigen/QR>
#include <cmath>

#include "gaussmet/errors.hpp"
#include "gaussmet/estimation.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

SqueezingBudget::SqueezingBudget(std::vector<double> sigmas) : sigmas_(std::move(sigmas)) {
    if (sigmas_.empty()) {
        throw ValidationError("squeezing budget must contain at least one resource");
    }
    for (double s : sigmas_) {
        if (!(s > 0) || !std::isfinite(s)) {
            throw ValidationError("squeezing values must be positive and finite");
        }
    }
    for (int i = 1; i < size(); ++i) {
        if (effective_sigma(i) < effective_sigma(min_index_)) {
            min_index_ = i;
        }
    }
}

double SqueezingBudget::effective_sigma(int i) const {
    double s = sigmas_[i];
    return std::min(s, 1.0 / s);
}

CovarianceMatrix optimal_covariance(const SqueezingBudget& budget, int modes) {
    if (budget.size() > modes) {
        throw ValidationError("more squeezing resources than modes");
    }
    Eigen::VectorXd d = Eigen::VectorXd::Ones(2 * modes);
    int slot = 0;
    auto place = [&](int resource) {
        double s = budget.effective_sigma(resource);
        d(slot) = s * s;
        d(modes + slot) = 1.0 / (s * s);
        ++slot;
    };
    place(budget.min_index());
    for (int i = 0; i < budget.size(); ++i) {
        if (i != budget.min_index()) {
            place(i);
        }
    }
    return CovarianceMatrix(d.asDiagonal());
}

double optimal_crb(const SqueezingBudget& budget, double photons, double p_c) {
    if (!(photons > 0)) {
        throw ValidationError("photon number must be positive");
    }
    if (!(p_c > 0)) {
        throw ValidationError("p_c must be positive");
    }
    return p_c * budget.sigma_min() / (2.0 * std::sqrt(photons));
}

SpectralBoundReport spectral_bound_report(const CovarianceMatrix& cov,
                                          const SqueezingBudget& budget) {
    SpectralBoundReport report;
    report.value = cov.inverse()(0, 0);
    double s = budget.sigma_min();
    report.bound = 1.0 / (s * s);
    if (report.value > report.bound * (1.0 + 1e-9)) {
        throw NumericalError("inverse-covariance element exceeds the spectral bound: "
                             "covariance not reachable from this budget by passive transforms");
    }
    report.attained = std::abs(report.value - report.bound) < 1e-9 * report.bound;
    return report;
}

namespace {

// CRB of the model's mean-field signal against a constant covariance given in
// the completed candidate basis. g is the mean-derivative direction in that
// basis; constant covariances contribute no curvature term.
double crb_against(const Eigen::VectorXd& g, const Eigen::MatrixXd& sigma_in_basis) {
    CovarianceMatrix cov(sigma_in_basis);
    double fisher = g.dot(cov.inverse() * g);
    return cramer_rao_bound(fisher);
}

}  // namespace

std::vector<SweepRow> allocation_sweep(const SqueezingBudget& budget,
                                       const ParameterizedModel& model,
                                       const std::vector<ModeVector>& candidates) {
    if (candidates.empty()) {
        throw ValidationError("allocation sweep needs at least one candidate mode");
    }
    ModeBasis check(candidates);  // validates orthonormality
    if (check.dim() != model.dim) {
        throw ValidationError("candidate modes do not match the model dimension");
    }

    ModeVector du = mean_field_derivative(model);
    DetectionMode dm = detection_mode(du);
    int d = model.dim;
    ModeBasis full = complete_basis(candidates, d);

    Eigen::VectorXd g(2 * d);
    double scale = 2.0 * std::sqrt(model.photons) / dm.p_c;
    for (int j = 0; j < d; ++j) {
        std::complex<double> w = inner_product(full.mode(j), dm.v1);
        g(j) = scale * w.real();
        g(d + j) = scale * w.imag();
    }

    double best = optimal_crb(budget, model.photons, dm.p_c);
    double smin = budget.sigma_min();
    int n_candidates = static_cast<int>(candidates.size());
    std::vector<SweepRow> table;

    for (int j = 0; j < n_candidates; ++j) {
        Eigen::VectorXd diag = Eigen::VectorXd::Ones(2 * d);
        diag(j) = smin * smin;
        diag(d + j) = 1.0 / (smin * smin);
        SweepRow row;
        row.placement = "v" + std::to_string(j + 1);
        row.entanglement = "none";
        row.crb = crb_against(g, diag.asDiagonal());
        row.ratio_to_optimal = row.crb / best;
        table.push_back(row);
    }

    if (budget.size() >= 2 && n_candidates >= 2) {
        // Second most squeezed resource, squeezed along Y- so the balanced
        // coupler produces genuine cross-correlations.
        int second = budget.min_index() == 0 ? 1 : 0;
        for (int i = 0; i < budget.size(); ++i) {
            if (i != budget.min_index() && i != second &&
                budget.effective_sigma(i) < budget.effective_sigma(second)) {
                second = i;
            }
        }
        double sb = budget.effective_sigma(second);
        for (int j = 0; j < n_candidates; ++j) {
            for (int k = j + 1; k < n_candidates; ++k) {
                Eigen::VectorXd diag = Eigen::VectorXd::Ones(2 * d);
                diag(j) = smin * smin;
                diag(d + j) = 1.0 / (smin * smin);
                diag(k) = 1.0 / (sb * sb);
                diag(d + k) = sb * sb;
                Eigen::MatrixXcd coupler = Eigen::MatrixXcd::Identity(d, d);
                double r = 1.0 / std::sqrt(2.0);
                coupler(j, j) = r;
                coupler(j, k) = r;
                coupler(k, j) = -r;
                coupler(k, k) = r;
                Eigen::MatrixXd s = quadrature_transform(coupler);
                Eigen::MatrixXd sigma =
                    s * Eigen::MatrixXd(diag.asDiagonal()) * s.transpose();
                SweepRow row;
                row.placement = "v" + std::to_string(j + 1) + "+v" + std::to_string(k + 1);
                row.entanglement = "balanced";
                row.crb = crb_against(g, sigma);
                row.ratio_to_optimal = row.crb / best;
                table.push_back(row);
            }
        }
    }
    return table;
}

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
    if (dim < 1) {
        throw ValidationError("unitary dimension must be positive");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd z(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double re = normal(rng);
            double im = normal(rng);
            z(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        std::complex<double> rjj = r(j, j);
        double mag = std::abs(rjj);
        std::complex<double> phase = mag > 0 ? rjj / mag : std::complex<double>(1, 0);
        q.col(j) *= phase;
    }
    return q;
}

}  // namespace gaussmet
