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

#include "gaussmet/homodyne.hpp"

#include <cmath>

#include "gaussmet/errors.hpp"
#include "gaussmet/sampling.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

namespace {

// Signal offset and the centered detection-basis state shared by both
// sampling paths.
struct HomodyneSetup {
    double offset = 0.0;     // sqrt(N0) mean of the read quadrature
    double sqrt_n0 = 0.0;
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    GaussianState noise;

    HomodyneSetup(const ParameterizedModel& model, const DetectionBasis& detection,
                  const CovarianceMatrix& cov, const HomodyneConfig& config,
                  double p_true)
        : noise(GaussianState::vacuum(1)) {
        if (config.n_samples < 1) {
            throw ValidationError("sample count must be at least 1");
        }
        if (!(config.lo_photons > 0)) {
            throw ValidationError("local oscillator photon number must be positive");
        }
        if (!(model.photons > 0)) {
            throw ValidationError("photon number must be positive");
        }
        if (cov.modes() != detection.v1.dim()) {
            throw ValidationError("covariance and detection basis dimensions differ");
        }
        if (config.lo_mode.dim() != 0) {
            if (!config.lo_mode.is_normalized(1e-10)) {
                throw ValidationError("local oscillator mode is not normalized");
            }
            if (std::abs(inner_product(detection.v1, config.lo_mode) -
                         std::complex<double>(1, 0)) > 1e-8) {
                throw ValidationError(
                    "local oscillator mode must match the detection mode");
            }
        }

        ModeBasis full = detection_mode_basis(detection);
        Eigen::MatrixXd s = quadrature_transform(basis_change_unitary(full));
        noise = GaussianState::centered(
            CovarianceMatrix(s * cov.matrix() * s.transpose()));

        sqrt_n0 = std::sqrt(config.lo_photons);
        cos_theta = std::cos(config.relative_phase);
        sin_theta = std::sin(config.relative_phase);
        double amp = 2.0 * std::sqrt(model.photons);
        offset = sqrt_n0 * (cos_theta * amp * p_true / detection.p_c +
                            sin_theta * amp * detection.c11);
    }

    std::vector<double> reduce(const Eigen::MatrixXd& draws) const {
        int m = noise.modes();
        std::vector<double> out(static_cast<std::size_t>(draws.rows()));
        for (long k = 0; k < draws.rows(); ++k) {
            double fluct = cos_theta * draws(k, 0) + sin_theta * draws(k, m);
            out[static_cast<std::size_t>(k)] = offset + sqrt_n0 * fluct;
        }
        return out;
    }
};

}  // namespace

std::vector<double> intensity_difference_samples(const ParameterizedModel& model,
                                                 const DetectionBasis& detection,
                                                 const CovarianceMatrix& cov,
                                                 const HomodyneConfig& config,
                                                 double p_true, int threads) {
    HomodyneSetup setup(model, detection, cov, config, p_true);
    return setup.reduce(sample(setup.noise, config.n_samples, config.seed, threads));
}

std::vector<double> intensity_difference_samples_serial(const ParameterizedModel& model,
                                                        const DetectionBasis& detection,
                                                        const CovarianceMatrix& cov,
                                                        const HomodyneConfig& config,
                                                        double p_true) {
    HomodyneSetup setup(model, detection, cov, config, p_true);
    return setup.reduce(sample_serial(setup.noise, config.n_samples, config.seed));
}

EstimationReport unbiased_estimator(const std::vector<double>& samples, double photons,
                                    double lo_photons, double p_c, double p_true,
                                    double crb) {
    if (!(photons > 0) || !(lo_photons > 0)) {
        throw ValidationError("photon numbers must be positive");
    }
    if (!(p_c > 0)) {
        throw ValidationError("p_c must be positive");
    }
    if (!(crb > 0)) {
        throw ValidationError("reference bound must be positive");
    }
    if (samples.size() < 2) {
        throw ValidationError("estimator variance needs at least two samples");
    }

    double scale = p_c / (2.0 * std::sqrt(photons * lo_photons));
    double mean = 0.0;
    for (double s : samples) {
        mean += scale * s;
    }
    mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples) {
        double d = scale * s - mean;
        ss += d * d;
    }

    EstimationReport report;
    report.p_true = p_true;
    report.estimator_mean = mean;
    report.estimator_variance = ss / static_cast<double>(samples.size() - 1);
    report.crb = crb;
    report.variance_over_crb_sq = report.estimator_variance / (crb * crb);
    report.n_samples = static_cast<std::int64_t>(samples.size());
    return report;
}

double p_sql(double sigma_y1, double photons, double du_norm) {
    if (!(sigma_y1 > 0) || !(photons > 0) || !(du_norm > 0)) {
        throw ValidationError("p_sql inputs must be positive");
    }
    return sigma_y1 / (2.0 * std::sqrt(photons) * du_norm);
}

}  // namespace gaussmet
