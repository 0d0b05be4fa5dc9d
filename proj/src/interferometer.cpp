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

#include "gaussmet/interferometer.hpp"

#include <cmath>
#include <complex>

#include "gaussmet/errors.hpp"
#include "gaussmet/estimation.hpp"

namespace gaussmet {

double ResponseProfile::derivative(double x) const {
    if (!f) {
        throw ValidationError("response profile has no function");
    }
    if (fprime) {
        return fprime(x);
    }
    const double h = 1e-6;
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

ResponseProfile linear_profile() {
    ResponseProfile p;
    p.f = [](double x) { return x; };
    p.fprime = [](double) { return 1.0; };
    return p;
}

ResponseProfile scaled_profile(double gain) {
    if (!std::isfinite(gain) || gain == 0.0) {
        throw ValidationError("profile gain must be finite and nonzero");
    }
    ResponseProfile p;
    p.f = [gain](double x) { return gain * x; };
    p.fprime = [gain](double) { return gain; };
    return p;
}

ResponseProfile response_profile_from_string(const std::string& text) {
    if (text == "linear") {
        return linear_profile();
    }
    const std::string prefix = "scaled:";
    if (text.rfind(prefix, 0) == 0) {
        double gain = 0.0;
        try {
            std::size_t used = 0;
            gain = std::stod(text.substr(prefix.size()), &used);
            if (used != text.size() - prefix.size()) {
                throw ValidationError("trailing characters in profile gain");
            }
        } catch (const ValidationError&) {
            throw;
        } catch (...) {
            throw ValidationError("cannot parse profile gain in '" + text + "'");
        }
        return scaled_profile(gain);
    }
    throw ValidationError("unknown response profile '" + text +
                          "' (expected 'linear' or 'scaled:<gain>')");
}

InterferometerSpec::InterferometerSpec(ResponseProfile profile_in, double phi0_in,
                                       double photons_in, GaussianState input_in)
    : profile(std::move(profile_in)),
      phi0(phi0_in),
      photons(photons_in),
      input(std::move(input_in)) {
    if (!profile.f) {
        throw ValidationError("response profile has no function");
    }
    if (input.modes() != 2) {
        throw ValidationError("interferometer input must be a two-mode state");
    }
    if (!(photons > 0)) {
        throw ValidationError("photon number must be positive");
    }
}

namespace {

ModeVector rotated_mode(double angle, bool companion) {
    Eigen::VectorXcd c(2);
    if (companion) {
        c << -std::sin(angle), std::cos(angle);
    } else {
        c << std::cos(angle), std::sin(angle);
    }
    return ModeVector(c);
}

Eigen::MatrixXcd port_to_output_unitary(double angle) {
    // b_v1 = cos(F) b_w1 - sin(F) b_w2, b_v2 = sin(F) b_w1 + cos(F) b_w2:
    // the port operators are carried onto u1, u2.
    Eigen::MatrixXcd u(2, 2);
    u << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return u;
}

}  // namespace

ModeVector mean_output_mode(const InterferometerSpec& spec, double phi) {
    return rotated_mode(spec.profile.f(phi / 2.0), false);
}

ModeVector companion_output_mode(const InterferometerSpec& spec, double phi) {
    return rotated_mode(spec.profile.f(phi / 2.0), true);
}

GaussianState propagate(const InterferometerSpec& spec, double phi) {
    return apply_passive_transform(spec.input,
                                   port_to_output_unitary(spec.profile.f(phi / 2.0)));
}

double phase_crb(const InterferometerSpec& spec,
                 const CovarianceMatrix& cov_in_detection_basis) {
    if (cov_in_detection_basis.modes() != 2) {
        throw ValidationError("detection-basis covariance must be two-mode");
    }
    double fp = spec.profile.derivative(spec.phi0 / 2.0);
    if (!std::isfinite(fp) || fp == 0.0) {
        throw NumericalError("response derivative vanishes: no phase sensitivity");
    }
    double inv11 = cov_in_detection_basis.inverse()(0, 0);
    return 1.0 / (std::abs(fp) * std::sqrt(spec.photons * inv11));
}

GaussianState caves_input_state(double photons, double sigma) {
    if (!(photons > 0)) {
        throw ValidationError("photon number must be positive");
    }
    if (!(sigma > 0) || sigma > 1.0) {
        throw ValidationError("squeezing must satisfy 0 < sigma <= 1");
    }
    Eigen::VectorXd mean = quadrature_mean(ModeVector::unit(2, 0), std::sqrt(photons));
    Eigen::VectorXd d(4);
    d << 1.0, sigma * sigma, 1.0, 1.0 / (sigma * sigma);
    return GaussianState(mean, CovarianceMatrix(d.asDiagonal()));
}

GaussianState caves_scheme(double photons, double sigma, const ResponseProfile& profile,
                           double phi0) {
    InterferometerSpec spec(profile, phi0, photons, caves_input_state(photons, sigma));
    return propagate(spec, phi0);
}

ParameterizedModel interferometer_mode_family(const ResponseProfile& profile,
                                              double photons, double phi0) {
    if (!profile.f) {
        throw ValidationError("response profile has no function");
    }
    if (!(photons > 0)) {
        throw ValidationError("photon number must be positive");
    }
    ParameterizedModel model;
    model.dim = 2;
    model.photons = photons;
    model.p0 = phi0;
    model.mode = [profile](double phi) { return rotated_mode(profile.f(phi / 2.0), false); };
    model.mode_derivative = [profile](double phi) {
        double scale = profile.derivative(phi / 2.0) / 2.0;
        return rotated_mode(profile.f(phi / 2.0), true) * scale;
    };
    return model;
}

ParameterizedModel interferometer_model(const InterferometerSpec& spec) {
    ParameterizedModel model =
        interferometer_mode_family(spec.profile, spec.photons, spec.phi0);
    ResponseProfile profile = spec.profile;
    Eigen::MatrixXd sigma_in = spec.input.cov.matrix();
    model.covariance = [profile, sigma_in](double phi) {
        Eigen::MatrixXd s = quadrature_transform(port_to_output_unitary(profile.f(phi / 2.0)));
        return Eigen::MatrixXd(s * sigma_in * s.transpose());
    };
    return model;
}

std::vector<CavesSweepRow> caves_input_sweep(double photons, double sigma,
                                             const ResponseProfile& profile,
                                             double phi0) {
    if (!(sigma > 0) || sigma > 1.0) {
        throw ValidationError("squeezing must satisfy 0 < sigma <= 1");
    }
    Eigen::VectorXd mean = quadrature_mean(ModeVector::unit(2, 0), std::sqrt(photons));
    double s2 = sigma * sigma;

    auto arrangement_cov = [&](const std::string& name) {
        Eigen::VectorXd d(4);
        if (name == "caves") {
            d << 1.0, s2, 1.0, 1.0 / s2;
        } else if (name == "port1") {
            d << s2, 1.0, 1.0 / s2, 1.0;
        } else if (name == "port2-rotated") {
            d << 1.0, 1.0 / s2, 1.0, s2;
        } else {
            d << 1.0, s2, 1.0, 1.0 / s2;
        }
        Eigen::MatrixXd sigma_m = d.asDiagonal();
        if (name == "balanced-split") {
            Eigen::MatrixXcd coupler(2, 2);
            double r = 1.0 / std::sqrt(2.0);
            coupler << r, r, -r, r;
            Eigen::MatrixXd sc = quadrature_transform(coupler);
            sigma_m = sc * sigma_m * sc.transpose();
        }
        return sigma_m;
    };

    std::vector<CavesSweepRow> table;
    double caves_crb = 0.0;
    for (const std::string& name : {"caves", "port1", "port2-rotated", "balanced-split"}) {
        InterferometerSpec spec(
            profile, phi0, photons,
            GaussianState(mean, CovarianceMatrix(arrangement_cov(name))));
        GaussianState out = propagate(spec, phi0);
        std::vector<ModeVector> det{companion_output_mode(spec, phi0),
                                    mean_output_mode(spec, phi0)};
        GaussianState in_det = express_in_basis(out, ModeBasis(det));
        CavesSweepRow row;
        row.arrangement = name;
        row.delta_phi = phase_crb(spec, in_det.cov);
        if (name == "caves") {
            caves_crb = row.delta_phi;
        }
        row.ratio_to_caves = row.delta_phi / caves_crb;
        table.push_back(row);
    }
    return table;
}

}  // namespace gaussmet
