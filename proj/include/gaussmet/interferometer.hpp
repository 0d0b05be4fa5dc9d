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

#ifndef GAUSSMET_INTERFEROMETER_HPP
#define GAUSSMET_INTERFEROMETER_HPP

#include <functional>
#include <string>
#include <vector>

#include "gaussmet/covariance.hpp"
#include "gaussmet/model.hpp"
#include "gaussmet/modes.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

/// Phase response F of the instrument as a function of the half phase
/// x = phi/2. A plain Michelson has F(x) = x; cavity-enhanced designs have
/// steeper profiles.
struct ResponseProfile {
    std::function<double(double)> f;
    std::function<double(double)> fprime;  // empty: central difference, step 1e-6

    double derivative(double x) const;
};

/// F(x) = x.
ResponseProfile linear_profile();

/// F(x) = gain * x.
ResponseProfile scaled_profile(double gain);

/// Parses "linear" or "scaled:<gain>".
ResponseProfile response_profile_from_string(const std::string& text);

/// Two-port interferometer. The input state lives in the port basis
/// (port 1 carries the mean field); propagation at phase phi rotates the
/// ports into the output frame by F(phi/2), so the total mean output mode is
/// u1(phi) = v1 cos F(phi/2) + v2 sin F(phi/2).
struct InterferometerSpec {
    ResponseProfile profile;
    double phi0 = 0.0;     // bias phase, the operating point
    double photons = 0.0;  // N carried by the mean field
    GaussianState input;   // two-mode state at the ports

    InterferometerSpec(ResponseProfile profile_in, double phi0_in, double photons_in,
                       GaussianState input_in);
};

/// u1(phi) = (cos F(phi/2), sin F(phi/2)) in the output frame.
ModeVector mean_output_mode(const InterferometerSpec& spec, double phi);

/// u2(phi) = (-sin F(phi/2), cos F(phi/2)); always orthogonal to u1(phi).
ModeVector companion_output_mode(const InterferometerSpec& spec, double phi);

/// Output state in the output frame: the port operators are carried onto
/// (u1(phi), u2(phi)).
GaussianState propagate(const InterferometerSpec& spec, double phi);

/// Phase sensitivity Delta phi = 1 / (|F'(phi0/2)| sqrt(N (Sigma^-1)_11))
/// for an output covariance expressed with the detection mode u2(phi0)
/// first. Equivalent to the generic pipeline with p_c = 2/|F'|.
double phase_crb(const InterferometerSpec& spec,
                 const CovarianceMatrix& cov_in_detection_basis);

/// Coherent state of N photons in port 1, squeezed vacuum sigma in port 2
/// (squeezed along the quadrature that feeds the phase signal).
GaussianState caves_input_state(double photons, double sigma);

/// Output state of the Caves arrangement at bias phi0: detection mode
/// u2(phi0) squeezed at sigma and uncorrelated from u1(phi0).
GaussianState caves_scheme(double photons, double sigma,
                           const ResponseProfile& profile = linear_profile(),
                           double phi0 = 0.0);

/// Mode family of the instrument alone: u1(phi) with its analytic
/// derivative, no covariance attached. Building block for models assembled
/// from files.
ParameterizedModel interferometer_mode_family(const ResponseProfile& profile,
                                              double photons, double phi0);

/// The interferometer as a generic parameterized model (parameter = phi,
/// expansion point phi0): analytic mode family u1(phi) and the exactly
/// rotating output covariance family.
ParameterizedModel interferometer_model(const InterferometerSpec& spec);

struct CavesSweepRow {
    std::string arrangement;
    double delta_phi = 0.0;
    double ratio_to_caves = 0.0;
};

/// Brute-force comparison of Gaussian input arrangements at the same
/// resource budget (one sigma squeezer + the coherent field): Caves (squeezer
/// in port 2), squeezer in port 1, squeezer in port 2 rotated to the wrong
/// quadrature, and the squeezer split over both ports by a balanced coupler.
/// The Caves row attains the minimum.
std::vector<CavesSweepRow> caves_input_sweep(double photons, double sigma,
                                             const ResponseProfile& profile,
                                             double phi0);

}  // namespace gaussmet

#endif  // GAUSSMET_INTERFEROMETER_HPP
