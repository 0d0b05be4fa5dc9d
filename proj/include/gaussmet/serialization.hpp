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

#ifndef GAUSSMET_SERIALIZATION_HPP
#define GAUSSMET_SERIALIZATION_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "gaussmet/homodyne.hpp"
#include "gaussmet/interferometer.hpp"
#include "gaussmet/model.hpp"
#include "gaussmet/modes.hpp"
#include "gaussmet/resource.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

// JSON schemas
//   mode:   {"re": [D floats], "im": [D floats]}
//   state:  {"M": int, "mean": [2M floats], "cov": [[2M x 2M floats]]}
//   model:  {"photons": float, "p0": float, "mode": {...}, "covariance": {...}}
// Mode families: "rotation" {dim, from, to, rate}, "phase" {dim, index, rate},
// "interferometer" {profile}, "custom-table" {grid, nodes: [mode...]}.
// Covariance families: "constant" {matrix}, "rotating-squeezed"
// {modes, which, sigma, rate}, "table" {grid, nodes: [matrix...]}.
// Mode indices are 1-based in files, matching the Y+_1..Y+_M labeling.

nlohmann::json mode_to_json(const ModeVector& mode);
ModeVector mode_from_json(const nlohmann::json& doc);

nlohmann::json state_to_json(const GaussianState& state);
GaussianState state_from_json(const nlohmann::json& doc);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const nlohmann::json& doc);

/// Builds a runnable model from its JSON description.
ParameterizedModel model_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const EstimationReport& report);
EstimationReport report_from_json(const nlohmann::json& doc);

/// Parses a JSON file; parse failures become ValidationError carrying the
/// file name and byte position.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

/// Loads a model file; on request also returns the raw document so callers
/// can rewrite parts of it (e.g. substituting an optimized covariance).
ParameterizedModel load_model(const std::string& path, nlohmann::json* raw = nullptr);

// CSV emission. Floats are printed with 17 significant digits.

void write_samples_csv(const std::string& path, const std::vector<double>& i_minus,
                       const std::vector<double>& p_hat);

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

struct SensitivityRow {
    double phi0 = 0.0;
    double sigma = 0.0;
    double photons = 0.0;
    double fprime = 0.0;
    double delta_phi = 0.0;
};

void write_sensitivity_csv(const std::string& path,
                           const std::vector<SensitivityRow>& rows);

}  // namespace gaussmet

#endif  // GAUSSMET_SERIALIZATION_HPP
