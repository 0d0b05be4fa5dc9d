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

#ifndef GAUSSMET_CLI_HPP
#define GAUSSMET_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaussmet {

/// Parsed command line. One subcommand per run; overrides replace the
/// corresponding model-file values when set.
struct RunConfig {
    std::string subcommand;  // crb | optimize | simulate | interferometer | sweep
    std::string model_path;
    std::string output_path;
    std::uint64_t seed = 0;
    std::int64_t samples = 100000;
    double p_true = 0.0;
    std::vector<double> sigmas;
    double photons = 0.0;     // 0: keep the model's value
    double phi0 = 0.0;
    bool phi0_set = false;
    std::string profile = "linear";
};

/// Executes one parsed command, writing reports to `out`.
/// Throws ValidationError / NumericalError; the wrapper maps them to exit
/// codes 2 and 1.
void run(const RunConfig& config, std::ostream& out);

/// Full front end: parse (args exclude the program name), run, map errors to
/// exit codes (0 success, 2 validation, 1 numerical failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace gaussmet

#endif  // GAUSSMET_CLI_HPP
