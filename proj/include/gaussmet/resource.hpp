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

#ifndef GAUSSMET_RESOURCE_HPP
#define GAUSSMET_RESOURCE_HPP

#include <Eigen/Core>
#include <random>
#include <string>
#include <vector>

#include "gaussmet/covariance.hpp"
#include "gaussmet/model.hpp"
#include "gaussmet/modes.hpp"

namespace gaussmet {

/// A fixed set of squeezed vacuum resources, sigma_i being the r.m.s. value
/// of the squeezed quadrature. Entries above 1 describe the same resource
/// with quadratures swapped, so the effective squeezing is min(sigma, 1/sigma);
/// sigma_min is the smallest effective value (ties: lowest index).
class SqueezingBudget {
  public:
    explicit SqueezingBudget(std::vector<double> sigmas);

    int size() const { return static_cast<int>(sigmas_.size()); }
    const std::vector<double>& sigmas() const { return sigmas_; }
    double sigma(int i) const { return sigmas_[i]; }
    double effective_sigma(int i) const;
    double sigma_min() const { return effective_sigma(min_index_); }
    int min_index() const { return min_index_; }

  private:
    std::vector<double> sigmas_;
    int min_index_ = 0;
};

/// CRB-minimizing covariance in the detection basis: the most squeezed
/// quadrature sigma_min^2 goes on Y+ of mode 1 (the signal quadrature),
/// remaining resources fill modes 2..s in budget order, vacuum elsewhere.
/// The result is diagonal, so (Sigma^-1)_11 = 1/sigma_min^2.
CovarianceMatrix optimal_covariance(const SqueezingBudget& budget, int modes);

/// Optimized bound p_c sigma_min / (2 sqrt(N)).
double optimal_crb(const SqueezingBudget& budget, double photons, double p_c);

struct SpectralBoundReport {
    double value = 0.0;  // (Sigma^-1)_11
    double bound = 0.0;  // 1/sigma_min^2
    bool attained = false;
};

/// Checks (Sigma^-1)_11 against its spectral-radius bound 1/sigma_min^2,
/// valid for any covariance reachable from the budget by passive transforms.
/// Throws NumericalError when the bound is exceeded beyond 1e-9 relative.
SpectralBoundReport spectral_bound_report(const CovarianceMatrix& cov,
                                          const SqueezingBudget& budget);

struct SweepRow {
    std::string placement;     // candidate mode(s) carrying the resource
    std::string entanglement;  // "none" or "balanced" (50:50 coupler)
    double crb = 0.0;
    double ratio_to_optimal = 0.0;
};

/// CRB table over resource placements: sigma_min alone on each candidate
/// mode, plus (for multi-resource budgets) the two most squeezed resources
/// entangled across each candidate pair by a balanced coupler, the second
/// resource squeezed along Y-. Candidates must be orthonormal; pass the
/// detection mode first so ratio_to_optimal reaches 1 there. The minimum of
/// the table is the direct detection-mode placement.
std::vector<SweepRow> allocation_sweep(const SqueezingBudget& budget,
                                       const ParameterizedModel& model,
                                       const std::vector<ModeVector>& candidates);

/// Haar-uniform unitary: QR of a complex Ginibre matrix with the phase fix
/// that makes R's diagonal real positive. Deterministic given the engine.
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);

}  // namespace gaussmet

#endif  // GAUSSMET_RESOURCE_HPP
