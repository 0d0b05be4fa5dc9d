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

#include "gaussmet/model.hpp"

#include <cmath>
#include <complex>

#include "gaussmet/errors.hpp"

namespace gaussmet {

namespace {

// Index of the grid cell containing p (clamped to the table range).
std::size_t grid_cell(const std::vector<double>& grid, double p) {
    if (p <= grid.front()) return 0;
    if (p >= grid.back()) return grid.size() - 2;
    std::size_t lo = 0, hi = grid.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (grid[mid] <= p ? lo : hi) = mid;
    }
    return lo;
}

void check_grid(const std::vector<double>& grid, std::size_t nodes) {
    if (grid.size() < 2) throw ValidationError("table needs at least two grid points");
    if (grid.size() != nodes) throw ValidationError("table grid and node counts differ");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw ValidationError("table grid must be strictly increasing");
}

}  // namespace

ModeVector ParameterizedModel::mode_at(double p) const {
    ModeVector u = mode(p);
    if (!u.is_normalized(1e-10))
        throw NumericalError("mean-field mode is not normalized at p = " + std::to_string(p));
    return u;
}

CovarianceMatrix ParameterizedModel::covariance_at(double p) const {
    return CovarianceMatrix(covariance(p));
}

Eigen::VectorXd ParameterizedModel::mean_quadratures(double p) const {
    if (!(photons > 0.0)) throw ValidationError("model photon number must be positive");
    return quadrature_mean(mode_at(p), std::sqrt(photons));
}

GaussianState ParameterizedModel::state_at(double p) const {
    return GaussianState(mean_quadratures(p), covariance_at(p));
}

ParameterizedModel rotation_model(int dim, int from, int to, double rate, double photons) {
    if (from == to || from < 0 || to < 0 || from >= dim || to >= dim)
        throw ValidationError("rotation model needs two distinct mode indices within dim");
    ParameterizedModel m;
    m.dim = dim;
    m.photons = photons;
    m.mode = [dim, from, to, rate](double p) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
        c(from) = std::cos(rate * p);
        c(to) = std::sin(rate * p);
        return ModeVector(std::move(c));
    };
    m.mode_derivative = [dim, from, to, rate](double p) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
        c(from) = -rate * std::sin(rate * p);
        c(to) = rate * std::cos(rate * p);
        return ModeVector(std::move(c));
    };
    m.covariance = constant_covariance(Eigen::MatrixXd::Identity(2 * dim, 2 * dim));
    return m;
}

ParameterizedModel phase_model(int dim, int index, double rate, double photons) {
    if (index < 0 || index >= dim) throw ValidationError("phase model mode index out of range");
    ParameterizedModel m;
    m.dim = dim;
    m.photons = photons;
    m.mode = [dim, index, rate](double p) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
        c(index) = std::exp(std::complex<double>(0.0, rate * p));
        return ModeVector(std::move(c));
    };
    m.mode_derivative = [dim, index, rate](double p) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
        c(index) = std::complex<double>(0.0, rate) * std::exp(std::complex<double>(0.0, rate * p));
        return ModeVector(std::move(c));
    };
    m.covariance = constant_covariance(Eigen::MatrixXd::Identity(2 * dim, 2 * dim));
    return m;
}

ParameterizedModel table_model(std::vector<double> grid, std::vector<ModeVector> nodes,
                               double photons) {
    check_grid(grid, nodes.size());
    const int dim = nodes.front().dim();
    for (const ModeVector& u : nodes) {
        if (u.dim() != dim) throw ValidationError("table modes differ in dimension");
        if (!u.is_normalized(1e-10))
            throw ValidationError("table mode nodes must be normalized");
    }
    ParameterizedModel m;
    m.dim = dim;
    m.photons = photons;
    m.mode = [grid = std::move(grid), nodes = std::move(nodes)](double p) {
        const std::size_t i = grid_cell(grid, p);
        const double t = (p - grid[i]) / (grid[i + 1] - grid[i]);
        Eigen::VectorXcd c =
            (1.0 - t) * nodes[i].coeffs() + t * nodes[i + 1].coeffs();
        return ModeVector(std::move(c)).normalized();
    };
    m.covariance = constant_covariance(Eigen::MatrixXd::Identity(2 * dim, 2 * dim));
    return m;
}

std::function<Eigen::MatrixXd(double)> constant_covariance(Eigen::MatrixXd sigma) {
    return [sigma = std::move(sigma)](double) { return sigma; };
}

std::function<Eigen::MatrixXd(double)> rotating_squeezed_covariance(int modes, int which,
                                                                    double sigma, double rate) {
    if (which < 0 || which >= modes)
        throw ValidationError("rotating-squeezed mode index out of range");
    if (!(sigma > 0.0)) throw ValidationError("squeezing sigma must be positive");
    return [modes, which, sigma, rate](double p) {
        const double c = std::cos(rate * p), s = std::sin(rate * p);
        const double a = sigma * sigma, b = 1.0 / (sigma * sigma);
        Eigen::MatrixXd out = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
        // R(theta) diag(a, b) R(theta)^T restricted to (Y+_which, Y-_which)
        out(which, which) = a * c * c + b * s * s;
        out(modes + which, modes + which) = a * s * s + b * c * c;
        out(which, modes + which) = (a - b) * c * s;
        out(modes + which, which) = out(which, modes + which);
        return out;
    };
}

std::function<Eigen::MatrixXd(double)> table_covariance(std::vector<double> grid,
                                                        std::vector<Eigen::MatrixXd> nodes) {
    check_grid(grid, nodes.size());
    return [grid = std::move(grid), nodes = std::move(nodes)](double p) {
        const std::size_t i = grid_cell(grid, p);
        const double t = (p - grid[i]) / (grid[i + 1] - grid[i]);
        return Eigen::MatrixXd((1.0 - t) * nodes[i] + t * nodes[i + 1]);
    };
}

}  // namespace gaussmet
