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

#include "gaussmet/state.hpp"

#include <cmath>
#include <numbers>

#include "gaussmet/errors.hpp"

namespace gaussmet {

GaussianState::GaussianState(Eigen::VectorXd mean_in, CovarianceMatrix cov_in)
    : GaussianState(std::move(mean_in), std::move(cov_in), ModeBasis()) {
    basis = ModeBasis::reference(cov.modes());
}

GaussianState::GaussianState(Eigen::VectorXd mean_in, CovarianceMatrix cov_in, ModeBasis basis_in)
    : mean(std::move(mean_in)), cov(std::move(cov_in)), basis(std::move(basis_in)) {
    if (mean.size() != cov.side())
        throw ValidationError("mean length does not match covariance side");
    if (basis.size() > 0 && 2 * basis.size() != cov.side())
        throw ValidationError("basis mode count does not match covariance side");
}

GaussianState GaussianState::centered(CovarianceMatrix cov_in) {
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(cov_in.side());
    return GaussianState(std::move(zero), std::move(cov_in));
}

GaussianState GaussianState::vacuum(int modes) {
    return centered(CovarianceMatrix::identity(modes));
}

Eigen::VectorXd quadrature_mean(const ModeVector& u, std::complex<double> alpha) {
    const int d = u.dim();
    Eigen::VectorXd y(2 * d);
    y.head(d) = 2.0 * (alpha * u.coeffs().array()).real();
    y.tail(d) = 2.0 * (alpha * u.coeffs().array()).imag();
    return y;
}

Eigen::VectorXd quadrature_embedding(const ModeVector& u) {
    const int d = u.dim();
    Eigen::VectorXd q(2 * d);
    q.head(d) = u.coeffs().real();
    q.tail(d) = u.coeffs().imag();
    return q;
}

double photon_number(const GaussianState& state) {
    const double from_mean = state.mean.squaredNorm() / 4.0;
    const double from_noise = (state.cov.matrix().trace() - state.cov.side()) / 4.0;
    return from_mean + from_noise;
}

GaussianState squeezed_vacuum_state(const std::vector<double>& sigmas, int modes) {
    const int s = static_cast<int>(sigmas.size());
    if (s > modes) throw ValidationError("more squeezed resources than modes");
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(2 * modes);
    for (int i = 0; i < s; ++i) {
        if (!(sigmas[i] > 0.0)) throw ValidationError("squeezing sigma must be positive");
        diag(i) = sigmas[i] * sigmas[i];
        diag(modes + i) = 1.0 / (sigmas[i] * sigmas[i]);
    }
    return GaussianState::centered(CovarianceMatrix(diag.asDiagonal()));
}

Eigen::MatrixXd quadrature_transform(const Eigen::MatrixXcd& u) {
    const int m = static_cast<int>(u.rows());
    Eigen::MatrixXd s(2 * m, 2 * m);
    s.topLeftCorner(m, m) = u.real();
    s.topRightCorner(m, m) = -u.imag();
    s.bottomLeftCorner(m, m) = u.imag();
    s.bottomRightCorner(m, m) = u.real();
    return s;
}

GaussianState apply_passive_transform(const GaussianState& state, const Eigen::MatrixXcd& u) {
    const int m = state.modes();
    if (u.rows() != m || u.cols() != m)
        throw ValidationError("passive transform has wrong dimensions");
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    if ((gram - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-10)
        throw ValidationError("passive transform is not unitary");

    const Eigen::MatrixXd s = quadrature_transform(u);
    Eigen::MatrixXd new_cov = s * state.cov.matrix() * s.transpose();
    return GaussianState(s * state.mean, CovarianceMatrix(std::move(new_cov)), state.basis);
}

GaussianState express_in_basis(const GaussianState& state, const ModeBasis& target) {
    if (target.dim() != state.modes())
        throw ValidationError("target basis dimension does not match state");
    GaussianState out = apply_passive_transform(state, basis_change_unitary(target));
    out.basis = target;
    return out;
}

WignerEvaluator::WignerEvaluator(const GaussianState& state) : mean_(state.mean) {
    llt_.compute(state.cov.matrix());
    if (llt_.info() != Eigen::Success)
        throw NumericalError("Wigner density needs an invertible covariance");
    double half_logdet = 0.0;
    const Eigen::MatrixXd l = llt_.matrixL();
    for (int i = 0; i < l.rows(); ++i) half_logdet += std::log(l(i, i));
    log_norm_ = -state.modes() * std::log(2.0 * std::numbers::pi) - half_logdet;
}

double WignerEvaluator::operator()(const Eigen::VectorXd& y) const {
    if (y.size() != mean_.size())
        throw ValidationError("Wigner evaluation point has wrong dimension");
    const Eigen::VectorXd d = y - mean_;
    // quadratic form via one triangular solve: |L^-1 d|^2
    const Eigen::VectorXd w = llt_.matrixL().solve(d);
    return log_norm_ - 0.5 * w.squaredNorm();
}

double wigner_log_density(const GaussianState& state, const Eigen::VectorXd& y) {
    return WignerEvaluator(state)(y);
}

}  // namespace gaussmet
