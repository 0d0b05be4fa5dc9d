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
#include <complex>
#include <random>

#include "doctest.h"
#include "gaussmet/errors.hpp"
#include "gaussmet/resource.hpp"
#include "gaussmet/state.hpp"
#include "support/fisher_oracle.hpp"

using namespace gaussmet;
using std::complex;

namespace {

const complex<double> kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Mean field fixed at e1 while the covariance rotates: all information sits
// in the second (curvature) term.
ParameterizedModel static_mean_rotating_model(double sigma, double rate) {
    ParameterizedModel m;
    m.dim = 1;
    m.photons = 1.0;
    m.p0 = 0.0;
    m.mode = [](double) { return ModeVector::unit(1, 0); };
    m.covariance = rotating_squeezed_covariance(1, 0, sigma, rate);
    return m;
}

}  // namespace

TEST_CASE("estimation.mean_field_derivative") {
    // Analytic derivative of the rotation family at p0 = 0 is exactly e2.
    ParameterizedModel rot = rotation_model(2, 0, 1, 1.0, 100.0);
    ModeVector du = mean_field_derivative(rot);
    CHECK(du[0] == complex<double>(0.0, 0.0));
    CHECK(du[1] == complex<double>(1.0, 0.0));

    // Finite-difference fallback agrees with the analytic value.
    ParameterizedModel fd = rot;
    fd.mode_derivative = nullptr;
    CHECK((mean_field_derivative(fd).coeffs() - du.coeffs()).norm() < 1e-9);

    // Phase family: du = i e1 at p0 = 0, both routes.
    ParameterizedModel ph = phase_model(1, 0, 1.0, 100.0);
    ModeVector dphase = mean_field_derivative(ph);
    CHECK(std::abs(dphase[0] - kI) < 1e-14);
    ph.mode_derivative = nullptr;
    CHECK(std::abs(mean_field_derivative(ph)[0] - kI) < 1e-9);

    // A p-independent mean field has no detection mode.
    ParameterizedModel flat = static_mean_rotating_model(0.5, 1.0);
    CHECK_THROWS_AS(mean_field_derivative(flat), NumericalError);
}

TEST_CASE("estimation.detection_mode") {
    ModeVector e2 = ModeVector::unit(2, 1);
    DetectionMode dm = detection_mode(e2 * complex<double>(0.5, 0.0));
    CHECK(dm.p_c == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(dm.v1[1] - 1.0) < 1e-15);
    CHECK(dm.v1.is_normalized());

    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector balanced = (e1 + e2) * complex<double>(kInvSqrt2, 0.0);
    DetectionMode dm2 = detection_mode(balanced);
    CHECK(dm2.p_c == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(2);
    CHECK_THROWS_AS(detection_mode(ModeVector{zero}), NumericalError);
}

TEST_CASE("estimation.detection_basis_orthogonal_case") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);
    DetectionBasis db = detection_basis(e1, e2, 1.0);
    CHECK(!db.degenerate);
    CHECK(db.c11 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(db.c12 - 1.0) < 1e-15);
    CHECK((db.v2.coeffs() - e1.coeffs()).norm() < 1e-15);
}

TEST_CASE("estimation.detection_basis_parallel_case") {
    ModeVector e1 = ModeVector::unit(2, 0);
    DetectionBasis db = detection_basis(e1 * kI, e1, 1.0);
    CHECK(db.degenerate);
    CHECK(db.c11 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(db.c12) == 0.0);
    CHECK(db.v2.is_normalized());
    CHECK(std::abs(inner_product(db.v1, db.v2)) < 1e-12);
}

TEST_CASE("estimation.detection_basis_mixed_case") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);
    ModeVector u1 = (e1 * kI + e2) * complex<double>(kInvSqrt2, 0.0);
    DetectionBasis db = detection_basis(u1, e1, 1.0);
    CHECK(!db.degenerate);
    CHECK(db.c11 == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(std::abs(db.c12 - kInvSqrt2) < 1e-12);

    // Reconstruction u1 = i c11 v1 + c12 v2 and orthonormality.
    Eigen::VectorXcd rebuilt =
        kI * db.c11 * db.v1.coeffs() + db.c12 * db.v2.coeffs();
    CHECK((rebuilt - u1.coeffs()).norm() < 1e-9);
    CHECK(db.v1.is_normalized(1e-10));
    CHECK(db.v2.is_normalized(1e-10));
    CHECK(std::abs(inner_product(db.v1, db.v2)) < 1e-10);
}

TEST_CASE("estimation.detection_basis_validation") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);
    ModeVector big = e1 * complex<double>(2.0, 0.0);

    CHECK_THROWS_AS(detection_basis(big, e2, 1.0), ValidationError);
    CHECK_THROWS_AS(detection_basis(e1, big, 1.0), ValidationError);
    CHECK_THROWS_AS(detection_basis(e1, e2, 0.0), ValidationError);
    // A real overlap <v1, u1> contradicts |u1(p)| = 1 along the path.
    CHECK_THROWS_AS(detection_basis(e1, e1, 1.0), NumericalError);
}

TEST_CASE("estimation.detection_basis_from_phase_model") {
    // Pure phase encoding: u1(0) = e1, v1 = i e1, overlap -i, c11 = -1.
    ParameterizedModel ph = phase_model(2, 0, 1.0, 100.0);
    DetectionBasis db = detection_basis(ph);
    CHECK(db.degenerate);
    CHECK(db.c11 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(db.c12) == 0.0);
    CHECK(std::abs(inner_product(db.v1, db.v2)) < 1e-12);

    // In one dimension there is no room for a companion mode.
    ParameterizedModel tiny = phase_model(1, 0, 1.0, 100.0);
    CHECK_THROWS_AS(detection_basis(tiny), ValidationError);
}

TEST_CASE("estimation.detection_mode_basis_is_complete") {
    ParameterizedModel rot = rotation_model(3, 0, 1, 0.5, 100.0);
    DetectionBasis db = detection_basis(rot);
    ModeBasis full = detection_mode_basis(db);
    CHECK(full.is_complete());
    CHECK((full.mode(0).coeffs() - db.v1.coeffs()).norm() == 0.0);
    CHECK((full.mode(1).coeffs() - db.v2.coeffs()).norm() == 0.0);
}

TEST_CASE("estimation.fisher_vacuum_example") {
    // Constant Sigma = I, N = 100, p_c = 2: mean term 4N/p_c^2 = 100.
    ParameterizedModel m = rotation_model(2, 0, 1, 0.5, 100.0);
    FisherBreakdown f = fisher_information(m);
    CHECK(f.mean_term == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(f.cov_term == 0.0);
    CHECK(f.classical_cov_term == 0.0);
    CHECK(f.total == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(f.p_c == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("estimation.fisher_squeezed_detection_mode") {
    // Detection mode is e2; squeezing its Y+ to sigma^2 = 0.25 quadruples
    // the mean term.
    ParameterizedModel m = rotation_model(2, 0, 1, 0.5, 100.0);
    Eigen::VectorXd d(4);
    d << 1.0, 0.25, 1.0, 4.0;
    m.covariance = constant_covariance(Eigen::MatrixXd(d.asDiagonal()));
    FisherBreakdown f = fisher_information(m);
    CHECK(f.mean_term == doctest::Approx(400.0).epsilon(1e-12));
    CHECK(f.total == doctest::Approx(400.0).epsilon(1e-12));
}

TEST_CASE("estimation.fisher_routes_agree_on_correlated_covariance") {
    // Mix three squeezed modes through a Haar unitary so the working-basis
    // covariance is dense, then compare the two mean-term routes.
    std::mt19937_64 rng(23);
    GaussianState sq = squeezed_vacuum_state({0.5, 0.7}, 3);
    GaussianState mixed = apply_passive_transform(sq, haar_unitary(3, rng));

    ParameterizedModel m = rotation_model(3, 0, 1, 0.7, 50.0);
    m.covariance = constant_covariance(mixed.cov.matrix());

    FisherOptions working;
    FisherOptions detection;
    detection.basis_choice = BasisChoice::detection;
    double a = fisher_information(m, working).mean_term;
    double b = fisher_information(m, detection).mean_term;
    CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
}

TEST_CASE("estimation.fisher_basis_independence") {
    // Transforming mode and covariance by the same unitary leaves the mean
    // term unchanged.
    std::mt19937_64 rng(31);
    Eigen::MatrixXcd u = haar_unitary(2, rng);
    Eigen::MatrixXd s = quadrature_transform(u);

    ParameterizedModel base = rotation_model(2, 0, 1, 0.5, 100.0);
    Eigen::VectorXd d(4);
    d << 0.25, 1.0, 4.0, 1.0;
    base.covariance = constant_covariance(Eigen::MatrixXd(d.asDiagonal()));

    ParameterizedModel rotated = base;
    rotated.mode = [u, &base](double p) {
        return ModeVector(u * base.mode(p).coeffs());
    };
    rotated.mode_derivative = [u, &base](double p) {
        return ModeVector(u * base.mode_derivative(p).coeffs());
    };
    Eigen::MatrixXd cov_rotated = s * Eigen::MatrixXd(d.asDiagonal()) * s.transpose();
    rotated.covariance = constant_covariance(cov_rotated);

    double f0 = fisher_information(base).mean_term;
    double f1 = fisher_information(rotated).mean_term;
    CHECK(std::abs(f1 - f0) < 1e-9 * std::abs(f0));
}

TEST_CASE("estimation.fisher_static_mean") {
    // No mean-field motion: the whole information is the curvature term.
    ParameterizedModel m = static_mean_rotating_model(0.5, 1.0);
    FisherBreakdown f = fisher_information(m);
    CHECK(f.mean_term == 0.0);
    CHECK(f.p_c == 0.0);
    CHECK(f.cov_term > 0.0);
    CHECK(f.total == f.cov_term);
}

TEST_CASE("estimation.curvature_term_equals_classical_form") {
    // det Sigma(p) is constant for the rotating squeezed family, so the
    // quantum curvature term matches the classical Gaussian one. Analytic
    // value at sigma = 0.5, rate 1: (sigma^2 - 1/sigma^2)^2 = 14.0625.
    ParameterizedModel m = static_mean_rotating_model(0.5, 1.0);

    FisherOptions matched;
    matched.cov_step = 2.5e-4;
    FisherBreakdown f = fisher_information(m, matched);
    CHECK(std::abs(f.cov_term - f.classical_cov_term) < 1e-6 * f.classical_cov_term);

    FisherBreakdown coarse = fisher_information(m);
    CHECK(coarse.classical_cov_term == doctest::Approx(14.0625).epsilon(1e-4));
    CHECK(coarse.cov_term == doctest::Approx(14.0625).epsilon(1e-4));
}

TEST_CASE("estimation.fisher_options_validation") {
    ParameterizedModel m = rotation_model(2, 0, 1, 0.5, 100.0);
    FisherOptions bad;
    bad.cov_step = 0.0;
    CHECK_THROWS_AS(fisher_information(m, bad), ValidationError);
}

TEST_CASE("estimation.fisher_simplified_examples") {
    CHECK(fisher_simplified(100.0, 2.0, CovarianceMatrix::identity(1)) ==
          doctest::Approx(100.0).epsilon(1e-15));

    Eigen::VectorXd d(2);
    d << 0.25, 4.0;
    CovarianceMatrix sq{Eigen::MatrixXd(d.asDiagonal())};
    CHECK(fisher_simplified(100.0, 2.0, sq) == doctest::Approx(400.0).epsilon(1e-12));

    CHECK_THROWS_AS(fisher_simplified(0.0, 2.0, CovarianceMatrix::identity(1)),
                    ValidationError);
    CHECK_THROWS_AS(fisher_simplified(100.0, 0.0, CovarianceMatrix::identity(1)),
                    ValidationError);
    CHECK_THROWS_AS(fisher_simplified(100.0, 2.0, CovarianceMatrix::identity(1), 1),
                    ValidationError);
}

TEST_CASE("estimation.mean_term_scaling_in_photons") {
    ParameterizedModel m = rotation_model(2, 0, 1, 0.5, 100.0);
    double f1 = fisher_information(m).mean_term;

    m.photons = 400.0;
    CHECK(fisher_information(m).mean_term == 4.0 * f1);

    m.photons = 300.0;
    CHECK(fisher_information(m).mean_term ==
          doctest::Approx(3.0 * f1).epsilon(1e-12));
}

TEST_CASE("estimation.cramer_rao_bound_examples") {
    CHECK(cramer_rao_bound(100.0) == doctest::Approx(0.1).epsilon(1e-15));

    // Shot noise: N = 1e6, p_c = 2, vacuum.
    double f_vac = fisher_simplified(1e6, 2.0, CovarianceMatrix::identity(1));
    CHECK(cramer_rao_bound(f_vac) == doctest::Approx(1e-3).epsilon(1e-12));

    // Optimally placed sigma_min = 0.1.
    Eigen::VectorXd d(2);
    d << 0.01, 100.0;
    double f_sq = fisher_simplified(1e6, 2.0, CovarianceMatrix{Eigen::MatrixXd(d.asDiagonal())});
    CHECK(cramer_rao_bound(f_sq) == doctest::Approx(1e-4).epsilon(1e-12));

    CHECK_THROWS_AS(cramer_rao_bound(0.0), ValidationError);
    CHECK_THROWS_AS(cramer_rao_bound(-1.0), ValidationError);
}

TEST_CASE("estimation.mode_derivative_overlap_is_imaginary") {
    // |u1(p)| = 1 forces Re<u1, du1/dp> = 0 for every family.
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);
    std::vector<ParameterizedModel> models;
    models.push_back(rotation_model(2, 0, 1, 0.8, 10.0));
    models.push_back(phase_model(2, 0, 2.0, 10.0));
    models.push_back(table_model({0.0, 0.5, 1.0},
                                 {e1, (e1 + e2) * complex<double>(kInvSqrt2, 0.0), e2},
                                 10.0));
    for (ParameterizedModel& m : models) {
        for (double p0 : {0.05, 0.3, 0.6}) {
            m.p0 = p0;
            ModeVector du = mean_field_derivative(m);
            CHECK(std::abs(inner_product(m.mode_at(p0), du).real()) < 1e-8);
        }
    }
}

TEST_CASE("estimation.fisher_matches_monte_carlo_oracle") {
    // Phase model, M = 1: total = 4N.
    ParameterizedModel ph = phase_model(1, 0, 1.0, 100.0);
    FisherBreakdown f1 = fisher_information(ph);
    double oracle1 = testing::fisher_oracle(ph, 200000, 71);
    CHECK(std::abs(oracle1 - f1.total) < 0.02 * f1.total);

    // Rotation model, M = 2, squeezed detection mode.
    ParameterizedModel rot = rotation_model(2, 0, 1, 0.5, 100.0);
    Eigen::VectorXd d(4);
    d << 1.0, 0.25, 1.0, 4.0;
    rot.covariance = constant_covariance(Eigen::MatrixXd(d.asDiagonal()));
    FisherBreakdown f2 = fisher_information(rot);
    double oracle2 = testing::fisher_oracle(rot, 200000, 72);
    CHECK(std::abs(oracle2 - f2.total) < 0.02 * f2.total);
}
