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

#include "gaussmet/modes.hpp"

#include <complex>

#include "doctest.h"
#include "gaussmet/errors.hpp"

using namespace gaussmet;
using std::complex;

namespace {
const complex<double> kI{0.0, 1.0};
}  // namespace

TEST_CASE("modes.unit_vectors") {
    ModeVector e0 = ModeVector::unit(3, 0);
    ModeVector e2 = ModeVector::unit(3, 2);
    CHECK(e0.dim() == 3);
    CHECK(e0[0] == complex<double>(1.0, 0.0));
    CHECK(e0[1] == complex<double>(0.0, 0.0));
    CHECK(e2[2] == complex<double>(1.0, 0.0));
    CHECK(e0.is_normalized());
    CHECK(e0.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("modes.inner_product_examples") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);

    CHECK(inner_product(e1, e1) == complex<double>(1.0, 0.0));
    CHECK(inner_product(e1, e2) == complex<double>(0.0, 0.0));

    // Conjugate-linear in the first argument: <i e1, e1> = -i.
    ModeVector ie1 = e1 * kI;
    CHECK(inner_product(ie1, e1).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(inner_product(ie1, e1).imag() == doctest::Approx(-1.0).epsilon(1e-15));
    // Linear in the second argument: <e1, i e1> = i.
    CHECK(inner_product(e1, ie1).imag() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("modes.inner_product_dimension_mismatch") {
    ModeVector a = ModeVector::unit(2, 0);
    ModeVector b = ModeVector::unit(3, 0);
    CHECK_THROWS_AS(inner_product(a, b), ValidationError);
}

TEST_CASE("modes.normalized") {
    Eigen::VectorXcd c(2);
    c << complex<double>(3.0, 0.0), complex<double>(0.0, 4.0);
    ModeVector v{c};
    CHECK(v.norm() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(!v.is_normalized());

    ModeVector u = v.normalized();
    CHECK(u.is_normalized());
    CHECK(u[0].real() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(u[1].imag() == doctest::Approx(0.8).epsilon(1e-15));

    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(2);
    CHECK_THROWS_AS(ModeVector{z}.normalized(), NumericalError);
}

TEST_CASE("modes.arithmetic") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);
    ModeVector s = e1 + e2 * complex<double>(2.0, 0.0);
    CHECK(s[0] == complex<double>(1.0, 0.0));
    CHECK(s[1] == complex<double>(2.0, 0.0));
    ModeVector d = s - e1;
    CHECK(d[0] == complex<double>(0.0, 0.0));
    CHECK(d[1] == complex<double>(2.0, 0.0));
}

TEST_CASE("modes.basis_orthonormality_enforced") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);

    CHECK_NOTHROW(ModeBasis({e1, e2}));
    // Repeated mode: not orthogonal.
    CHECK_THROWS_AS(ModeBasis({e1, e1}), ValidationError);
    // Unnormalized mode.
    CHECK_THROWS_AS(ModeBasis({e1 * complex<double>(2.0, 0.0)}), ValidationError);
    // More modes than dimensions cannot be orthonormal.
    ModeVector p = (e1 + e2) * complex<double>(1.0 / std::sqrt(2.0), 0.0);
    CHECK_THROWS_AS(ModeBasis({e1, e2, p}), ValidationError);
}

TEST_CASE("modes.reference_basis") {
    ModeBasis ref = ModeBasis::reference(3);
    CHECK(ref.size() == 3);
    CHECK(ref.dim() == 3);
    CHECK(ref.is_complete());
    for (int i = 0; i < 3; ++i) {
        CHECK(ref.mode(i)[i] == complex<double>(1.0, 0.0));
    }
}

TEST_CASE("modes.complete_basis_extends_seed") {
    ModeVector e1 = ModeVector::unit(3, 0);
    ModeVector e2 = ModeVector::unit(3, 1);
    ModeVector v1 = (e1 + e2 * kI) * complex<double>(1.0 / std::sqrt(2.0), 0.0);

    ModeBasis full = complete_basis({v1}, 3);
    CHECK(full.size() == 3);
    CHECK(full.is_complete());

    // Seed mode is kept verbatim as the first element.
    CHECK((full.mode(0).coeffs() - v1.coeffs()).norm() == doctest::Approx(0.0).epsilon(1e-15));

    // Result is orthonormal.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            complex<double> ov = inner_product(full.mode(i), full.mode(j));
            CHECK(std::abs(ov - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    }

    // Deterministic: same seed gives the same completion.
    ModeBasis again = complete_basis({v1}, 3);
    for (int i = 0; i < 3; ++i) {
        CHECK((full.mode(i).coeffs() - again.mode(i).coeffs()).norm() == 0.0);
    }
}

TEST_CASE("modes.complete_basis_rejects_dependent_seed") {
    ModeVector e1 = ModeVector::unit(2, 0);
    CHECK_THROWS_AS(complete_basis({e1, e1}, 2), ValidationError);
}

TEST_CASE("modes.basis_change_unitary_maps_basis_to_reference") {
    ModeVector e1 = ModeVector::unit(2, 0);
    ModeVector e2 = ModeVector::unit(2, 1);
    complex<double> r{1.0 / std::sqrt(2.0), 0.0};
    ModeVector v1 = (e1 + e2 * kI) * r;
    ModeVector v2 = (e1 - e2 * kI) * r;
    ModeBasis basis({v1, v2});

    Eigen::MatrixXcd u = basis_change_unitary(basis);

    // U v_i = e_i for each basis mode.
    for (int i = 0; i < 2; ++i) {
        Eigen::VectorXcd image = u * basis.mode(i).coeffs();
        Eigen::VectorXcd target = Eigen::VectorXcd::Zero(2);
        target(i) = 1.0;
        CHECK((image - target).norm() < 1e-12);
    }

    // U is unitary.
    Eigen::MatrixXcd gram = u * u.adjoint();
    CHECK((gram - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);

    // Incomplete bases have no square change-of-basis matrix.
    ModeBasis partial({ModeVector::unit(3, 0)});
    CHECK_THROWS_AS(basis_change_unitary(partial), ValidationError);
}
