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

#ifndef GAUSSMET_MODES_HPP
#define GAUSSMET_MODES_HPP

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace gaussmet {

/// One optical mode: a complex coefficient vector in a fixed orthonormal
/// reference basis. Modes are abstract here; spatial or temporal mode shapes
/// enter only through these coefficients, so mode overlaps reduce to complex
/// dot products.
class ModeVector {
  public:
    ModeVector() = default;
    explicit ModeVector(Eigen::VectorXcd coeffs);

    /// k-th reference basis vector in dimension D.
    static ModeVector unit(int dim, int k);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    double norm() const { return coeffs_.norm(); }
    bool is_normalized(double tol = 1e-12) const;
    ModeVector normalized() const;

    const Eigen::VectorXcd& coeffs() const { return coeffs_; }
    std::complex<double> operator[](int k) const { return coeffs_(k); }

    ModeVector operator*(std::complex<double> a) const { return ModeVector(a * coeffs_); }
    ModeVector operator+(const ModeVector& o) const;
    ModeVector operator-(const ModeVector& o) const;

  private:
    Eigen::VectorXcd coeffs_;
};

/// Overlap sum conj(u_k) v_k; conjugate-linear in the first argument.
std::complex<double> inner_product(const ModeVector& u, const ModeVector& v);

/// Ordered list of M pairwise orthonormal modes, M <= D. Orthonormality is
/// checked to 1e-10 on construction.
class ModeBasis {
  public:
    ModeBasis() = default;
    explicit ModeBasis(std::vector<ModeVector> modes);

    /// The reference basis e_1..e_M of dimension D = M.
    static ModeBasis reference(int dim);

    int size() const { return static_cast<int>(modes_.size()); }
    int dim() const { return modes_.empty() ? 0 : modes_[0].dim(); }
    const ModeVector& mode(int i) const { return modes_[i]; }
    const std::vector<ModeVector>& modes() const { return modes_; }

    /// True when M = D (the basis spans the whole reference space).
    bool is_complete() const { return size() == dim(); }

  private:
    std::vector<ModeVector> modes_;
};

/// Extends `seed` modes (assumed orthonormal) to a complete orthonormal basis
/// of dimension D by Gram-Schmidt against the reference vectors. Deterministic.
ModeBasis complete_basis(std::vector<ModeVector> seed, int dim);

/// Unitary U with U_ik = conj(v_i[k]) for a complete basis {v_i}: the matrix
/// mapping reference-mode annihilation operators to the basis modes,
/// b'_i = sum_k conj(v_i[k]) b_k. Feeding it to apply_passive_transform
/// re-expresses a state in the basis {v_i}.
Eigen::MatrixXcd basis_change_unitary(const ModeBasis& basis);

}  // namespace gaussmet

#endif  // GAUSSMET_MODES_HPP
