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

#include <cmath>

#include "gaussmet/errors.hpp"

namespace gaussmet {

ModeVector::ModeVector(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw ValidationError("ModeVector needs dimension >= 1");
}

ModeVector ModeVector::unit(int dim, int k) {
    if (k < 0 || k >= dim) throw ValidationError("unit mode index out of range");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
    c(k) = 1.0;
    return ModeVector(std::move(c));
}

bool ModeVector::is_normalized(double tol) const {
    return std::abs(coeffs_.squaredNorm() - 1.0) <= tol;
}

ModeVector ModeVector::normalized() const {
    double n = norm();
    if (n <= 0.0) throw NumericalError("cannot normalize a zero mode vector");
    return ModeVector(coeffs_ / n);
}

ModeVector ModeVector::operator+(const ModeVector& o) const {
    if (dim() != o.dim()) throw ValidationError("mode dimension mismatch");
    return ModeVector(coeffs_ + o.coeffs_);
}

ModeVector ModeVector::operator-(const ModeVector& o) const {
    if (dim() != o.dim()) throw ValidationError("mode dimension mismatch");
    return ModeVector(coeffs_ - o.coeffs_);
}

std::complex<double> inner_product(const ModeVector& u, const ModeVector& v) {
    if (u.dim() != v.dim()) throw ValidationError("inner_product: mode dimension mismatch");
    return u.coeffs().dot(v.coeffs());  // Eigen dot conjugates the left factor
}

ModeBasis::ModeBasis(std::vector<ModeVector> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) throw ValidationError("ModeBasis needs at least one mode");
    const int d = modes_[0].dim();
    if (static_cast<int>(modes_.size()) > d)
        throw ValidationError("ModeBasis has more modes than the reference dimension");
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].dim() != d) throw ValidationError("ModeBasis modes differ in dimension");
        for (std::size_t j = 0; j <= i; ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            if (std::abs(inner_product(modes_[i], modes_[j]) - delta) >= 1e-10)
                throw ValidationError("ModeBasis modes are not pairwise orthonormal");
        }
    }
}

ModeBasis ModeBasis::reference(int dim) {
    std::vector<ModeVector> m;
    m.reserve(dim);
    for (int k = 0; k < dim; ++k) m.push_back(ModeVector::unit(dim, k));
    return ModeBasis(std::move(m));
}

ModeBasis complete_basis(std::vector<ModeVector> seed, int dim) {
    if (static_cast<int>(seed.size()) > dim)
        throw ValidationError("complete_basis: more seed modes than dimensions");
    for (int k = 0; k < dim && static_cast<int>(seed.size()) < dim; ++k) {
        Eigen::VectorXcd r = ModeVector::unit(dim, k).coeffs();
        for (const ModeVector& v : seed) r -= v.coeffs().dot(r) * v.coeffs();
        const double n = r.norm();
        if (n > 1e-6) seed.push_back(ModeVector(r / n));
    }
    if (static_cast<int>(seed.size()) != dim)
        throw NumericalError("complete_basis: seed modes do not have full column rank");
    return ModeBasis(std::move(seed));
}

Eigen::MatrixXcd basis_change_unitary(const ModeBasis& basis) {
    if (!basis.is_complete())
        throw ValidationError("basis_change_unitary requires a complete basis (M = D)");
    const int m = basis.size();
    Eigen::MatrixXcd u(m, m);
    for (int i = 0; i < m; ++i) u.row(i) = basis.mode(i).coeffs().conjugate();
    return u;
}

}  // namespace gaussmet
