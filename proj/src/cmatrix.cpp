// Copyright 2026 The topophase Authors
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

#include "topophase/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "topophase/kernels/kernels.hpp"

namespace topophase {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> values)
    : rows_(rows), cols_(cols), data_(values) {
    data_.resize(rows * cols);
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx CMatrix::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& v : data_) {
        v *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows_, b.cols_);
    kernels::cgemm(a.rows_, a.cols_, b.cols_, a.data_.data(), b.data_.data(), c.data_.data());
    return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

CMatrix conjugate(const CMatrix& a, const CMatrix& b) { return a * b * a.adjoint(); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

bool is_hermitian(const CMatrix& m, double tol) {
    return m.is_square() && max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const CMatrix& m, double tol) {
    return m.is_square() && max_abs_diff(m.adjoint() * m, CMatrix::identity(m.rows())) <= tol;
}

namespace pauli {
CMatrix identity() { return CMatrix::identity(2); }
CMatrix x() { return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix y() { return CMatrix(2, 2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}); }
CMatrix z() { return CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

}  // namespace topophase
