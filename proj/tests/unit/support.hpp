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

// Independent oracles and hand-rolled random generators shared by the unit
// tests. Nothing here calls into the library's own numerics; the oracles use
// Eigen directly so they can catch errors in the code under test.
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "topophase/cmatrix.hpp"
#include "topophase/error.hpp"
#include "topophase/numeric_policy.hpp"
#include "topophase/quantum_core.hpp"
#include "topophase/vec3.hpp"

namespace testing_support {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
inline constexpr double pi = std::numbers::pi;
inline const cplx I{0.0, 1.0};

inline Mat to_eigen(const topophase::CMatrix& m) {
    Mat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return out;
}

inline topophase::CMatrix from_eigen(const Mat& m) {
    topophase::CMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
        }
    }
    return out;
}

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }
inline double max_diff(const topophase::CMatrix& a, const Mat& b) { return max_diff(to_eigen(a), b); }

inline Mat sx() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
inline Mat sy() { return (Mat(2, 2) << 0, -I, I, 0).finished(); }
inline Mat sz() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }
inline Mat id2() { return Mat::Identity(2, 2); }

// exp(-i angle/2 n.sigma) by matrix exponential.
inline Mat rotation_oracle(const topophase::Vec3& n, double angle) {
    Mat gen = n[0] * sx() + n[1] * sy() + n[2] * sz();
    Mat arg = (-I * (angle / 2.0)) * gen;
    return arg.exp();
}

// Single-spin operator `op` on `spin` of an n-spin register, spin 0 leftmost.
inline Mat embed1(const Mat& op, int spin, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        Mat f = k == spin ? op : id2();
        Mat next = Eigen::kroneckerProduct(out, f).eval();
        out = next;
    }
    return out;
}

inline Mat spin_op(int spin, char axis, int n = 3) {
    const Mat s = axis == 'x' ? sx() : axis == 'y' ? sy() : sz();
    return embed1(0.5 * s, spin, n);
}

// Hamiltonian from offsets (rad/s) and couplings (Hz), assembled from Kronecker products.
inline Mat hamiltonian_oracle(const std::array<double, 3>& w, const std::array<std::array<double, 3>, 3>& j) {
    Mat h = Mat::Zero(8, 8);
    for (int a = 0; a < 3; ++a) {
        h += w[static_cast<std::size_t>(a)] * spin_op(a, 'z');
        for (int b = a + 1; b < 3; ++b) {
            h += 2.0 * pi * j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * spin_op(a, 'z') *
                 spin_op(b, 'z');
        }
    }
    return h;
}

inline Mat pulse_oracle(const std::vector<int>& targets, double phase, double flip, int n = 3) {
    Mat gen = Mat::Zero(1 << n, 1 << n);
    for (int t : targets) {
        gen += std::cos(phase) * spin_op(t, 'x', n) + std::sin(phase) * spin_op(t, 'y', n);
    }
    Mat arg = (-I * flip) * gen;
    return arg.exp();
}

// Hamilton product written out componentwise as the 4x4 left-multiplication matrix.
struct Quat {
    double w, x, y, z;
};

inline Quat hamilton(const Quat& a, const Quat& b) {
    const double m[4][4] = {{a.w, -a.x, -a.y, -a.z}, {a.x, a.w, -a.z, a.y}, {a.y, a.z, a.w, -a.x}, {a.z, -a.y, a.x, a.w}};
    const double v[4] = {b.w, b.x, b.y, b.z};
    double r[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            r[i] += m[i][k] * v[k];
        }
    }
    return {r[0], r[1], r[2], r[3]};
}

inline Quat axis_angle(const topophase::Vec3& n, double angle) {
    const double s = std::sin(angle / 2.0);
    return {std::cos(angle / 2.0), s * n[0], s * n[1], s * n[2]};
}

inline std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            acc += x[t] * std::polar(1.0, -2.0 * pi * static_cast<double>(k * t % n) / static_cast<double>(n));
        }
        out[k] = acc;
    }
    return out;
}

// Seeded generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

    topophase::Vec3 unit_vector() {
        for (;;) {
            topophase::Vec3 v{normal(), normal(), normal()};
            const double n = topophase::norm(v);
            if (n > 1e-6) {
                return topophase::operator*(1.0 / n, v);
            }
        }
    }

    cplx complex_normal() { return {normal(), normal()}; }

    std::vector<cplx> state_amplitudes(int n_qubits) {
        std::vector<cplx> a(std::size_t{1} << n_qubits);
        double s = 0.0;
        for (auto& x : a) {
            x = complex_normal();
            s += std::norm(x);
        }
        for (auto& x : a) {
            x /= std::sqrt(s);
        }
        return a;
    }

    // Haar-ish unitary from the QR factorization of a Ginibre matrix.
    Mat unitary(int dim) {
        Mat g(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                g(r, c) = complex_normal();
            }
        }
        Eigen::HouseholderQR<Mat> qr(g);
        return qr.householderQ() * Mat::Identity(dim, dim);
    }

    Mat hermitian(int dim) {
        Mat g(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                g(r, c) = complex_normal();
            }
        }
        return 0.5 * (g + g.adjoint());
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace testing_support

#define EXPECT_TOPO_ERROR(stmt, expected_code)                                       \
    do {                                                                             \
        try {                                                                        \
            (void)(stmt);                                                            \
            ADD_FAILURE() << "expected " << topophase::error_code_name(expected_code); \
        } catch (const topophase::Error& e) {                                        \
            EXPECT_EQ(e.code(), expected_code) << e.what();                          \
        }                                                                            \
    } while (0)
