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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "topophase/interferometer.hpp"
#include "topophase/mes_phase.hpp"
#include "topophase/nmr.hpp"

using namespace topophase;
using namespace topophase::nmr;
using namespace testing_support;

namespace {

const std::array<std::array<double, 3>, 3> kNoCoupling{};

SpinSystem zero_system() { return SpinSystem({0.0, 0.0, 0.0}, kNoCoupling); }

Mat proj(int bit) {
    Mat p = Mat::Zero(2, 2);
    p(bit, bit) = 1.0;
    return p;
}

// Ideal controlled rotation on (control, target), identity on the third spin.
Mat controlled_oracle(const Segment& seg, int control, int target) {
    return embed1(proj(0), control, 3) + embed1(proj(1), control, 3) * embed1(rotation_oracle(seg.axis(), seg.angle()), target, 3);
}

double fidelity(const Mat& ideal, const Mat& got) { return std::abs((ideal.adjoint() * got).trace()) / 8.0; }

DensityOperator deviation(const Mat& m) { return DensityOperator(3, from_eigen(m), 0.0); }

std::vector<Segment> catalog_segments() {
    std::vector<Segment> out;
    for (const auto& t : {plus_trajectory(), minus_trajectory()}) {
        out.insert(out.end(), t.segments().begin(), t.segments().end());
    }
    return out;
}

}  // namespace

TEST(SpinSystem, DefaultValues) {
    const auto s = default_system();
    EXPECT_EQ(s.offset(1), 0.0);
    EXPECT_NEAR(s.offset(0) - s.offset(1), 2.0 * pi * 12020.0, 1e-9);
    EXPECT_NEAR(s.offset(1) - s.offset(2), 2.0 * pi * 17330.0, 1e-9);
    EXPECT_EQ(s.coupling(0, 1), 64.2);
    EXPECT_EQ(s.coupling(0, 2), 51.3);
    EXPECT_EQ(s.coupling(1, 2), -129.0);
    EXPECT_EQ(s.coupling(2, 1), -129.0);
}

TEST(SpinSystem, RejectsAsymmetricCouplings) {
    std::array<std::array<double, 3>, 3> j{};
    j[0][1] = 1.0;
    EXPECT_TOPO_ERROR(SpinSystem({0, 0, 0}, j), ErrorCode::InvalidArgument);
    j[1][0] = 1.0;
    j[2][2] = 3.0;
    EXPECT_TOPO_ERROR(SpinSystem({0, 0, 0}, j), ErrorCode::InvalidArgument);
}

TEST(Hamiltonian, Examples) {
    std::array<std::array<double, 3>, 3> j{};
    j[0][1] = j[1][0] = 2.0;
    EXPECT_NEAR(hamiltonian_diagonal(SpinSystem({0, 0, 0}, j))[0], pi, 1e-12);

    const auto s = default_system();
    const double want = 0.5 * (s.offset(0) + s.offset(1) + s.offset(2)) + (pi / 2.0) * (64.2 + 51.3 - 129.0);
    EXPECT_NEAR(hamiltonian_diagonal(s)[0], want, 1e-9);
    EXPECT_NEAR(std::abs(hamiltonian(s).trace()), 0.0, 1e-9);

    std::array<std::array<double, 3>, 3> jj{};
    jj[0][1] = jj[1][0] = 64.2;
    jj[0][2] = jj[2][0] = 51.3;
    jj[1][2] = jj[2][1] = -129.0;
    EXPECT_LT(max_diff(hamiltonian(s), hamiltonian_oracle(s.offsets(), jj)), 1e-8);
}

TEST(Evolve, TrivialCases) {
    Gen g(601);
    const auto sys = default_system();
    const Mat h = g.hermitian(8);
    const Mat traceless = h - Mat::Identity(8, 8) * (h.trace() / 8.0);
    const auto r0 = deviation(traceless);
    EXPECT_LT(max_abs_diff(evolve(r0, sys, 0.0).matrix(), r0.matrix()), 1e-15);

    Mat diag = Mat::Zero(8, 8);
    diag.diagonal() << 1, -2, 3, -4, 5, -6, 7, -4;
    const auto d = deviation(diag);
    EXPECT_LT(max_abs_diff(evolve(d, sys, 0.37).matrix(), d.matrix()), 1e-15);
    EXPECT_TOPO_ERROR(evolve(d, sys, -1e-3), ErrorCode::NegativeTime);
}

TEST(Evolve, PropertyMatchesExponentialAndKeepsSpectrum) {
    Gen g(602);
    std::array<std::array<double, 3>, 3> jj{};
    jj[0][1] = jj[1][0] = 64.2;
    jj[0][2] = jj[2][0] = 51.3;
    jj[1][2] = jj[2][1] = -129.0;
    const auto sys = default_system();
    const Mat h = hamiltonian_oracle(sys.offsets(), jj);
    for (int i = 0; i < 50; ++i) {
        Mat m = g.hermitian(8);
        m -= Mat::Identity(8, 8) * (m.trace() / 8.0);
        const double t = g.uniform(0.0, 0.02);
        const Mat arg = (-I * t) * h;
        const Mat u = arg.exp();
        const auto out = evolve(deviation(m), sys, t);
        EXPECT_LT(max_diff(out.matrix(), Mat(u * m * u.adjoint())), 1e-10);
        EXPECT_NEAR(std::abs(out.matrix().trace()), 0.0, 1e-12);
        EXPECT_TRUE(is_hermitian(out.matrix(), 1e-12));
        const Eigen::VectorXd ev_in = Eigen::SelfAdjointEigenSolver<Mat>(m).eigenvalues();
        const Eigen::VectorXd ev_out = Eigen::SelfAdjointEigenSolver<Mat>(to_eigen(out.matrix())).eigenvalues();
        EXPECT_LT((ev_in - ev_out).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Evolve, ProductOperatorAntiphaseRule) {
    // I_x^0 under 2 pi J I_z^0 I_z^1 for t = 1/(2J) becomes 2 I_y^0 I_z^1.
    std::array<std::array<double, 3>, 3> j{};
    j[0][1] = j[1][0] = 64.2;
    const SpinSystem sys({0, 0, 0}, j);
    const auto out = evolve(deviation(spin_op(0, 'x')), sys, 1.0 / (2.0 * 64.2));
    EXPECT_LT(max_diff(out.matrix(), Mat(2.0 * spin_op(0, 'y') * spin_op(1, 'z'))), 1e-12);
}

TEST(HardPulse, PropertyMatchesExponential) {
    Gen g(603);
    for (int i = 0; i < 100; ++i) {
        Mat m = g.hermitian(8);
        m -= Mat::Identity(8, 8) * (m.trace() / 8.0);
        std::vector<int> targets;
        for (int s = 0; s < 3; ++s) {
            if (g.uniform() < 0.5) {
                targets.push_back(s);
            }
        }
        if (targets.empty()) {
            targets.push_back(g.integer(0, 2));
        }
        const double phase = g.uniform(0, kTwoPi);
        const double flip = g.uniform(-kTwoPi + 1e-9, kTwoPi);
        const Mat u = pulse_oracle(targets, phase, flip);
        const auto out = hard_pulse(deviation(m), targets, phase, flip);
        EXPECT_LT(max_diff(out.matrix(), Mat(u * m * u.adjoint())), 1e-11);
    }
}

TEST(HardPulse, Examples) {
    Mat pop000 = Mat::Zero(8, 8);
    pop000(0, 0) = 1.0;
    const DensityOperator full(3, from_eigen(pop000), 1.0);
    const auto flipped = hard_pulse(full, {0}, 0.0, pi);
    EXPECT_NEAR(flipped(4, 4).real(), 1.0, 1e-12);
    EXPECT_NEAR(flipped(0, 0).real(), 0.0, 1e-12);

    const double eps = 1e-5;
    const auto y90 = hard_pulse(pseudo_pure(eps), {0}, pi / 2.0, pi / 2.0);
    EXPECT_NEAR(expectation(y90, from_eigen(spin_op(0, 'x'))), eps / 2.0, 1e-18);
    EXPECT_NEAR(expectation(y90, from_eigen(spin_op(0, 'z'))), 0.0, 1e-18);

    EXPECT_TOPO_ERROR(hard_pulse(full, {}, 0.0, pi), ErrorCode::EmptyTargets);
    EXPECT_TOPO_ERROR(hard_pulse(full, {3}, 0.0, pi), ErrorCode::InvalidIndex);
    EXPECT_TOPO_ERROR(hard_pulse(full, {1, 1}, 0.0, pi), ErrorCode::RepeatedTarget);
}

TEST(HardPulse, TiltPutsZOntoCubeDiagonal) {
    // flip arccos(1/sqrt3) at phase 3pi/4 maps I_z onto the (1,1,1)/sqrt3 line,
    // the axis of segment AB up to orientation.
    const auto out = hard_pulse(deviation(spin_op(1, 'z')), {1}, 3.0 * pi / 4.0, std::acos(1.0 / std::sqrt(3.0)));
    const double s = 1.0 / std::sqrt(3.0);
    const Mat want = s * (spin_op(1, 'x') + spin_op(1, 'y') + spin_op(1, 'z'));
    EXPECT_LT(max_diff(out.matrix(), want), 1e-12);
}

TEST(Crusher, Examples) {
    Mat diag = Mat::Zero(8, 8);
    diag.diagonal() << 1, -1, 2, -2, 0, 0, 3, -3;
    EXPECT_LT(max_diff(crusher(deviation(diag)).matrix(), diag), 1e-15);
    EXPECT_LT(max_diff(crusher(deviation(spin_op(0, 'x'))).matrix(), Mat(Mat::Zero(8, 8))), 1e-15);
    // |010><100| + h.c. is a zero-quantum term.
    Mat zq = Mat::Zero(8, 8);
    zq(2, 4) = 1.0;
    zq(4, 2) = 1.0;
    EXPECT_LT(max_diff(crusher(deviation(zq)).matrix(), zq), 1e-15);
}

TEST(Crusher, PropertyIdempotentTracePreservingCommutesWithEvolve) {
    Gen g(604);
    const auto sys = default_system();
    for (int i = 0; i < 100; ++i) {
        const Mat h = g.hermitian(8);
        const DensityOperator rho(3, from_eigen(h), h.trace().real());
        const auto once = crusher(rho);
        EXPECT_LT(max_abs_diff(crusher(once).matrix(), once.matrix()), 1e-15);
        EXPECT_NEAR(once.matrix().trace().real(), h.trace().real(), 1e-12);
        // Oracle: keep (r, c) iff the popcounts of r and c agree.
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
                const bool keep = __builtin_popcount(r) == __builtin_popcount(c);
                EXPECT_EQ(once(r, c), keep ? h(r, c) : cplx{});
            }
        }
        const double t = g.uniform(0, 0.01);
        EXPECT_LT(max_abs_diff(crusher(evolve(rho, sys, t)).matrix(), evolve(crusher(rho), sys, t).matrix()), 1e-12);
    }
}

TEST(PseudoPure, Entries) {
    const auto p = pseudo_pure(1e-5);
    EXPECT_NEAR(std::abs(p.matrix().trace()), 0.0, 1e-20);
    EXPECT_NEAR(p(0, 0).real(), 1e-5 * 7.0 / 8.0, 1e-20);
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if (r != c) {
                EXPECT_EQ(p(r, c), cplx{});
            }
        }
    }
}

TEST(Compile, CatalogSegmentsReachFidelity) {
    const auto sys = default_system();
    for (const auto& seg : catalog_segments()) {
        const auto seq = compile_controlled_segment(seg, sys);
        const Mat got = to_eigen(sequence_propagator(sys, seq));
        EXPECT_GE(fidelity(controlled_oracle(seg, 0, 1), got), 0.999);
        ASSERT_TRUE(seq.intended().has_value());
        EXPECT_GE(propagator_fidelity(seq.intended()->matrix(), from_eigen(got)), 0.999);
    }
}

TEST(Compile, UsesCubeDiagonalTiltPhases) {
    // The inverse tilt comes first in time (phase + pi); the closing tilt of
    // segment AB sits at 3 pi / 4.
    const auto sys = default_system();
    for (const auto& seg : catalog_segments()) {
        const auto seq = compile_controlled_segment(seg, sys);
        std::vector<double> tilts;
        for (const auto& ev : seq.events()) {
            if (const auto* p = std::get_if<HardPulse>(&ev)) {
                if (std::abs(p->flip - std::acos(1.0 / std::sqrt(3.0))) < 1e-12) {
                    tilts.push_back(p->phase);
                }
            }
        }
        ASSERT_EQ(tilts.size(), 2u);
        for (double ph : tilts) {
            const double quarter = std::remainder(ph - pi / 4.0, pi / 2.0);
            EXPECT_NEAR(quarter, 0.0, 1e-12) << ph;
        }
    }
    const auto ab = compile_controlled_segment(plus_trajectory().segments()[0], sys);
    double last = 0.0;
    for (const auto& ev : ab.events()) {
        if (const auto* p = std::get_if<HardPulse>(&ev)) {
            if (std::abs(p->flip - std::acos(1.0 / std::sqrt(3.0))) < 1e-12) {
                last = p->phase;
            }
        }
    }
    EXPECT_NEAR(std::remainder(last - 3.0 * pi / 4.0, kTwoPi), 0.0, 1e-12);
}

TEST(Compile, ZeroAngleIsEmpty) {
    EXPECT_TRUE(compile_controlled_segment(Segment({0, 0, 1}, 0.0), default_system()).events().empty());
}

TEST(Compile, CouplingBlockDuration) {
    EXPECT_NEAR(coupling_block_duration(pi, 64.2), 1.0 / (2.0 * 64.2), 1e-15);
    EXPECT_NEAR(coupling_block_duration(2.0 * pi / 3.0, 64.2), 1.0 / (3.0 * 64.2), 1e-15);
    const auto seq = compile_controlled_segment(plus_trajectory().segments()[0], default_system());
    EXPECT_NEAR(seq.total_delay(), 1.0 / (3.0 * 64.2), 1e-12);

    // A delay of 1/(2 J) under the bare coupling gives a conditional pi phase.
    std::array<std::array<double, 3>, 3> j{};
    j[0][1] = j[1][0] = 64.2;
    const SpinSystem sys({0, 0, 0}, j);
    const PulseSequence wait({Delay{coupling_block_duration(pi, 64.2)}});
    const auto u = sequence_propagator(sys, wait);
    const cplx cond = u(0, 0) * u(6, 6) / (u(2, 2) * u(4, 4));
    EXPECT_NEAR(std::abs(cond + 1.0), 0.0, 1e-12);
}

TEST(Compile, PropertyRandomSegmentsAndPairs) {
    Gen g(605);
    const auto sys = default_system();
    const int pairs[][2] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}};
    for (int i = 0; i < 60; ++i) {
        const Segment seg(g.unit_vector(), g.uniform(-kTwoPi + 1e-6, kTwoPi));
        const auto& p = pairs[i % 6];
        const auto seq = compile_controlled(seg, sys, p[0], p[1]);
        EXPECT_GE(fidelity(controlled_oracle(seg, p[0], p[1]), to_eigen(sequence_propagator(sys, seq))), 0.999);
    }
}

TEST(Compile, Cnot) {
    const auto sys = default_system();
    const auto seq = compile_cnot(sys, 1, 2);
    const Mat cx = embed1(proj(0), 1, 3) + embed1(proj(1), 1, 3) * embed1(sx(), 2, 3);
    EXPECT_GE(fidelity(cx, to_eigen(sequence_propagator(sys, seq))), 0.999);
    EXPECT_NEAR(seq.total_delay(), 1.0 / (2.0 * 129.0), 1e-12);
}

TEST(Compile, PropagatorRejectsCrusher) {
    EXPECT_TOPO_ERROR(sequence_propagator(default_system(), PulseSequence({Crusher{}})), ErrorCode::InvalidArgument);
}

TEST(PulseSequence, ValidatesEvents) {
    EXPECT_TOPO_ERROR(PulseSequence({Delay{-1.0}}), ErrorCode::NegativeTime);
    EXPECT_TOPO_ERROR(PulseSequence({HardPulse{{0}, 0.0, 7.0}}), ErrorCode::InvalidArgument);
    EXPECT_TOPO_ERROR(PulseSequence({HardPulse{{}, 0.0, 1.0}}), ErrorCode::EmptyTargets);
}

TEST(RunSequence, Examples) {
    const auto sys = default_system();
    const auto rho = pseudo_pure();
    EXPECT_LT(max_abs_diff(run_sequence(rho, sys, PulseSequence({})).matrix(), rho.matrix()), 1e-20);
    const auto tilted = hard_pulse(rho, {0, 1}, 0.3, 1.0);
    const PulseSequence two_pi({HardPulse{{1}, 0.2, pi}, HardPulse{{1}, 0.2, pi}});
    EXPECT_LT(max_abs_diff(run_sequence(tilted, sys, two_pi).matrix(), tilted.matrix()), 1e-18);
}

TEST(RunSequence, ExperimentMatchesCircuit) {
    const auto sys = default_system();
    const double eps = 1e-5;
    for (const auto& t : {plus_trajectory(), minus_trajectory()}) {
        for (double phi : {0.0, 1.0, 2.5}) {
            const auto out = run_sequence(pseudo_pure(eps), sys, experiment_sequence(t, phi, sys));
            // Traceless deviation: <2 I_x^0> / eps equals the circuit expectation.
            const double mx = 2.0 * expectation(out, from_eigen(spin_op(0, 'x'))) / eps;
            EXPECT_NEAR(mx, run(t, phi), 1e-8);
        }
    }
}

TEST(AcquireFid, Examples) {
    const auto sys = default_system();
    AcquisitionParams p;
    p.npoints = 1024;
    p.demodulation = sys.offset(0);
    const auto none = acquire_fid(pseudo_pure(), sys, p);
    for (auto v : none) {
        EXPECT_EQ(v, cplx{});
    }

    AcquisitionParams flat;
    flat.npoints = 1024;
    flat.t2eff = 0.0;
    const auto c = acquire_fid(deviation(spin_op(0, 'x')), zero_system(), flat);
    for (auto v : c) {
        EXPECT_NEAR(v.real(), c[0].real(), 1e-15);
        EXPECT_NEAR(v.imag(), 0.0, 1e-15);
    }
    EXPECT_NEAR(c[0].real(), 2.0, 1e-15);  // Tr(I_x I_+) over the 8-dimensional space

    EXPECT_TOPO_ERROR(acquire_fid(pseudo_pure(), sys, AcquisitionParams{}), ErrorCode::NyquistViolation);
    p.npoints = 1000;
    EXPECT_TOPO_ERROR(acquire_fid(pseudo_pure(), sys, p), ErrorCode::InvalidArgument);
}

TEST(AcquireFid, PropertyMatchesExplicitEvolution) {
    Gen g(606);
    const auto sys = default_system();
    AcquisitionParams p;
    p.npoints = 1024;
    p.demodulation = sys.offset(0);
    Mat m = g.hermitian(8);
    m -= Mat::Identity(8, 8) * (m.trace() / 8.0);
    const auto rho = deviation(m);
    const auto fid = acquire_fid(rho, sys, p);
    const Mat iplus = spin_op(0, 'x') + I * spin_op(0, 'y');
    for (std::size_t k : {0u, 1u, 17u, 500u, 1023u}) {
        const double t = static_cast<double>(k) * p.dwell;
        const auto rt = to_eigen(evolve(rho, sys, t).matrix());
        const cplx want = (rt * iplus).trace() * std::exp(-t / p.t2eff) * std::polar(1.0, -p.demodulation * t);
        EXPECT_LT(std::abs(fid[k] - want), 1e-9) << k;
    }
}

TEST(SpectrumTransform, MatchesNaiveDft) {
    Gen g(607);
    std::vector<cplx> fid(1024);
    for (auto& v : fid) {
        v = g.complex_normal();
    }
    const double dwell = 1e-3;
    const double phase0 = 0.4;
    const auto spec = spectrum(fid, dwell, phase0);
    auto scaled = fid;
    scaled[0] *= 0.5;
    const auto ref = naive_dft(scaled);
    ASSERT_EQ(spec.values.size(), fid.size());
    for (std::size_t j = 0; j < fid.size(); ++j) {
        const cplx want = dwell * std::polar(1.0, phase0) * ref[(j + 512) % 1024];
        EXPECT_LT(std::abs(spec.values[j] - want), 1e-10);
    }
    EXPECT_NEAR(spec.frequencies[512], 0.0, 1e-12);
    EXPECT_NEAR(spec.resolution(), 1.0 / (1024 * dwell), 1e-12);
    EXPECT_TOPO_ERROR(spectrum(std::vector<cplx>{}, dwell), ErrorCode::LengthMismatch);
}

TEST(SpectrumTransform, PeakPositions) {
    AcquisitionParams flat;
    flat.npoints = 1024;
    flat.dwell = 1e-3;
    flat.t2eff = 0.0;
    auto argmax = [](const Spectrum& s) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (s.values[i].real() > s.values[best].real()) {
                best = i;
            }
        }
        return s.frequencies[best];
    };
    const auto c = acquire_fid(deviation(spin_op(0, 'x')), zero_system(), flat);
    EXPECT_NEAR(argmax(spectrum(c, flat.dwell)), 0.0, 1e-12);

    const SpinSystem shifted({2.0 * pi * 100.0, 0.0, 0.0}, kNoCoupling);
    flat.t2eff = 0.2;
    const auto f = acquire_fid(deviation(spin_op(0, 'x')), shifted, flat);
    const auto s = spectrum(f, flat.dwell);
    EXPECT_NEAR(argmax(s), 100.0, s.resolution());
}

TEST(Integrate, BandErrors) {
    Spectrum s;
    s.frequencies = {-1.0, 0.0, 1.0};
    s.values = {1.0, 2.0, 3.0};
    EXPECT_NEAR(integrate_multiplet(s, -0.5, 1.0), 5.0, 1e-15);
    EXPECT_TOPO_ERROR(integrate_band(s, 0.2, 0.8), ErrorCode::EmptyBand);
    EXPECT_TOPO_ERROR(integrate_band(s, -5.0, 0.0), ErrorCode::EmptyBand);
    EXPECT_TOPO_ERROR(integrate_band(s, 1.0, 0.0), ErrorCode::EmptyBand);
}

TEST(Pipeline, ClassSignsAndEmptyBand) {
    const auto sys = default_system();
    const NmrConfig cfg;
    const auto calib = calibrate(sys, cfg);
    const auto plus = run_nmr_experiment(TrajectoryClass::Plus, 0.0, sys, cfg, calib);
    const auto minus = run_nmr_experiment(TrajectoryClass::Minus, 0.0, sys, cfg, calib);
    EXPECT_NEAR(plus.normalized_integral, 1.0, 0.05);
    EXPECT_NEAR(minus.normalized_integral, -1.0, 0.05);
    EXPECT_EQ(plus.integral > 0, trajectory_phase(plus_trajectory()) > 0);
    EXPECT_EQ(minus.integral > 0, trajectory_phase(minus_trajectory()) > 0);

    const cplx empty = integrate_band(plus.spectrum, 1000.0, 1500.0);
    EXPECT_LT(std::abs(empty.real()) / calib.reference_magnitude, 0.01);

    const auto flipped = run_nmr_experiment(TrajectoryClass::Plus, pi, sys, cfg, calib);
    EXPECT_LT(flipped.normalized_integral, 0.0);
}

TEST(Pipeline, PhiSweepFollowsCosine) {
    const auto sys = default_system();
    const NmrConfig cfg;
    const auto calib = calibrate(sys, cfg);
    for (double phi : phase_grid(12)) {
        const auto r = run_nmr_experiment(TrajectoryClass::Minus, phi, sys, cfg, calib);
        EXPECT_NEAR(r.normalized_integral, -std::cos(phi), 0.1);
    }
}

TEST(Pipeline, TwoEqualSymmetricLines) {
    const auto sys = default_system();
    const NmrConfig cfg;
    for (auto c : {TrajectoryClass::Plus, TrajectoryClass::Minus}) {
        const auto r = run_nmr_experiment(c, 0.0, sys, cfg);
        const auto lines = find_lines(r.spectrum, -cfg.band_hz, cfg.band_hz);
        ASSERT_EQ(lines.size(), 2u);
        const double sign = c == TrajectoryClass::Plus ? 1.0 : -1.0;
        EXPECT_GT(sign * lines[0].height, 0.0);
        EXPECT_GT(sign * lines[1].height, 0.0);
        EXPECT_NEAR(lines[0].height / lines[1].height, 1.0, 0.05);
        EXPECT_LT(std::abs(lines[0].frequency + lines[1].frequency), r.spectrum.resolution());
        // Populations of spins 1 and 2 are locked together, so the ancilla
        // sees the sum of its two couplings.
        EXPECT_NEAR(lines[1].frequency - lines[0].frequency, 64.2 + 51.3, 2.0 * r.spectrum.resolution());
    }
}

TEST(Config, LoadAndValidate) {
    const auto cfg = load_config(R"({"dwell_s": 1e-4, "npoints": 4096, "t2eff_s": 0.1, "phase0_rad": 0.2, "epsilon": 2e-5})");
    EXPECT_EQ(cfg.dwell_s, 1e-4);
    EXPECT_EQ(cfg.npoints, 4096u);
    EXPECT_EQ(cfg.t2eff_s, 0.1);
    EXPECT_EQ(cfg.phase0_rad, 0.2);
    EXPECT_EQ(cfg.epsilon, 2e-5);
    EXPECT_TOPO_ERROR(load_config("{"), ErrorCode::SchemaViolation);
    EXPECT_TOPO_ERROR(load_config(R"({"npoints": "many"})"), ErrorCode::SchemaViolation);
    EXPECT_TOPO_ERROR(load_config(R"({"npoints": 1.5})"), ErrorCode::SchemaViolation);
    EXPECT_TOPO_ERROR(load_config("[]"), ErrorCode::SchemaViolation);
}

TEST(SpectrumCsv, Header) {
    Spectrum s;
    s.frequencies = {-1.0, 0.0};
    s.values = {cplx{1.0, 2.0}, cplx{0.5, 0.0}};
    EXPECT_EQ(spectrum_csv(s), "freq_hz,real,imag\n-1,1,2\n0,0.5,0\n");
}
