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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <unsupported/Eigen/FFT>

#include "topophase/error.hpp"
#include "topophase/kernels/kernels.hpp"
#include "topophase/nmr.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase::nmr {

std::vector<cplx> acquire_fid(const DensityOperator& rho, const SpinSystem& sys, const AcquisitionParams& params) {
    if (rho.n_spins() != kSpins) {
        throw Error(ErrorCode::DimensionMismatch, "acquisition needs a three-spin operator");
    }
    if (params.detect < 0 || params.detect >= kSpins) {
        throw Error(ErrorCode::InvalidIndex, "detected spin out of range");
    }
    if (!(params.dwell > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "dwell time must be positive");
    }
    if (params.npoints < 1024 || (params.npoints & (params.npoints - 1)) != 0) {
        throw Error(ErrorCode::InvalidArgument, "npoints must be a power of two >= 1024");
    }
    double max_j = 0.0;
    for (int a = 0; a < kSpins; ++a) {
        for (int b = 0; b < kSpins; ++b) {
            max_j = std::max(max_j, std::abs(sys.coupling(a, b)));
        }
    }
    const double band_edge = std::abs(sys.offset(params.detect) - params.demodulation) / kTwoPi + max_j;
    if (band_edge > 1.0 / (2.0 * params.dwell)) {
        throw Error(ErrorCode::NyquistViolation, "detected resonances exceed the spectral window 1/(2 dwell)");
    }

    // Tr(rho(t) I+) only sees elements rho(r, c) with c = r except the
    // detected spin flipped from |1> (in r) to |0> (in c).
    const auto e = hamiltonian_diagonal(sys);
    const std::size_t bit = std::size_t{1} << (kSpins - 1 - params.detect);
    const double decay = params.t2eff > 0.0 ? std::exp(-params.dwell / params.t2eff) : 1.0;
    std::vector<cplx> amps;
    std::vector<cplx> steps;
    for (std::size_t r = 0; r < kDim; ++r) {
        if (!(r & bit)) {
            continue;
        }
        const std::size_t c = r & ~bit;
        const cplx a = rho(r, c);
        if (a == cplx{}) {
            continue;
        }
        amps.push_back(a);
        steps.push_back(decay * std::polar(1.0, (e[c] - e[r] - params.demodulation) * params.dwell));
    }
    std::vector<cplx> fid(params.npoints);
    kernels::phasor_accumulate(amps.size(), amps.data(), steps.data(), fid.size(), fid.data());
    return fid;
}

Spectrum spectrum(std::span<const cplx> fid, double dwell, double phase0, double first_point_scale) {
    if (fid.empty()) {
        throw Error(ErrorCode::LengthMismatch, "empty FID");
    }
    if (!(dwell > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "dwell time must be positive");
    }
    const std::size_t n = fid.size();
    std::vector<cplx> in(fid.begin(), fid.end());
    in[0] *= first_point_scale;
    std::vector<cplx> out;
    Eigen::FFT<double> fft;
    fft.fwd(out, in);
    if (out.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "transform length differs from the FID length");
    }

    Spectrum spec;
    spec.frequencies.resize(n);
    spec.values.resize(n);
    const double df = 1.0 / (static_cast<double>(n) * dwell);
    const cplx rot = std::polar(dwell, phase0);
    const std::size_t half = n / 2;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = (j + n - half) % n;
        spec.frequencies[j] = (static_cast<double>(j) - static_cast<double>(half)) * df;
        spec.values[j] = rot * out[src];
    }
    return spec;
}

cplx integrate_band(const Spectrum& spec, double lo_hz, double hi_hz) {
    if (spec.frequencies.size() != spec.values.size()) {
        throw Error(ErrorCode::LengthMismatch, "spectrum axis and values differ in length");
    }
    if (!(lo_hz < hi_hz) || spec.frequencies.empty() || lo_hz < spec.frequencies.front() ||
        hi_hz > spec.frequencies.back()) {
        throw Error(ErrorCode::EmptyBand, "band must be a non-empty interval inside the spectral axis");
    }
    cplx sum{};
    std::size_t count = 0;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        if (spec.frequencies[i] >= lo_hz && spec.frequencies[i] <= hi_hz) {
            sum += spec.values[i];
            ++count;
        }
    }
    if (count == 0) {
        throw Error(ErrorCode::EmptyBand, "no spectral bins inside the band");
    }
    return sum * spec.resolution();
}

double integrate_multiplet(const Spectrum& spec, double lo_hz, double hi_hz) {
    return integrate_band(spec, lo_hz, hi_hz).real();
}

std::vector<SpectralLine> find_lines(const Spectrum& spec, double lo_hz, double hi_hz, double rel_threshold) {
    std::size_t first = spec.frequencies.size();
    std::size_t last = 0;
    double largest = 0.0;
    for (std::size_t i = 0; i < spec.frequencies.size(); ++i) {
        if (spec.frequencies[i] >= lo_hz && spec.frequencies[i] <= hi_hz) {
            first = std::min(first, i);
            last = std::max(last, i);
            largest = std::max(largest, std::abs(spec.values[i].real()));
        }
    }
    if (first >= last) {
        throw Error(ErrorCode::EmptyBand, "band holds fewer than two bins");
    }
    std::vector<SpectralLine> lines;
    const double df = spec.resolution();
    for (std::size_t i = std::max<std::size_t>(first, 1); i <= last && i + 1 < spec.values.size(); ++i) {
        const double y0 = std::abs(spec.values[i - 1].real());
        const double y1 = std::abs(spec.values[i].real());
        const double y2 = std::abs(spec.values[i + 1].real());
        if (y1 < rel_threshold * largest || y1 < y0 || y1 <= y2) {
            continue;
        }
        const double curvature = y0 - 2.0 * y1 + y2;
        const double shift = curvature != 0.0 ? 0.5 * (y0 - y2) / curvature : 0.0;
        lines.push_back({spec.frequencies[i] + shift * df, spec.values[i].real()});
    }
    return lines;
}

std::string spectrum_csv(const Spectrum& spec) {
    std::string out = "freq_hz,real,imag\n";
    out.reserve(out.size() + spec.values.size() * 64);
    char line[128];
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g\n", spec.frequencies[i], spec.values[i].real(),
                      spec.values[i].imag());
        out += line;
    }
    return out;
}

}  // namespace topophase::nmr
