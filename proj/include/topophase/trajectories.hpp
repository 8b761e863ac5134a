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

// Segment trajectories: the two cube-diagonal benchmark circuits, JSON
// serialization and sampling into SampledPaths.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "topophase/quantum_core.hpp"
#include "topophase/so3_topology.hpp"

namespace topophase {

class Trajectory {
public:
    /// Throws ClosureViolation if `closed` is set and the segments do not
    /// compose to the identity rotation within 1e-9.
    Trajectory(std::string name, std::vector<Segment> segments, bool closed = true);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Segment>& segments() const noexcept { return segments_; }
    bool closed() const noexcept { return closed_; }

    /// SU(2) product of all segments.
    UnitQuaternion lift() const { return compose(segments_); }

    /// Segments in reverse order with negated angles.
    Trajectory reversed() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    std::string name_;
    std::vector<Segment> segments_;
    bool closed_;
};

/// Whether the segments compose to the identity in SO(3) (lift = +-1).
bool composes_to_identity(std::span<const Segment> segments, double tol = 1e-9);

/// A B F D A: four 2pi/3 turns about cube diagonals, never leaving the ball.
Trajectory plus_trajectory();

/// A B F' E' A': shares A B F with the "+" circuit, then re-enters at F'.
Trajectory minus_trajectory();

/// `a` followed by `b`.
Trajectory concatenated(const Trajectory& a, const Trajectory& b);

/// Throws OpenTrajectory unless `traj` is closed.
SampledPath sample(const Trajectory& traj, double step = 0.005);

UnitaryGate segment_unitary(const Segment& seg);

/// Throws SchemaViolation or ClosureViolation.
Trajectory load_trajectory(std::string_view document);
std::string save_trajectory(const Trajectory& traj);

}  // namespace topophase
