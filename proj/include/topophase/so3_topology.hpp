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

// Closed paths in SO(3) and their two homotopy classes.
//
// A rotation by `angle` about unit `axis` is lifted to SU(2) as the unit
// quaternion (cos(angle/2), sin(angle/2) axis), matching
// rotation_gate() = w I - i v.sigma. A closed path's class is the sign of its
// continuously lifted endpoint; independently it is the parity of the number
// of times the path passes through the surface of the radius-pi ball.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topophase/vec3.hpp"

namespace topophase {

class UnitQuaternion {
public:
    /// Throws InvalidArgument unless w^2 + |v|^2 = 1 within 1e-12.
    UnitQuaternion(double w, const Vec3& v);

    static UnitQuaternion identity() { return UnitQuaternion(1.0, {0.0, 0.0, 0.0}); }

    double w() const noexcept { return w_; }
    const Vec3& v() const noexcept { return v_; }

    UnitQuaternion conjugate() const { return UnitQuaternion(w_, -v_); }
    UnitQuaternion operator-() const { return UnitQuaternion(-w_, -v_); }

    /// Four-vector distance.
    friend double distance(const UnitQuaternion& a, const UnitQuaternion& b);
    friend double dot(const UnitQuaternion& a, const UnitQuaternion& b) {
        return a.w_ * b.w_ + topophase::dot(a.v_, b.v_);
    }

private:
    double w_;
    Vec3 v_;
};

/// Hamilton product q2 * q1: q1 is applied first.
UnitQuaternion quat_multiply(const UnitQuaternion& q2, const UnitQuaternion& q1);
inline UnitQuaternion operator*(const UnitQuaternion& q2, const UnitQuaternion& q1) {
    return quat_multiply(q2, q1);
}

/// Throws InvalidAxis unless |axis| = 1 within 1e-9.
UnitQuaternion quat_from_axis_angle(const Vec3& axis, double angle);

/// Point of the solid ball of radius pi: direction = rotation axis,
/// length = rotation angle. Antipodal surface points are the same rotation.
class BallPoint {
public:
    /// Throws InvalidArgument if |coords| > pi + 1e-9.
    explicit BallPoint(const Vec3& coords);

    const Vec3& coords() const noexcept { return coords_; }
    double angle() const { return norm(coords_); }
    /// Zero vector at the origin.
    Vec3 axis() const;
    bool on_surface(double tol = 1e-9) const;

    /// Same SO(3) element, honouring the antipodal identification.
    bool same_rotation(const BallPoint& other, double tol = 1e-9) const;

private:
    Vec3 coords_;
};

/// angle = 2 atan2(|v|, |w|) in [0, pi], axis sign chosen so the point
/// represents the same rotation as q.
BallPoint ball_point(const UnitQuaternion& q);

/// Fixed-axis rotation leg of a trajectory.
class Segment {
public:
    /// Throws InvalidAxis unless |axis| = 1 within 1e-9.
    Segment(const Vec3& axis, double angle);

    const Vec3& axis() const noexcept { return axis_; }
    double angle() const noexcept { return angle_; }

    UnitQuaternion quaternion() const { return quat_from_axis_angle(axis_, angle_); }
    Segment reversed() const { return Segment(axis_, -angle_); }

    friend bool operator==(const Segment&, const Segment&) = default;

private:
    Vec3 axis_;
    double angle_;
};

/// Composite SU(2) lift of `segments` applied in order.
UnitQuaternion compose(std::span<const Segment> segments);

/// Continuously lifted samples of a path starting at the identity.
class SampledPath {
public:
    /// Throws InvalidArgument if empty or not starting at the identity.
    SampledPath(std::vector<UnitQuaternion> points, double sampling_step);

    const std::vector<UnitQuaternion>& points() const noexcept { return points_; }
    double sampling_step() const noexcept { return step_; }
    const UnitQuaternion& back() const noexcept { return points_.back(); }
    std::size_t size() const noexcept { return points_.size(); }

private:
    std::vector<UnitQuaternion> points_;
    double step_;
};

/// Constant-axis interpolation, ceil(|angle| / step) equal arcs per segment.
/// Throws InvalidArgument unless step is in (0, 0.01].
SampledPath sample_segments(std::span<const Segment> segments, double step);

/// `b` traversed after `a`.
SampledPath concatenate(const SampledPath& a, const SampledPath& b);

/// +1 or -1: the endpoint of the continuous lift. Throws ContinuityBroken if
/// consecutive samples have dot <= 0 and PathNotClosed if the endpoint is not
/// +-identity within 1e-6.
int lift_sign(const SampledPath& path);

/// Number of transversal passages through the ball surface (sign changes of
/// the lifted w). A single on-surface sample is resolved by its neighbours;
/// two or more consecutive on-surface samples raise TangentialTouch.
int count_surface_crossings(const SampledPath& path);

/// Geodesic (angle <= pi) segment that returns `lift` to +-identity; empty
/// when `lift` already is one.
std::vector<Segment> closing_segment(const UnitQuaternion& lift);

/// `legs` followed by their geodesic closing segment.
std::vector<Segment> close_legs(std::vector<Segment> legs);

/// Deterministic random legs: axes uniform on the sphere, angles uniform in
/// [0, 2pi); closed by a geodesic arc.
std::vector<Segment> random_closed_segments(std::uint64_t seed, int n_waypoints);

/// sample_segments(random_closed_segments(seed, n_waypoints), step).
SampledPath random_closed_path(std::uint64_t seed, int n_waypoints, double step);

/// Every leg of the closed `segments` (closing leg excluded when
/// `drop_last` is set) rotated in axis and shifted in angle by at most
/// `max_deviation` radians, then re-closed geodesically.
std::vector<Segment> deform_closed(std::span<const Segment> segments, std::uint64_t seed, double max_deviation,
                                   bool drop_last = false);

}  // namespace topophase
