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

#include "topophase/so3_topology.hpp"

#include <cmath>
#include <string>

#include "rng.hpp"
#include "topophase/error.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase {

UnitQuaternion::UnitQuaternion(double w, const Vec3& v) : w_(w), v_(v) {
    if (std::abs(w * w + topophase::dot(v, v) - 1.0) > kTol.algebraic) {
        throw Error(ErrorCode::InvalidArgument, "quaternion is not unit norm");
    }
}

double distance(const UnitQuaternion& a, const UnitQuaternion& b) {
    const Vec3 dv = a.v_ - b.v_;
    const double dw = a.w_ - b.w_;
    return std::sqrt(dw * dw + topophase::dot(dv, dv));
}

UnitQuaternion quat_multiply(const UnitQuaternion& q2, const UnitQuaternion& q1) {
    const double w = q2.w() * q1.w() - dot(q2.v(), q1.v());
    const Vec3 v = q2.w() * q1.v() + q1.w() * q2.v() + cross(q2.v(), q1.v());
    return UnitQuaternion(w, v);
}

UnitQuaternion quat_from_axis_angle(const Vec3& axis, double angle) {
    if (std::abs(norm(axis) - 1.0) > kTol.geometric) {
        throw Error(ErrorCode::InvalidAxis, "rotation axis must be a unit vector");
    }
    // Exact renormalization keeps the product inside the 1e-12 unit-norm band.
    const Vec3 n = (1.0 / norm(axis)) * axis;
    return UnitQuaternion(std::cos(angle / 2.0), std::sin(angle / 2.0) * n);
}

BallPoint::BallPoint(const Vec3& coords) : coords_(coords) {
    if (norm(coords_) > kPi + kTol.geometric) {
        throw Error(ErrorCode::InvalidArgument, "ball point lies outside the radius-pi ball");
    }
}

Vec3 BallPoint::axis() const {
    const double a = angle();
    return a == 0.0 ? Vec3{0.0, 0.0, 0.0} : (1.0 / a) * coords_;
}

bool BallPoint::on_surface(double tol) const { return std::abs(angle() - kPi) <= tol; }

bool BallPoint::same_rotation(const BallPoint& other, double tol) const {
    if (norm(coords_ - other.coords_) <= tol) {
        return true;
    }
    return on_surface(tol) && other.on_surface(tol) && norm(coords_ + other.coords_) <= tol;
}

BallPoint ball_point(const UnitQuaternion& q) {
    const double vn = norm(q.v());
    if (vn == 0.0) {
        return BallPoint({0.0, 0.0, 0.0});
    }
    const double angle = 2.0 * std::atan2(vn, std::abs(q.w()));
    const double sign = q.w() < 0.0 ? -1.0 : 1.0;
    return BallPoint((sign * angle / vn) * q.v());
}

Segment::Segment(const Vec3& axis, double angle) : axis_(axis), angle_(angle) {
    if (std::abs(norm(axis) - 1.0) > kTol.geometric) {
        throw Error(ErrorCode::InvalidAxis, "segment axis must be a unit vector");
    }
}

UnitQuaternion compose(std::span<const Segment> segments) {
    UnitQuaternion acc = UnitQuaternion::identity();
    for (const auto& seg : segments) {
        acc = seg.quaternion() * acc;
    }
    return acc;
}

SampledPath::SampledPath(std::vector<UnitQuaternion> points, double sampling_step)
    : points_(std::move(points)), step_(sampling_step) {
    if (points_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "sampled path has no points");
    }
    if (distance(points_.front(), UnitQuaternion::identity()) > kTol.algebraic) {
        throw Error(ErrorCode::InvalidArgument, "sampled path must start at the identity");
    }
}

SampledPath sample_segments(std::span<const Segment> segments, double step) {
    if (!(step > 0.0) || step > kTol.max_step) {
        throw Error(ErrorCode::InvalidArgument, "sampling step must lie in (0, 0.01]");
    }
    std::vector<UnitQuaternion> points{UnitQuaternion::identity()};
    UnitQuaternion start = UnitQuaternion::identity();
    for (const auto& seg : segments) {
        const auto arcs = static_cast<std::size_t>(std::ceil(std::abs(seg.angle()) / step));
        for (std::size_t i = 1; i <= arcs; ++i) {
            const double partial = seg.angle() * static_cast<double>(i) / static_cast<double>(arcs);
            points.push_back(quat_from_axis_angle(seg.axis(), partial) * start);
        }
        if (arcs > 0) {
            start = points.back();
        }
    }
    return SampledPath(std::move(points), step);
}

SampledPath concatenate(const SampledPath& a, const SampledPath& b) {
    std::vector<UnitQuaternion> points = a.points();
    const UnitQuaternion end = a.back();
    for (std::size_t i = 1; i < b.size(); ++i) {
        points.push_back(b.points()[i] * end);
    }
    return SampledPath(std::move(points), std::max(a.sampling_step(), b.sampling_step()));
}

namespace {

void check_continuity(const SampledPath& path) {
    const auto& pts = path.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (dot(pts[i - 1], pts[i]) <= 0.0) {
            throw Error(ErrorCode::ContinuityBroken,
                        "consecutive samples " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            " are not lift-continuous; sample more finely");
        }
    }
}

int closed_end_sign(const SampledPath& path) {
    const auto& end = path.back();
    if (distance(end, UnitQuaternion::identity()) <= kTol.path_closure) {
        return +1;
    }
    if (distance(end, -UnitQuaternion::identity()) <= kTol.path_closure) {
        return -1;
    }
    throw Error(ErrorCode::PathNotClosed, "path does not return to the identity rotation");
}

}  // namespace

int lift_sign(const SampledPath& path) {
    check_continuity(path);
    return closed_end_sign(path);
}

int count_surface_crossings(const SampledPath& path) {
    if (path.sampling_step() > kTol.max_step) {
        throw Error(ErrorCode::InvalidArgument, "crossing detection needs a sampling step <= 0.01 rad");
    }
    check_continuity(path);
    closed_end_sign(path);

    // A lone sample exactly on the surface (a segment junction such as F) is
    // resolved by its neighbours: opposite signs make it a crossing, equal
    // signs a touch that is not counted. Runs of surface samples slide.
    int crossings = 0;
    int last_sign = 0;
    int on_surface_run = 0;
    for (const auto& q : path.points()) {
        if (std::abs(q.w()) < kTol.surface_touch) {
            if (++on_surface_run >= 2) {
                throw Error(ErrorCode::TangentialTouch, "path slides along the SO(3) surface; crossing count undefined");
            }
            continue;
        }
        const int sign = q.w() > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) {
            ++crossings;
        }
        last_sign = sign;
        on_surface_run = 0;
    }
    return crossings;
}

std::vector<Segment> closing_segment(const UnitQuaternion& lift) {
    // The inverse rotation, lifted with w >= 0 so its angle is at most pi.
    UnitQuaternion inv = lift.conjugate();
    if (inv.w() < 0.0) {
        inv = -inv;
    }
    const double vn = norm(inv.v());
    if (vn == 0.0) {
        return {};
    }
    return {Segment((1.0 / vn) * inv.v(), 2.0 * std::atan2(vn, inv.w()))};
}

std::vector<Segment> close_legs(std::vector<Segment> legs) {
    for (auto& seg : closing_segment(compose(legs))) {
        legs.push_back(seg);
    }
    return legs;
}

std::vector<Segment> random_closed_segments(std::uint64_t seed, int n_waypoints) {
    if (n_waypoints < 1) {
        throw Error(ErrorCode::InvalidArgument, "random path needs at least one waypoint");
    }
    detail::Rng rng(seed);
    std::vector<Segment> legs;
    legs.reserve(static_cast<std::size_t>(n_waypoints) + 1);
    for (int i = 0; i < n_waypoints; ++i) {
        const Vec3 axis = rng.unit_vector();
        const double angle = rng.uniform(0.0, kTwoPi);
        legs.emplace_back(axis, angle);
    }
    return close_legs(std::move(legs));
}

SampledPath random_closed_path(std::uint64_t seed, int n_waypoints, double step) {
    const auto segs = random_closed_segments(seed, n_waypoints);
    return sample_segments(segs, step);
}

std::vector<Segment> deform_closed(std::span<const Segment> segments, std::uint64_t seed, double max_deviation,
                                   bool drop_last) {
    detail::Rng rng(seed);
    const std::size_t count = drop_last && !segments.empty() ? segments.size() - 1 : segments.size();
    std::vector<Segment> legs;
    legs.reserve(count + 1);
    for (std::size_t i = 0; i < count; ++i) {
        const Segment& seg = segments[i];
        Vec3 perp = cross(seg.axis(), rng.unit_vector());
        const double pn = norm(perp);
        const double tilt = rng.uniform(0.0, max_deviation);
        Vec3 axis = seg.axis();
        if (pn > 1e-6) {
            perp = (1.0 / pn) * perp;
            axis = std::cos(tilt) * axis + std::sin(tilt) * perp;
            axis = (1.0 / norm(axis)) * axis;
        }
        legs.emplace_back(axis, seg.angle() + rng.uniform(-max_deviation, max_deviation));
    }
    return close_legs(std::move(legs));
}

}  // namespace topophase
