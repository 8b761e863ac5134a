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

#include "topophase/trajectories.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "topophase/error.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase {
namespace {

constexpr double kSegmentAngle = 2.0 * kPi / 3.0;

Segment diagonal(double x, double y, double z) {
    const double s = std::sqrt(1.0 / 3.0);
    return Segment({s * x, s * y, s * z}, kSegmentAngle);
}

}  // namespace

bool composes_to_identity(std::span<const Segment> segments, double tol) {
    const UnitQuaternion q = compose(segments);
    return std::min(distance(q, UnitQuaternion::identity()), distance(q, -UnitQuaternion::identity())) <= tol;
}

Trajectory::Trajectory(std::string name, std::vector<Segment> segments, bool closed)
    : name_(std::move(name)), segments_(std::move(segments)), closed_(closed) {
    if (closed_ && !composes_to_identity(segments_, kTol.geometric)) {
        throw Error(ErrorCode::ClosureViolation, "trajectory '" + name_ + "' is marked closed but does not return to the identity");
    }
}

Trajectory Trajectory::reversed() const {
    std::vector<Segment> rev;
    rev.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
        rev.push_back(it->reversed());
    }
    return Trajectory(name_ + " reversed", std::move(rev), closed_);
}

Trajectory plus_trajectory() {
    return Trajectory("+", {diagonal(-1, -1, -1), diagonal(1, -1, -1), diagonal(-1, -1, 1), diagonal(-1, 1, 1)});
}

Trajectory minus_trajectory() {
    return Trajectory("-", {diagonal(-1, -1, -1), diagonal(1, -1, -1), diagonal(1, -1, -1), diagonal(1, 1, -1)});
}

Trajectory concatenated(const Trajectory& a, const Trajectory& b) {
    std::vector<Segment> segs = a.segments();
    segs.insert(segs.end(), b.segments().begin(), b.segments().end());
    return Trajectory(a.name() + b.name(), std::move(segs), a.closed() && b.closed());
}

SampledPath sample(const Trajectory& traj, double step) {
    if (!traj.closed()) {
        throw Error(ErrorCode::OpenTrajectory, "cannot sample an open trajectory");
    }
    return sample_segments(traj.segments(), step);
}

UnitaryGate segment_unitary(const Segment& seg) { return rotation_gate(seg.axis(), seg.angle()); }

Trajectory load_trajectory(std::string_view document) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaViolation, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() || !doc.contains("closed") ||
        !doc["closed"].is_boolean() || !doc.contains("segments") || !doc["segments"].is_array()) {
        throw Error(ErrorCode::SchemaViolation,
                    "trajectory needs \"name\" (string), \"closed\" (bool) and \"segments\" (array)");
    }
    std::vector<Segment> segments;
    for (const auto& item : doc["segments"]) {
        if (!item.is_object() || !item.contains("axis") || !item.contains("angle") || !item["angle"].is_number() ||
            !item["axis"].is_array() || item["axis"].size() != 3) {
            throw Error(ErrorCode::SchemaViolation, "segment needs \"axis\" [x,y,z] and numeric \"angle\"");
        }
        Vec3 axis{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!item["axis"][i].is_number()) {
                throw Error(ErrorCode::SchemaViolation, "axis components must be numbers");
            }
            axis[i] = item["axis"][i].get<double>();
        }
        const double n = norm(axis);
        if (!(n > 1e-12) || !std::isfinite(n)) {
            throw Error(ErrorCode::SchemaViolation, "segment axis cannot be normalized");
        }
        segments.emplace_back((1.0 / n) * axis, item["angle"].get<double>());
    }
    return Trajectory(doc["name"].get<std::string>(), std::move(segments), doc["closed"].get<bool>());
}

std::string save_trajectory(const Trajectory& traj) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["name"] = traj.name();
    doc["closed"] = traj.closed();
    doc["segments"] = ordered_json::array();
    for (const auto& seg : traj.segments()) {
        ordered_json s;
        s["axis"] = {seg.axis()[0], seg.axis()[1], seg.axis()[2]};
        s["angle"] = seg.angle();
        doc["segments"].push_back(std::move(s));
    }
    return doc.dump(2) + "\n";
}

}  // namespace topophase
