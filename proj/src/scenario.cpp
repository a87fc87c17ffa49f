#include "exagt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "exagt/errors.hpp"

namespace exagt {

namespace {

constexpr double kStationaryEps = 1e-6;  // meters

bool is_finite(double v) { return std::isfinite(v); }

}  // namespace

const char* to_string(ObjectClass c) {
  switch (c) {
    case ObjectClass::kEgo: return "ego";
    case ObjectClass::kVehicle: return "vehicle";
    case ObjectClass::kPedestrian: return "pedestrian";
    case ObjectClass::kOther: return "other";
  }
  return "other";
}

std::optional<ObjectClass> object_class_from_string(const std::string& s) {
  if (s == "ego") return ObjectClass::kEgo;
  if (s == "vehicle") return ObjectClass::kVehicle;
  if (s == "pedestrian") return ObjectClass::kPedestrian;
  if (s == "other") return ObjectClass::kOther;
  return std::nullopt;
}

ValidationReport validate(const Scenario& scenario) {
  ValidationReport report;
  auto add = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (!is_finite(scenario.t_start) || !is_finite(scenario.t_end) ||
      scenario.t_end <= scenario.t_start) {
    add("time_span: t_end must be finite and greater than t_start");
  }

  int ego_count = 0;
  std::unordered_set<std::string> object_ids;
  for (const SceneObject& obj : scenario.objects) {
    if (!object_ids.insert(obj.id).second) add("object '" + obj.id + "': duplicate id");
    if (obj.object_class == ObjectClass::kEgo) ++ego_count;
    if (!(obj.length > 0.0) || !(obj.width > 0.0)) {
      add("object '" + obj.id + "': size components must be > 0");
    }
    double prev_t = -std::numeric_limits<double>::infinity();
    for (const TrajectoryPoint& p : obj.trajectory.points) {
      if (!is_finite(p.t) || !is_finite(p.x) || !is_finite(p.y)) {
        add("object '" + obj.id + "': non-finite trajectory point");
        break;
      }
      if (p.t <= prev_t) {
        add("object '" + obj.id + "': timestamps not strictly increasing");
        break;
      }
      prev_t = p.t;
    }
    for (const TrajectoryPoint& p : obj.trajectory.points) {
      if (p.t < scenario.t_start - 1e-9 || p.t > scenario.t_end + 1e-9) {
        add("object '" + obj.id + "': timestamp outside time_span");
        break;
      }
    }
    if (obj.object_class == ObjectClass::kEgo) {
      if (obj.trajectory.empty()) {
        add("EGO trajectory is empty");
      } else if (obj.trajectory.t_front() > scenario.t_start + 1e-9 ||
                 obj.trajectory.t_back() < scenario.t_end - 1e-9) {
        add("EGO trajectory does not cover time_span");
      }
    }
  }
  if (ego_count == 0) add("no EGO object");
  if (ego_count > 1) add("multiple EGO objects");

  std::unordered_map<std::string, const MapElement*> by_id;
  for (const MapElement& m : scenario.map) {
    if (!by_id.emplace(m.id, &m).second) add("map element '" + m.id + "': duplicate id");
    if (m.polygon.size() < 3) {
      add("map element '" + m.id + "': polygon needs at least 3 vertices");
    } else {
      bool finite = true;
      for (const Vec2& v : m.polygon) {
        if (!is_finite(v.x) || !is_finite(v.y)) { finite = false; break; }
      }
      if (!finite) {
        add("map element '" + m.id + "': non-finite vertex");
      } else if (!polygon_is_simple(m.polygon)) {
        add("map element '" + m.id + "': polygon is not simple");
      }
    }
  }
  for (const MapElement& m : scenario.map) {
    for (const std::string& nb : m.neighbors) {
      auto it = by_id.find(nb);
      if (it == by_id.end()) {
        add("map element '" + m.id + "': dangling neighbor '" + nb + "'");
        continue;
      }
      const auto& back = it->second->neighbors;
      if (std::find(back.begin(), back.end(), m.id) == back.end()) {
        add("map element '" + m.id + "': asymmetric neighbor '" + nb + "'");
      }
    }
  }
  return report;
}

const SceneObject& ego(const Scenario& scenario) {
  const SceneObject* found = nullptr;
  for (const SceneObject& obj : scenario.objects) {
    if (obj.object_class != ObjectClass::kEgo) continue;
    if (found != nullptr) throw ValidationError("scenario '" + scenario.id + "': multiple EGO objects");
    found = &obj;
  }
  if (found == nullptr) throw ValidationError("scenario '" + scenario.id + "': no EGO object");
  return *found;
}

namespace {

// Index of the last sample with points[i].t <= t, clamped so i+1 exists
// whenever the trajectory has more than one point.
std::size_t bracket_index(const std::vector<TrajectoryPoint>& pts, double t) {
  std::size_t i = 0;
  while (i + 1 < pts.size() && pts[i + 1].t <= t) ++i;
  if (i + 1 == pts.size() && i > 0) --i;
  return i;
}

void check_span(const Trajectory& traj, double t) {
  if (traj.empty()) throw ArgumentError("trajectory is empty");
  if (t < traj.t_front() - 1e-9 || t > traj.t_back() + 1e-9) {
    throw ArgumentError("time outside trajectory span");
  }
}

}  // namespace

double heading_at(const Trajectory& trajectory, double t) {
  check_span(trajectory, t);
  const auto& pts = trajectory.points;

  std::size_t nearest = 0;
  double best = std::abs(pts[0].t - t);
  for (std::size_t j = 1; j < pts.size(); ++j) {
    const double d = std::abs(pts[j].t - t);
    if (d < best) { best = d; nearest = j; }
  }
  if (pts[nearest].heading) return *pts[nearest].heading;
  if (pts.size() == 1) return 0.0;

  const std::size_t i = bracket_index(pts, t);
  const Vec2 d = pts[i + 1].pos() - pts[i].pos();
  if (d.norm() >= kStationaryEps) return std::atan2(d.y, d.x);

  // Stationary bracket: replay the trajectory up to the bracket and keep the
  // most recent heading that was ever defined, either stored or from motion.
  double h = 0.0;
  for (std::size_t j = 0; j <= i; ++j) {
    if (pts[j].heading) h = *pts[j].heading;
    if (j < i) {
      const Vec2 seg = pts[j + 1].pos() - pts[j].pos();
      if (seg.norm() >= kStationaryEps) h = std::atan2(seg.y, seg.x);
    }
  }
  return h;
}

Vec2 position_at(const Trajectory& trajectory, double t) {
  check_span(trajectory, t);
  const auto& pts = trajectory.points;
  if (pts.size() == 1) return pts[0].pos();
  const std::size_t i = bracket_index(pts, t);
  const TrajectoryPoint& a = pts[i];
  const TrajectoryPoint& b = pts[i + 1];
  const double span = b.t - a.t;
  double u = span > 0.0 ? (t - a.t) / span : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

Pose pose_at(const Trajectory& trajectory, double t) {
  return {position_at(trajectory, t), heading_at(trajectory, t)};
}

}  // namespace exagt
