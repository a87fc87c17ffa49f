#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exagt/geometry.hpp"

namespace exagt {

struct TrajectoryPoint {
  double t = 0.0;  // seconds
  double x = 0.0;  // meters, map frame
  double y = 0.0;
  std::optional<double> heading;  // radians

  Vec2 pos() const { return {x, y}; }
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;

  bool empty() const { return points.empty(); }
  double t_front() const { return points.front().t; }
  double t_back() const { return points.back().t; }
};

enum class ObjectClass { kEgo, kVehicle, kPedestrian, kOther };

const char* to_string(ObjectClass c);
std::optional<ObjectClass> object_class_from_string(const std::string& s);

struct SceneObject {
  std::string id;
  Trajectory trajectory;
  double length = 0.0;  // meters
  double width = 0.0;   // meters
  ObjectClass object_class = ObjectClass::kOther;
};

struct MapElement {
  std::string id;
  Polygon polygon;
  std::vector<std::string> neighbors;       // kept sorted and unique
  std::optional<std::string> intersection;  // intersection membership id
};

struct Scenario {
  std::string id;
  std::vector<SceneObject> objects;
  std::vector<MapElement> map;
  double t_start = 0.0;
  double t_end = 0.0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks every structural invariant and reports all violations; never throws
// and never mutates. A valid scenario yields an empty report.
ValidationReport validate(const Scenario& scenario);

// The unique EGO object. Throws ValidationError when there is none or more
// than one.
const SceneObject& ego(const Scenario& scenario);

// Heading of the trajectory at time t. A stored heading at the nearest sample
// wins; otherwise the direction of the displacement between the samples
// bracketing t. If that bracket is stationary (displacement < 1e-6 m) the
// last previously defined heading applies, defaulting to 0.
// Throws ArgumentError for t outside the trajectory span.
double heading_at(const Trajectory& trajectory, double t);

// Linear interpolation of position at time t (clamped to sample times at the
// ends of the bracket). Throws ArgumentError for t outside the span.
Vec2 position_at(const Trajectory& trajectory, double t);

struct Pose {
  Vec2 position;
  double heading = 0.0;
};

// EGO pose at time t: interpolated position plus heading_at.
Pose pose_at(const Trajectory& trajectory, double t);

}  // namespace exagt
