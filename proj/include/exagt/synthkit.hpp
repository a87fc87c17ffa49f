#pragma once

#include <optional>
#include <string>

#include "exagt/scenario.hpp"

namespace exagt {

enum class Maneuver { kStraight, kLeftTurn, kRightTurn, kLaneChange };

const char* to_string(Maneuver m);
std::optional<Maneuver> maneuver_from_string(const std::string& s);

// Recipe for one synthetic scenario. The generated world is a 4-way
// intersection of two 2-lane roads plus a detached 2-lane road off to the
// side; background objects are placed on lanes reachable from the EGO's
// start lane (connected) or on the detached road (disconnected).
struct SynthSpec {
  Maneuver maneuver = Maneuver::kStraight;
  int n_background_objects = 0;
  double connected_fraction = 1.0;  // fraction of background objects on reachable lanes
  double speed = 10.0;              // EGO speed, m/s
  std::uint64_t seed = 0;
};

// Ids of background objects the connectivity augmentation must keep (known
// by construction); everything else on the detached road must be dropped.
struct SynthGroundTruth {
  std::vector<std::string> connected_object_ids;
  std::vector<std::string> disconnected_object_ids;
};

// Deterministic per seed; 5 s at 10 Hz. The result always passes validate().
Scenario generate(const SynthSpec& spec);
Scenario generate(const SynthSpec& spec, SynthGroundTruth& truth);

}  // namespace exagt
