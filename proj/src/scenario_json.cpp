#include "exagt/scenario_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exagt/errors.hpp"

namespace exagt {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail_field(const std::string& path, const std::string& what) {
  throw ParseError("field '" + path + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail_field(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_field(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail_field(path, "expected a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail_field(path, "expected a string");
  return v.get<std::string>();
}

TrajectoryPoint parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || (v.size() != 3 && v.size() != 4)) {
    fail_field(path, "expected [t,x,y] or [t,x,y,heading]");
  }
  TrajectoryPoint p;
  p.t = as_number(v[0], path + "[0]");
  p.x = as_number(v[1], path + "[1]");
  p.y = as_number(v[2], path + "[2]");
  if (v.size() == 4) p.heading = as_number(v[3], path + "[3]");
  return p;
}

SceneObject parse_object(const json& v, const std::string& path) {
  SceneObject obj;
  obj.id = as_string(require(v, "id", path), path + ".id");
  const std::string cls = as_string(require(v, "class", path), path + ".class");
  const auto parsed = object_class_from_string(cls);
  if (!parsed) fail_field(path + ".class", "unknown class '" + cls + "'");
  obj.object_class = *parsed;
  const json& size = require(v, "size", path);
  if (!size.is_array() || size.size() != 2) fail_field(path + ".size", "expected [length,width]");
  obj.length = as_number(size[0], path + ".size[0]");
  obj.width = as_number(size[1], path + ".size[1]");
  const json& traj = require(v, "trajectory", path);
  if (!traj.is_array()) fail_field(path + ".trajectory", "expected an array");
  for (std::size_t i = 0; i < traj.size(); ++i) {
    obj.trajectory.points.push_back(
        parse_point(traj[i], path + ".trajectory[" + std::to_string(i) + "]"));
  }
  return obj;
}

MapElement parse_map_element(const json& v, const std::string& path) {
  MapElement m;
  m.id = as_string(require(v, "id", path), path + ".id");
  const json& poly = require(v, "polygon", path);
  if (!poly.is_array()) fail_field(path + ".polygon", "expected an array of [x,y]");
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const json& pt = poly[i];
    const std::string p = path + ".polygon[" + std::to_string(i) + "]";
    if (!pt.is_array() || pt.size() != 2) fail_field(p, "expected [x,y]");
    m.polygon.push_back({as_number(pt[0], p + "[0]"), as_number(pt[1], p + "[1]")});
  }
  const json& nbs = require(v, "neighbors", path);
  if (!nbs.is_array()) fail_field(path + ".neighbors", "expected an array of ids");
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    m.neighbors.push_back(as_string(nbs[i], path + ".neighbors[" + std::to_string(i) + "]"));
  }
  std::sort(m.neighbors.begin(), m.neighbors.end());
  m.neighbors.erase(std::unique(m.neighbors.begin(), m.neighbors.end()), m.neighbors.end());
  const json& inter = require(v, "intersection", path);
  if (inter.is_null()) {
    m.intersection.reset();
  } else {
    m.intersection = as_string(inter, path + ".intersection");
  }
  return m;
}

}  // namespace

Scenario parse_scenario(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }

  Scenario s;
  s.id = as_string(require(doc, "id", ""), "id");
  const json& span = require(doc, "time_span", "");
  if (!span.is_array() || span.size() != 2) fail_field("time_span", "expected [t0,t1]");
  s.t_start = as_number(span[0], "time_span[0]");
  s.t_end = as_number(span[1], "time_span[1]");
  const json& objects = require(doc, "objects", "");
  if (!objects.is_array()) fail_field("objects", "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    s.objects.push_back(parse_object(objects[i], "objects[" + std::to_string(i) + "]"));
  }
  const json& map = require(doc, "map", "");
  if (!map.is_array()) fail_field("map", "expected an array");
  for (std::size_t i = 0; i < map.size(); ++i) {
    s.map.push_back(parse_map_element(map[i], "map[" + std::to_string(i) + "]"));
  }

  const ValidationReport report = validate(s);
  if (!report.valid()) {
    std::string msg = "scenario '" + s.id + "' failed validation:";
    for (const std::string& v : report.violations) msg += "\n  - " + v;
    throw ValidationError(msg);
  }
  return s;
}

std::string serialize_scenario(const Scenario& scenario) {
  json doc;
  doc["id"] = scenario.id;
  doc["time_span"] = {scenario.t_start, scenario.t_end};
  json objects = json::array();
  for (const SceneObject& obj : scenario.objects) {
    json o;
    o["id"] = obj.id;
    o["class"] = to_string(obj.object_class);
    o["size"] = {obj.length, obj.width};
    json traj = json::array();
    for (const TrajectoryPoint& p : obj.trajectory.points) {
      if (p.heading) {
        traj.push_back({p.t, p.x, p.y, *p.heading});
      } else {
        traj.push_back({p.t, p.x, p.y});
      }
    }
    o["trajectory"] = std::move(traj);
    objects.push_back(std::move(o));
  }
  doc["objects"] = std::move(objects);
  json map = json::array();
  for (const MapElement& m : scenario.map) {
    json e;
    e["id"] = m.id;
    json poly = json::array();
    for (const Vec2& v : m.polygon) poly.push_back({v.x, v.y});
    e["polygon"] = std::move(poly);
    std::vector<std::string> nbs = m.neighbors;
    std::sort(nbs.begin(), nbs.end());
    e["neighbors"] = nbs;
    if (m.intersection) {
      e["intersection"] = *m.intersection;
    } else {
      e["intersection"] = nullptr;
    }
    map.push_back(std::move(e));
  }
  doc["map"] = std::move(map);
  return doc.dump(2) + "\n";
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void save_scenario_file(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << serialize_scenario(scenario);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<std::filesystem::path> list_scenario_files(const std::filesystem::path& in) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(in)) {
    for (const auto& entry : fs::directory_iterator(in)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(in)) {
    files.push_back(in);
  }
  if (files.empty()) throw IoError("no scenario files found at '" + in.string() + "'");
  return files;
}

}  // namespace exagt
