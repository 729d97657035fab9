#include "tendonkit/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tendonkit/units.hpp"

namespace tendonkit {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing required field");
  return *it;
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "expected a number");
  return v.get<double>();
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

Eigen::Vector3d vec3_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) bad(path, "expected an array of 3 numbers");
  return {number_at(v[0], path + "[0]"), number_at(v[1], path + "[1]"),
          number_at(v[2], path + "[2]")};
}

Eigen::Isometry3d origin_at(const json& obj, const std::string& path) {
  Eigen::Isometry3d out = Eigen::Isometry3d::Identity();
  if (obj.is_null()) return out;
  if (!obj.is_object()) bad(path, "expected an object with optional 'position'/'quaternion'");
  if (obj.contains("position")) out.translation() = vec3_at(obj["position"], path + ".position");
  if (obj.contains("quaternion")) {
    const json& q = obj["quaternion"];
    if (!q.is_array() || q.size() != 4) bad(path + ".quaternion", "expected [w, x, y, z]");
    Eigen::Quaterniond quat(number_at(q[0], path + ".quaternion[0]"),
                            number_at(q[1], path + ".quaternion[1]"),
                            number_at(q[2], path + ".quaternion[2]"),
                            number_at(q[3], path + ".quaternion[3]"));
    if (std::abs(quat.norm() - 1.0) > 1e-6) bad(path + ".quaternion", "quaternion is not unit norm");
    out.linear() = quat.normalized().toRotationMatrix();
  }
  return out;
}

}  // namespace

KinematicModel parse_model(const std::string& text, const std::string& origin_label) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, origin_label + ": " + e.what());
  }

  std::vector<std::string> links;
  const json& jlinks = member(doc, origin_label, "links");
  if (!jlinks.is_array()) bad("links", "expected an array of link names");
  for (std::size_t i = 0; i < jlinks.size(); ++i)
    links.push_back(string_at(jlinks[i], "links[" + std::to_string(i) + "]"));

  std::vector<Joint> joints;
  const json& jjoints = member(doc, origin_label, "joints");
  if (!jjoints.is_array()) bad("joints", "expected an array");
  for (std::size_t i = 0; i < jjoints.size(); ++i) {
    const json& j = jjoints[i];
    const std::string at = "joints[" + std::to_string(i) + "]";
    Joint joint;
    joint.name = string_at(member(j, at, "name"), at + ".name");
    joint.parent_link = string_at(member(j, at, "parent"), at + ".parent");
    joint.child_link = string_at(member(j, at, "child"), at + ".child");
    joint.axis = vec3_at(member(j, at, "axis"), at + ".axis");
    joint.origin = origin_at(j.contains("origin") ? j["origin"] : json(), at + ".origin");
    const json& lim = member(j, at, "limits_deg");
    if (!lim.is_array() || lim.size() != 2) bad(at + ".limits_deg", "expected [lower, upper]");
    joint.lower_limit = deg_to_rad(number_at(lim[0], at + ".limits_deg[0]"));
    joint.upper_limit = deg_to_rad(number_at(lim[1], at + ".limits_deg[1]"));
    joints.push_back(std::move(joint));
  }

  std::vector<Muscle> muscles;
  const json& jmuscles = member(doc, origin_label, "muscles");
  if (!jmuscles.is_array()) bad("muscles", "expected an array");
  for (std::size_t i = 0; i < jmuscles.size(); ++i) {
    const json& m = jmuscles[i];
    const std::string at = "muscles[" + std::to_string(i) + "]";
    Muscle muscle;
    muscle.name = string_at(member(m, at, "name"), at + ".name");
    const json& vias = member(m, at, "via_points");
    if (!vias.is_array()) bad(at + ".via_points", "expected an array");
    for (std::size_t v = 0; v < vias.size(); ++v) {
      const std::string vat = at + ".via_points[" + std::to_string(v) + "]";
      ViaPoint point;
      point.link = string_at(member(vias[v], vat, "link"), vat + ".link");
      point.position = vec3_at(member(vias[v], vat, "position"), vat + ".position");
      muscle.via_points.push_back(std::move(point));
    }
    muscles.push_back(std::move(muscle));
  }

  return KinematicModel::create(std::move(links), std::move(joints), std::move(muscles));
}

KinematicModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), path);
}

}  // namespace tendonkit
