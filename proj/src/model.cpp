#include "tendonkit/model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tendonkit {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

KinematicModel KinematicModel::create(std::vector<std::string> links, std::vector<Joint> joints,
                                      std::vector<Muscle> muscles) {
  std::vector<Violation> bad;
  auto fail = [&bad](std::string code, std::string path, std::string message) {
    bad.push_back({std::move(code), std::move(path), std::move(message)});
  };

  if (links.empty()) fail("no_links", "links", "model must declare at least one link");

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!seen.insert(links[i]).second)
      fail("duplicate_link", "links[" + std::to_string(i) + "]", "duplicate link '" + links[i] + "'");
  }

  auto link_id = [&links](const std::string& name) { return find_name(links, name); };

  std::vector<int> parent_joint(links.size(), -1);
  seen.clear();
  for (std::size_t i = 0; i < joints.size(); ++i) {
    const Joint& j = joints[i];
    const std::string at = "joints[" + std::to_string(i) + "]";
    if (!seen.insert(j.name).second) fail("duplicate_joint", at + ".name", "duplicate joint '" + j.name + "'");
    if (link_id(j.parent_link) < 0)
      fail("unknown_link", at + ".parent_link", "link '" + j.parent_link + "' not declared");
    if (link_id(j.child_link) < 0)
      fail("unknown_link", at + ".child_link", "link '" + j.child_link + "' not declared");
    if (std::abs(j.axis.norm() - 1.0) > 1e-9)
      fail("axis_not_unit", at + ".axis", "axis norm deviates from 1 by more than 1e-9");
    if (!std::isfinite(j.lower_limit) || !std::isfinite(j.upper_limit) || !(j.lower_limit < j.upper_limit))
      fail("bad_limits", at + ".limits", "requires finite lower_limit < upper_limit");
    int child = link_id(j.child_link);
    if (child >= 0) {
      if (parent_joint[child] >= 0)
        fail("multiple_parents", at + ".child_link", "link '" + j.child_link + "' already has a parent joint");
      else
        parent_joint[child] = static_cast<int>(i);
    }
  }

  int base = -1;
  if (bad.empty()) {
    for (std::size_t l = 0; l < links.size(); ++l) {
      if (parent_joint[l] < 0) {
        if (base >= 0)
          fail("multiple_roots", "links[" + std::to_string(l) + "]",
               "links '" + links[base] + "' and '" + links[l] + "' are both parentless");
        else
          base = static_cast<int>(l);
      }
    }
    if (base < 0 && !links.empty()) fail("cyclic", "joints", "joint graph has no root link");
  }

  // Reachability from the base doubles as the cycle check: with single
  // parents and one root, unreachable links can only sit on a cycle.
  std::vector<int> topo;
  if (bad.empty()) {
    std::vector<std::vector<int>> children(links.size());
    for (std::size_t i = 0; i < joints.size(); ++i)
      children[link_id(joints[i].parent_link)].push_back(static_cast<int>(i));
    std::deque<int> queue{base};
    std::vector<bool> visited(links.size(), false);
    visited[base] = true;
    while (!queue.empty()) {
      int l = queue.front();
      queue.pop_front();
      for (int j : children[l]) {
        topo.push_back(j);
        int c = link_id(joints[j].child_link);
        visited[c] = true;
        queue.push_back(c);
      }
    }
    for (std::size_t l = 0; l < links.size(); ++l)
      if (!visited[l])
        fail("unreachable_link", "links[" + std::to_string(l) + "]",
             "link '" + links[l] + "' is not reachable from the base (cycle or disconnected)");
  }

  seen.clear();
  for (std::size_t m = 0; m < muscles.size(); ++m) {
    const Muscle& mu = muscles[m];
    const std::string at = "muscles[" + std::to_string(m) + "]";
    if (!seen.insert(mu.name).second) fail("duplicate_muscle", at + ".name", "duplicate muscle '" + mu.name + "'");
    if (mu.via_points.size() < 2) fail("too_few_via_points", at + ".via_points", "needs at least 2 via points");
    for (std::size_t v = 0; v < mu.via_points.size(); ++v) {
      if (link_id(mu.via_points[v].link) < 0)
        fail("unknown_link", at + ".via_points[" + std::to_string(v) + "].link",
             "link '" + mu.via_points[v].link + "' not declared");
    }
  }

  if (!bad.empty()) throw ValidationError(std::move(bad));

  KinematicModel model;
  model.links_ = std::move(links);
  model.joints_ = std::move(joints);
  model.muscles_ = std::move(muscles);
  model.base_link_ = base;
  model.parent_joint_ = std::move(parent_joint);
  model.topo_order_ = std::move(topo);
  model.jlinks_.reserve(model.joints_.size());
  for (const Joint& j : model.joints_)
    model.jlinks_.emplace_back(model.link_index(j.parent_link), model.link_index(j.child_link));
  model.via_cache_.resize(model.muscles_.size());
  for (std::size_t m = 0; m < model.muscles_.size(); ++m)
    for (const ViaPoint& v : model.muscles_[m].via_points)
      model.via_cache_[m].emplace_back(model.link_index(v.link), v.position);
  return model;
}

int KinematicModel::link_index(const std::string& name) const { return find_name(links_, name); }

int KinematicModel::joint_index(const std::string& name) const {
  for (std::size_t i = 0; i < joints_.size(); ++i)
    if (joints_[i].name == name) return static_cast<int>(i);
  return -1;
}

int KinematicModel::muscle_index(const std::string& name) const {
  for (std::size_t i = 0; i < muscles_.size(); ++i)
    if (muscles_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> KinematicModel::spanned_joints(int muscle) const {
  if (muscle < 0 || muscle >= muscle_count())
    throw Error(ErrorCode::DimensionMismatch, "muscle index out of range");

  auto depth = [this](int link) {
    int d = 0;
    while (parent_joint_[link] >= 0) {
      link = jlinks_[parent_joint_[link]].first;
      ++d;
    }
    return d;
  };

  std::unordered_set<int> joints_on_paths;
  const auto& vias = via_cache_[muscle];
  for (std::size_t v = 0; v + 1 < vias.size(); ++v) {
    int a = vias[v].first, b = vias[v + 1].first;
    int da = depth(a), db = depth(b);
    while (da > db) {
      joints_on_paths.insert(parent_joint_[a]);
      a = jlinks_[parent_joint_[a]].first;
      --da;
    }
    while (db > da) {
      joints_on_paths.insert(parent_joint_[b]);
      b = jlinks_[parent_joint_[b]].first;
      --db;
    }
    while (a != b) {
      joints_on_paths.insert(parent_joint_[a]);
      joints_on_paths.insert(parent_joint_[b]);
      a = jlinks_[parent_joint_[a]].first;
      b = jlinks_[parent_joint_[b]].first;
    }
  }
  std::vector<int> out(joints_on_paths.begin(), joints_on_paths.end());
  std::sort(out.begin(), out.end());
  return out;
}

void forward_kinematics_into(const KinematicModel& model, const Eigen::VectorXd& theta,
                             std::vector<Eigen::Isometry3d>& world) {
  if (theta.size() != model.dof_count())
    throw Error(ErrorCode::LengthMismatch,
                "theta has " + std::to_string(theta.size()) + " entries, model has " +
                    std::to_string(model.dof_count()) + " DOFs");
  for (int j = 0; j < model.dof_count(); ++j) {
    const Joint& joint = model.joints_[j];
    if (!(theta[j] >= joint.lower_limit && theta[j] <= joint.upper_limit)) {
      std::ostringstream os;
      os << "joint '" << joint.name << "' angle " << theta[j] << " outside [" << joint.lower_limit
         << ", " << joint.upper_limit << "]";
      throw Error(ErrorCode::AngleOutOfRange, os.str());
    }
  }

  world.resize(model.link_count());
  world[model.base_link_index()] = Eigen::Isometry3d::Identity();
  for (int j : model.topo_order_) {
    const auto [parent, child] = model.jlinks_[j];
    world[child] = world[parent] * model.joints_[j].origin *
                   Eigen::AngleAxisd(theta[j], model.joints_[j].axis);
  }
}

std::vector<Eigen::Isometry3d> forward_kinematics(const KinematicModel& model,
                                                  const Eigen::VectorXd& theta) {
  std::vector<Eigen::Isometry3d> world;
  forward_kinematics_into(model, theta, world);
  return world;
}

void muscle_lengths_into(const KinematicModel& model, const std::vector<Eigen::Isometry3d>& world,
                         Eigen::VectorXd& out) {
  out.resize(model.muscle_count());
  for (int m = 0; m < model.muscle_count(); ++m) {
    double total = 0.0;
    const auto& vias = model.via_cache_[m];
    Eigen::Vector3d prev = world[vias[0].first] * vias[0].second;
    for (std::size_t v = 1; v < vias.size(); ++v) {
      Eigen::Vector3d next = world[vias[v].first] * vias[v].second;
      total += (next - prev).norm();
      prev = next;
    }
    out[m] = total;
  }
}

MuscleLengths muscle_lengths(const KinematicModel& model, const Eigen::VectorXd& theta) {
  MuscleLengths out;
  out.calibrated = false;
  std::vector<Eigen::Isometry3d> world;
  forward_kinematics_into(model, theta, world);
  muscle_lengths_into(model, world, out.values);
  return out;
}

MuscleLengths calibrate(const KinematicModel& model, const MuscleLengths& raw,
                        const Eigen::VectorXd& theta_ref) {
  if (raw.calibrated)
    throw Error(ErrorCode::DoubleCalibration, "lengths are already calibrated");
  if (raw.values.size() != model.muscle_count())
    throw Error(ErrorCode::LengthMismatch, "length vector does not match model muscle count");
  MuscleLengths out;
  out.values = raw.values - muscle_lengths(model, theta_ref).values;
  out.calibrated = true;
  return out;
}

MuscleLengths calibrate(const KinematicModel& model, const MuscleLengths& raw) {
  return calibrate(model, raw, Eigen::VectorXd::Zero(model.dof_count()));
}

Eigen::MatrixXd numeric_muscle_jacobian(const KinematicModel& model, const Eigen::VectorXd& theta,
                                        double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::DimensionMismatch, "step must be positive");
  Eigen::MatrixXd jac(model.muscle_count(), model.dof_count());
  Eigen::VectorXd probe = theta;
  for (int j = 0; j < model.dof_count(); ++j) {
    probe[j] = theta[j] + step;
    Eigen::VectorXd plus = muscle_lengths(model, probe).values;
    probe[j] = theta[j] - step;
    Eigen::VectorXd minus = muscle_lengths(model, probe).values;
    probe[j] = theta[j];
    jac.col(j) = (plus - minus) / (2.0 * step);
  }
  return jac;
}

}  // namespace tendonkit
