#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <string>
#include <vector>

#include "tendonkit/error.hpp"

namespace tendonkit {

/// Single-axis revolute joint connecting two links of the tree.
struct Joint {
  std::string name;
  std::string parent_link;
  std::string child_link;
  Eigen::Vector3d axis;       // unit vector in the joint frame
  Eigen::Isometry3d origin;   // fixed transform parent link -> joint frame
  double lower_limit = 0.0;   // rad
  double upper_limit = 0.0;   // rad
};

struct ViaPoint {
  std::string link;
  Eigen::Vector3d position;  // meters, in the link frame
};

/// A muscle routed as straight segments through ordered via points.
/// First entry is the start point, last the end point, the rest relays.
struct Muscle {
  std::string name;
  std::vector<ViaPoint> via_points;
};

struct MuscleLengths {
  Eigen::VectorXd values;   // meters, model muscle order
  bool calibrated = false;  // true once the reference-posture length is subtracted
};

/// Immutable joint/link tree plus muscle routings. Joint order defines the
/// canonical index of every angle vector, muscle order that of every length
/// vector. All member queries and the free functions below are safe for
/// concurrent callers.
class KinematicModel {
 public:
  static KinematicModel create(std::vector<std::string> links, std::vector<Joint> joints,
                               std::vector<Muscle> muscles);

  const std::vector<std::string>& links() const { return links_; }
  const std::vector<Joint>& joints() const { return joints_; }
  const std::vector<Muscle>& muscles() const { return muscles_; }

  int dof_count() const { return static_cast<int>(joints_.size()); }
  int muscle_count() const { return static_cast<int>(muscles_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::string& base_link() const { return links_[base_link_]; }
  int base_link_index() const { return base_link_; }

  int link_index(const std::string& name) const;    // -1 if absent
  int joint_index(const std::string& name) const;   // -1 if absent
  int muscle_index(const std::string& name) const;  // -1 if absent

  /// Indices of the joints whose motion can change the muscle's length:
  /// the union of tree paths between consecutive via-point links.
  std::vector<int> spanned_joints(int muscle) const;

  /// Joint whose child frame this link is, -1 for the base link.
  int parent_joint_of_link(int link) const { return parent_joint_[link]; }

  /// Joint indices in an order where parents precede children.
  const std::vector<int>& joint_topological_order() const { return topo_order_; }

 private:
  KinematicModel() = default;

  std::vector<std::string> links_;
  std::vector<Joint> joints_;
  std::vector<Muscle> muscles_;

  int base_link_ = -1;
  std::vector<int> parent_joint_;             // per link, -1 for base
  std::vector<int> topo_order_;               // joint indices
  std::vector<std::pair<int, int>> jlinks_;   // per joint: (parent link, child link)
  std::vector<std::vector<std::pair<int, Eigen::Vector3d>>> via_cache_;  // per muscle: (link, pos)

  friend std::vector<Eigen::Isometry3d> forward_kinematics(const KinematicModel&,
                                                           const Eigen::VectorXd&);
  friend void forward_kinematics_into(const KinematicModel&, const Eigen::VectorXd&,
                                      std::vector<Eigen::Isometry3d>&);
  friend void muscle_lengths_into(const KinematicModel&, const std::vector<Eigen::Isometry3d>&,
                                  Eigen::VectorXd&);
};

/// World transform of every link (model link order) at pose theta.
/// Out-of-limit angles are an error, never clamped.
std::vector<Eigen::Isometry3d> forward_kinematics(const KinematicModel& model,
                                                  const Eigen::VectorXd& theta);

/// Allocation-free variant for sampling loops.
void forward_kinematics_into(const KinematicModel& model, const Eigen::VectorXd& theta,
                             std::vector<Eigen::Isometry3d>& world);

/// Raw muscle lengths: sum of Euclidean distances between consecutive
/// via points expressed in the world frame at pose theta.
MuscleLengths muscle_lengths(const KinematicModel& model, const Eigen::VectorXd& theta);

void muscle_lengths_into(const KinematicModel& model, const std::vector<Eigen::Isometry3d>& world,
                         Eigen::VectorXd& out);

/// Subtracts the reference-posture raw lengths (default: all joints at zero).
MuscleLengths calibrate(const KinematicModel& model, const MuscleLengths& raw);
MuscleLengths calibrate(const KinematicModel& model, const MuscleLengths& raw,
                        const Eigen::VectorXd& theta_ref);

/// Central-difference muscle Jacobian, column j = (l(theta + h e_j) - l(theta - h e_j)) / 2h.
/// Test oracle for analytic Jacobians; theta +- step must stay inside limits.
Eigen::MatrixXd numeric_muscle_jacobian(const KinematicModel& model, const Eigen::VectorXd& theta,
                                        double step);

}  // namespace tendonkit
