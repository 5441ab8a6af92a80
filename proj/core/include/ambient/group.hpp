#pragma once

#include <string>
#include <vector>

#include "ambient/matrix_ops.hpp"

namespace ambient {

/// Element of a Lie algebra, carried both as coordinates in the
/// descriptor's orthonormal basis and as the ambient n x n matrix.
struct AlgebraElement {
  Vec coords;
  Mat matrix;
};

struct MembershipResult {
  double residual = 0.0;
  bool checkable = true;
};

/**
 * A matrix Lie group given by its ambient dimension, an orthonormal basis
 * of its Lie algebra (under the trace inner product), and membership /
 * exponential routines. SO(3) and SE(3) come with closed forms; generic
 * descriptors are supported with a user-supplied basis and best-effort
 * membership checking.
 */
class GroupDescriptor {
 public:
  static GroupDescriptor so3();
  static GroupDescriptor se3();
  /// Validates orthonormality of the basis to 1e-12.
  static GroupDescriptor generic(std::string name, std::vector<Mat> basis);

  int ambient_dim() const { return n_; }
  int algebra_dim() const { return static_cast<int>(basis_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<Mat>& basis() const { return basis_; }
  bool is_so3() const { return kind_ == Kind::kSo3; }
  bool is_se3() const { return kind_ == Kind::kSe3; }

  /// Sum of coords[i] * basis[i].
  AlgebraElement from_coords(const Vec& coords) const;
  /// Element with block form [hat3(omega), v; 0, 0] (SE3) or hat3(omega) (SO3).
  AlgebraElement from_vectors(const Eigen::Vector3d& omega, const Eigen::Vector3d& v) const;

  /// Orthogonal projection onto the algebra: sum of <B_i, M> B_i.
  AlgebraElement project(const Mat& m) const;

  /// Group exponential of an algebra element (closed form for SO3/SE3).
  Mat exp(const AlgebraElement& xi) const;

  /// Distance-from-group diagnostic. For SO3/SE3 this is
  /// ||R^T R - I|| + |det R - 1| (+ bottom-row deviation for SE3); generic
  /// descriptors report 0 with checkable = false.
  MembershipResult membership_residual(const Mat& g) const;

 private:
  enum class Kind { kSo3, kSe3, kGeneric };
  GroupDescriptor(Kind kind, int n, std::string name, std::vector<Mat> basis);

  Kind kind_;
  int n_;
  std::string name_;
  std::vector<Mat> basis_;
};

/// Free-function form of GroupDescriptor::project.
AlgebraElement proj_algebra(const GroupDescriptor& desc, const Mat& m);

}  // namespace ambient
