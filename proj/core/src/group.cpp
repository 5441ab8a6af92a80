#include "ambient/group.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ambient/se3.hpp"
#include "ambient/so3.hpp"

namespace ambient {
namespace {

constexpr double kOrthonormalityTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<Mat> so3_basis() {
  std::vector<Mat> basis;
  for (int i = 0; i < 3; ++i) {
    basis.push_back(kInvSqrt2 * hat3(Eigen::Vector3d::Unit(i)));
  }
  return basis;
}

// Three rotational generators hat3(e_i)/sqrt(2) in the top-left block,
// three translational generators e_i in the top-right column.
std::vector<Mat> se3_basis() {
  std::vector<Mat> basis;
  for (int i = 0; i < 3; ++i) {
    Mat b = Mat::Zero(4, 4);
    b.topLeftCorner<3, 3>() = kInvSqrt2 * hat3(Eigen::Vector3d::Unit(i));
    basis.push_back(b);
  }
  for (int i = 0; i < 3; ++i) {
    Mat b = Mat::Zero(4, 4);
    b(i, 3) = 1.0;
    basis.push_back(b);
  }
  return basis;
}

void check_orthonormal(const std::vector<Mat>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(frob_inner(basis[i], basis[j]) - expected) > kOrthonormalityTol) {
        throw std::invalid_argument("GroupDescriptor: basis is not orthonormal");
      }
    }
  }
}

}  // namespace

GroupDescriptor::GroupDescriptor(Kind kind, int n, std::string name, std::vector<Mat> basis)
    : kind_(kind), n_(n), name_(std::move(name)), basis_(std::move(basis)) {}

GroupDescriptor GroupDescriptor::so3() {
  return GroupDescriptor(Kind::kSo3, 3, "SO3", so3_basis());
}

GroupDescriptor GroupDescriptor::se3() {
  return GroupDescriptor(Kind::kSe3, 4, "SE3", se3_basis());
}

GroupDescriptor GroupDescriptor::generic(std::string name, std::vector<Mat> basis) {
  if (basis.empty()) throw std::invalid_argument("GroupDescriptor: empty basis");
  const auto n = basis.front().rows();
  for (const Mat& b : basis) {
    if (b.rows() != n || b.cols() != n) {
      throw std::invalid_argument("GroupDescriptor: basis dimensions disagree");
    }
  }
  check_orthonormal(basis);
  return GroupDescriptor(Kind::kGeneric, static_cast<int>(n), std::move(name), std::move(basis));
}

AlgebraElement GroupDescriptor::from_coords(const Vec& coords) const {
  if (coords.size() != algebra_dim()) {
    throw std::invalid_argument("from_coords: expected " + std::to_string(algebra_dim()) +
                                " coordinates");
  }
  Mat m = Mat::Zero(n_, n_);
  for (int i = 0; i < algebra_dim(); ++i) m += coords(i) * basis_[i];
  return {coords, std::move(m)};
}

AlgebraElement GroupDescriptor::from_vectors(const Eigen::Vector3d& omega,
                                             const Eigen::Vector3d& v) const {
  Vec coords(algebra_dim());
  switch (kind_) {
    case Kind::kSo3:
      coords = std::sqrt(2.0) * omega;
      return {coords, hat3(omega)};
    case Kind::kSe3:
      coords.head<3>() = std::sqrt(2.0) * omega;
      coords.tail<3>() = v;
      return {coords, hat_se3(omega, v)};
    case Kind::kGeneric:
      throw std::invalid_argument("from_vectors: only defined for SO3/SE3 descriptors");
  }
  throw std::logic_error("unreachable");
}

AlgebraElement GroupDescriptor::project(const Mat& m) const {
  if (m.rows() != n_ || m.cols() != n_) {
    throw std::invalid_argument("project: dimension mismatch with descriptor");
  }
  Vec coords(algebra_dim());
  Mat out = Mat::Zero(n_, n_);
  for (int i = 0; i < algebra_dim(); ++i) {
    coords(i) = frob_inner(basis_[i], m);
    out += coords(i) * basis_[i];
  }
  return {std::move(coords), std::move(out)};
}

Mat GroupDescriptor::exp(const AlgebraElement& xi) const {
  switch (kind_) {
    case Kind::kSo3:
      return exp_so3(vee3(xi.matrix));
    case Kind::kSe3: {
      const auto [omega, v] = vee_se3(xi.matrix);
      return exp_se3(omega, v);
    }
    case Kind::kGeneric:
      return exp_generic(xi.matrix);
  }
  throw std::logic_error("unreachable");
}

MembershipResult GroupDescriptor::membership_residual(const Mat& g) const {
  if (g.rows() != n_ || g.cols() != n_) {
    throw std::invalid_argument("membership_residual: dimension mismatch");
  }
  if (kind_ == Kind::kGeneric) return {0.0, false};

  const int rdim = (kind_ == Kind::kSo3) ? 3 : 3;
  const Mat r = g.topLeftCorner(rdim, rdim);
  double residual = (r.transpose() * r - Mat::Identity(rdim, rdim)).norm() +
                    std::abs(r.determinant() - 1.0);
  if (kind_ == Kind::kSe3) {
    Eigen::RowVector4d bottom(0.0, 0.0, 0.0, 1.0);
    residual += (g.bottomRows<1>() - bottom).norm();
  }
  return {residual, true};
}

AlgebraElement proj_algebra(const GroupDescriptor& desc, const Mat& m) {
  return desc.project(m);
}

}  // namespace ambient
