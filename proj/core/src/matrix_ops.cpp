#include "ambient/matrix_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace ambient {

double frob_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frob_inner: dimension mismatch");
  }
  return a.cwiseProduct(b).sum();
}

double frob_norm(const Mat& a) { return a.norm(); }

Mat exp_generic(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("exp_generic: matrix must be square");
  }
  // Scale so the series argument has norm <= 0.5, then square back.
  int squarings = 0;
  double norm = m.norm();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const Mat scaled = m / std::ldexp(1.0, squarings);

  const auto n = m.rows();
  Mat sum = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * scaled / static_cast<double>(k)).eval();
    sum += term;
    if (term.norm() <= 1e-15 * std::max(1.0, sum.norm())) break;
  }
  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
  return sum;
}

std::pair<double, double> singular_value_extremes(const Mat& g) {
  Eigen::SelfAdjointEigenSolver<Mat> es(g.transpose() * g);
  const Vec ev = es.eigenvalues();  // ascending
  const double lo = std::sqrt(std::max(0.0, ev(0)));
  const double hi = std::sqrt(std::max(0.0, ev(ev.size() - 1)));
  return {lo, hi};
}

}  // namespace ambient
