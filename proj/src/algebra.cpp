#include "carnot/algebra.hpp"

#include <Eigen/QR>

#include <cmath>

namespace carnot {

namespace {

void check_point(const StepTwoAlgebra& A, const GroupPoint& p, const char* who) {
  if (p.x.size() != A.rank() || p.ystar.size() != A.vertical_dim())
    throw std::invalid_argument(std::string(who) + ": point dimensions do not match the algebra");
  if (!p.x.allFinite() || !p.ystar.allFinite())
    throw std::invalid_argument(std::string(who) + ": point has non-finite entries");
}

}  // namespace

StepTwoAlgebra::StepTwoAlgebra(int m, std::vector<Mat> structure_matrices)
    : m_(m), h_(static_cast<int>(structure_matrices.size())), B_(std::move(structure_matrices)) {
  if (m_ < 2) throw std::invalid_argument("StepTwoAlgebra: rank must be at least 2");
  const int max_h = m_ * (m_ - 1) / 2;
  if (h_ < 1 || h_ > max_h)
    throw std::invalid_argument("StepTwoAlgebra: vertical dimension must lie in [1, m(m-1)/2]");
  for (const Mat& B : B_) {
    if (B.rows() != m_ || B.cols() != m_)
      throw std::invalid_argument("StepTwoAlgebra: structure matrix is not m x m");
    if ((B + B.transpose()).cwiseAbs().maxCoeff() != 0.0)
      throw std::invalid_argument("StepTwoAlgebra: structure matrix is not skew-symmetric");
  }
  // Linear independence of the flattened stack, rank test at 1e-10.
  Mat stack(h_, m_ * m_);
  for (int i = 0; i < h_; ++i)
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) stack(i, r * m_ + c) = B_[i](r, c);
  Eigen::ColPivHouseholderQR<Mat> qr(stack.transpose());
  qr.setThreshold(1e-10);
  if (qr.rank() < h_)
    throw std::invalid_argument("StepTwoAlgebra: structure matrices are linearly dependent");
}

GroupPoint StepTwoAlgebra::identity() const {
  return {Vec::Zero(m_), Vec::Zero(h_)};
}

GroupPoint StepTwoAlgebra::point(Vec x, Vec ystar) const {
  GroupPoint p{std::move(x), std::move(ystar)};
  check_point(*this, p, "StepTwoAlgebra::point");
  return p;
}

nlohmann::json StepTwoAlgebra::to_json() const {
  nlohmann::json bj = nlohmann::json::array();
  for (const Mat& B : B_) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) rows.push_back(B(r, c));
    bj.push_back(rows);
  }
  return {{"m", m_}, {"h", h_}, {"B", bj}};
}

StepTwoAlgebra StepTwoAlgebra::from_json(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  const int h = j.at("h").get<int>();
  const auto& bj = j.at("B");
  if (static_cast<int>(bj.size()) != h)
    throw std::invalid_argument("StepTwoAlgebra::from_json: B has wrong length");
  std::vector<Mat> mats;
  mats.reserve(h);
  for (const auto& rows : bj) {
    if (static_cast<int>(rows.size()) != m * m)
      throw std::invalid_argument("StepTwoAlgebra::from_json: structure matrix has wrong size");
    Mat B(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) B(r, c) = rows[r * m + c].get<double>();
    mats.push_back(std::move(B));
  }
  return StepTwoAlgebra(m, std::move(mats));
}

StepTwoAlgebra StepTwoAlgebra::heisenberg() {
  Mat B(2, 2);
  B << 0, 1, -1, 0;
  return StepTwoAlgebra(2, {B});
}

StepTwoAlgebra StepTwoAlgebra::rank3_dim5() {
  Mat B1(3, 3), B2(3, 3);
  B1 << 0, 1, 1, -1, 0, 0, -1, 0, 0;
  B2 << 0, 1, -1, -1, 0, 0, 1, 0, 0;
  return StepTwoAlgebra(3, {B1, B2});
}

StepTwoAlgebra StepTwoAlgebra::free_step_two(int m) {
  std::vector<Mat> mats;
  for (int l = 2; l <= m; ++l)
    for (int s = 1; s < l; ++s) {
      Mat B = Mat::Zero(m, m);
      B(l - 1, s - 1) = 1.0;
      B(s - 1, l - 1) = -1.0;
      mats.push_back(std::move(B));
    }
  return StepTwoAlgebra(m, std::move(mats));
}

GroupPoint group_mul(const StepTwoAlgebra& A, const GroupPoint& p, const GroupPoint& q) {
  check_point(A, p, "group_mul");
  check_point(A, q, "group_mul");
  GroupPoint out;
  out.x = p.x + q.x;
  out.ystar = p.ystar + q.ystar;
  for (int i = 1; i <= A.vertical_dim(); ++i)
    out.ystar[i - 1] -= 0.5 * (A.structure_matrix(i) * p.x).dot(q.x);
  return out;
}

GroupPoint group_inv(const StepTwoAlgebra& A, const GroupPoint& p) {
  check_point(A, p, "group_inv");
  return {-p.x, -p.ystar};
}

GroupPoint dilate(const StepTwoAlgebra& A, double lambda, const GroupPoint& p) {
  check_point(A, p, "dilate");
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
  return {lambda * p.x, lambda * lambda * p.ystar};
}

double hom_norm(const StepTwoAlgebra& A, const GroupPoint& p) {
  check_point(A, p, "hom_norm");
  return std::max(p.x.norm(), std::sqrt(p.ystar.norm()));
}

Mat left_invariant_frame(const StepTwoAlgebra& A, const GroupPoint& p) {
  check_point(A, p, "left_invariant_frame");
  const int m = A.rank(), h = A.vertical_dim();
  Mat frame = Mat::Zero(m + h, m + h);
  for (int j = 1; j <= m; ++j) {
    frame(j - 1, j - 1) = 1.0;
    for (int i = 1; i <= h; ++i) {
      double coef = 0.0;
      for (int l = 1; l <= m; ++l) coef += A.b(i, j, l) * p.x[l - 1];
      frame(j - 1, m + i - 1) = -0.5 * coef;
    }
  }
  for (int i = 1; i <= h; ++i) frame(m + i - 1, m + i - 1) = 1.0;
  return frame;
}

}  // namespace carnot
