#include "carnot/free.hpp"

#include <Eigen/QR>

#include <fstream>

namespace carnot {

int pair_pos(int ell, int s, int m) {
  if (!(1 <= s && s < ell && ell <= m))
    throw std::invalid_argument("pair_pos: need 1 <= s < ell <= m");
  return (ell - 2) * (ell - 1) / 2 + (s - 1);
}

PairIndex pair_at(int pos, int m) {
  if (pos < 0 || pos >= pair_count(m)) throw std::invalid_argument("pair_at: position out of range");
  int ell = 2;
  while ((ell - 1) * ell / 2 <= pos) ++ell;
  const int s = pos - (ell - 2) * (ell - 1) / 2 + 1;
  return {ell, s};
}

namespace {

void check_free(const FreePoint& p, const char* who) {
  const int m = p.rank();
  if (m < 2 || p.y.size() != pair_count(m))
    throw std::invalid_argument(std::string(who) + ": inconsistent free point dimensions");
}

void check_ranks(const FreePoint& p, const FreePoint& q, const char* who) {
  check_free(p, who);
  check_free(q, who);
  if (p.rank() != q.rank()) throw std::invalid_argument(std::string(who) + ": rank mismatch");
}

}  // namespace

nlohmann::json FreePoint::to_json() const {
  const int m = rank();
  nlohmann::json yj = nlohmann::json::object();
  for (int k = 0; k < pair_count(m); ++k) {
    const PairIndex pi = pair_at(k, m);
    yj["(" + std::to_string(pi.ell) + "," + std::to_string(pi.s) + ")"] = y[k];
  }
  nlohmann::json xj = nlohmann::json::array();
  for (int j = 0; j < m; ++j) xj.push_back(x[j]);
  return {{"x", xj}, {"y", yj}};
}

FreePoint FreePoint::from_json(const nlohmann::json& j) {
  const auto& xj = j.at("x");
  const int m = static_cast<int>(xj.size());
  FreePoint p{Vec(m), Vec::Zero(pair_count(m))};
  for (int k = 0; k < m; ++k) p.x[k] = xj[k].get<double>();
  for (const auto& [key, val] : j.at("y").items()) {
    int ell = 0, s = 0;
    if (std::sscanf(key.c_str(), "(%d,%d)", &ell, &s) != 2)
      throw std::invalid_argument("FreePoint::from_json: bad pair key " + key);
    p.y[pair_pos(ell, s, m)] = val.get<double>();
  }
  return p;
}

FreePoint free_identity(int m) {
  return {Vec::Zero(m), Vec::Zero(pair_count(m))};
}

FreePoint free_mul(const FreePoint& p, const FreePoint& q) {
  check_ranks(p, q, "free_mul");
  const int m = p.rank();
  FreePoint out{p.x + q.x, p.y + q.y};
  for (int ell = 2; ell <= m; ++ell)
    for (int s = 1; s < ell; ++s)
      out.y[pair_pos(ell, s, m)] += 0.5 * (p.x[ell - 1] * q.x[s - 1] - q.x[ell - 1] * p.x[s - 1]);
  return out;
}

FreePoint free_inv(const FreePoint& p) {
  check_free(p, "free_inv");
  return {-p.x, -p.y};
}

FreePoint free_dilate(double lambda, const FreePoint& p) {
  check_free(p, "free_dilate");
  if (!(lambda > 0.0)) throw std::invalid_argument("free_dilate: lambda must be positive");
  return {lambda * p.x, lambda * lambda * p.y};
}

Mat free_frame(int m, const FreePoint& p) {
  check_free(p, "free_frame");
  if (p.rank() != m) throw std::invalid_argument("free_frame: rank mismatch");
  const int n = m + pair_count(m);
  Mat frame = Mat::Zero(n, n);
  for (int j = 1; j <= m; ++j) {
    frame(j - 1, j - 1) = 1.0;
    for (int ell = j + 1; ell <= m; ++ell)
      frame(j - 1, m + pair_pos(ell, j, m)) = 0.5 * p.x[ell - 1];
    for (int s = 1; s < j; ++s)
      frame(j - 1, m + pair_pos(j, s, m)) = -0.5 * p.x[s - 1];
  }
  for (int k = 0; k < pair_count(m); ++k) frame(m + k, m + k) = 1.0;
  return frame;
}

GroupPoint project_pi(const StepTwoAlgebra& A, const FreePoint& p) {
  check_free(p, "project_pi");
  const int m = A.rank();
  if (p.rank() != m) throw std::invalid_argument("project_pi: rank mismatch");
  Vec ystar = Vec::Zero(A.vertical_dim());
  for (int i = 1; i <= A.vertical_dim(); ++i)
    for (int ell = 2; ell <= m; ++ell)
      for (int s = 1; s < ell; ++s) ystar[i - 1] += A.b(i, ell, s) * p.y[pair_pos(ell, s, m)];
  return {p.x, std::move(ystar)};
}

Mat complete_matrix_M(const StepTwoAlgebra& A) {
  const int m = A.rank(), h = A.vertical_dim();
  const int np = pair_count(m);
  const int order = (m - 1) + np;

  Mat brows(h, np);
  for (int i = 1; i <= h; ++i)
    for (int ell = 2; ell <= m; ++ell)
      for (int s = 1; s < ell; ++s) brows(i - 1, pair_pos(ell, s, m)) = A.b(i, ell, s);

  Mat M = Mat::Zero(order, order);
  M.topLeftCorner(m - 1, m - 1).setIdentity();
  M.block(m - 1, m - 1, h, np) = brows;

  if (np > h) {
    // Orthonormal completion of the b-row span: the trailing columns of the
    // Householder Q of brows^T span its orthogonal complement.
    Eigen::ColPivHouseholderQR<Mat> qr(brows.transpose());
    if (qr.rank() < h) throw std::invalid_argument("complete_matrix_M: degenerate structure rows");
    Mat Q = qr.householderQ();
    M.block(m - 1 + h, m - 1, np - h, np) = Q.rightCols(np - h).transpose();
  }

  const double det = M.partialPivLu().determinant();
  if (std::abs(det) <= 1e-8)
    throw std::invalid_argument("complete_matrix_M: completion failed, matrix is singular");
  return M;
}

void write_matrix_csv(const Mat& M, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_matrix_csv: cannot open " + path);
  out.precision(17);
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      if (c) out << ',';
      out << M(r, c);
    }
    out << '\n';
  }
}

}  // namespace carnot
