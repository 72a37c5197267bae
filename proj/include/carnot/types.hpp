#ifndef CARNOT_TYPES_HPP
#define CARNOT_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace carnot {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Thrown when a field or map is evaluated outside its domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axis-aligned box, the domain type for every field in the library.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size()) throw std::invalid_argument("Box: lo/hi size mismatch");
    for (int a = 0; a < lo.size(); ++a)
      if (!(lo[a] < hi[a])) throw std::invalid_argument("Box: empty interval on axis " + std::to_string(a));
  }

  static Box cube(int dim, double a, double b) {
    return Box(Vec::Constant(dim, a), Vec::Constant(dim, b));
  }

  int dim() const { return static_cast<int>(lo.size()); }

  bool contains(const Vec& p, double tol = 0.0) const {
    if (p.size() != lo.size()) return false;
    for (int a = 0; a < lo.size(); ++a)
      if (p[a] < lo[a] - tol || p[a] > hi[a] + tol) return false;
    return true;
  }

  Vec center() const { return 0.5 * (lo + hi); }
  Vec widths() const { return hi - lo; }

  /// Box shrunk toward its center by `factor` in every axis (factor in (0,1]).
  Box shrunk(double factor) const {
    Vec c = center(), w = 0.5 * factor * widths();
    return Box(c - w, c + w);
  }
};

/// Deterministic uniform sampler. mt19937_64's stream is pinned by the
/// standard and the double mapping avoids std::uniform_real_distribution,
/// whose output is implementation-defined; reports built from the same seed
/// are byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  int uniform_int(int n) {  // in [0, n)
    return static_cast<int>(static_cast<std::uint64_t>(n) * unit());
  }

  Vec point_in(const Box& box) {
    Vec p(box.dim());
    for (int a = 0; a < box.dim(); ++a) p[a] = uniform(box.lo[a], box.hi[a]);
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace carnot

#endif
