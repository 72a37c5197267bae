#ifndef CARNOT_SCALAR_FIELD_HPP
#define CARNOT_SCALAR_FIELD_HPP

#include "carnot/types.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace carnot {

enum class Interp { Multilinear, Cubic };

/// Evaluable continuous scalar function on an axis-aligned box, either a
/// closed-form callback or a uniform grid of samples with interpolation.
/// Evaluation outside the box throws DomainError; fields never extrapolate.
///
/// Closed forms may declare which axes they actually depend on; the
/// quadrature engine uses that to factor tensor sums. Copies are cheap
/// (shared payload) and evaluation is const and thread-safe.
class ScalarField {
 public:
  ScalarField() = default;  // empty; evaluation throws until assigned

  static ScalarField closed_form(Box domain, std::function<double(const Vec&)> f,
                                 std::optional<std::vector<int>> deps = std::nullopt);
  static ScalarField constant(Box domain, double c);
  /// Field returning the given W-coordinate (0-based axis).
  static ScalarField coordinate(Box domain, int axis);
  static ScalarField from_grid(Box domain, std::vector<int> shape, std::vector<double> values,
                               Interp interp = Interp::Multilinear);
  /// CSV with a header row naming the coordinate columns plus a final
  /// "value" column, one sample per row, enumerating a full uniform lattice.
  static ScalarField from_csv(const std::string& path, Interp interp = Interp::Multilinear);

  double operator()(const Vec& w) const;

  const Box& domain() const { return domain_; }
  int dim() const { return domain_.dim(); }
  bool is_grid() const { return grid_ != nullptr; }

  /// Axis-dependence mask; nullopt means "assume all axes".
  const std::optional<std::vector<int>>& deps() const { return deps_; }
  bool depends_on(int axis) const;

  /// Estimate of sup |f| over the domain: exact sample max for grids, a
  /// uniform scan for closed forms (an under-estimate on coarse scans).
  double sup_abs(int per_axis = 0) const;

 private:
  struct GridData;

  Box domain_;
  std::function<double(const Vec&)> eval_;
  std::shared_ptr<const GridData> grid_;
  std::optional<std::vector<int>> deps_;
};

/// One ScalarField per horizontal equation index j = 2..m, in that order.
using VectorField = std::vector<ScalarField>;

}  // namespace carnot

#endif
