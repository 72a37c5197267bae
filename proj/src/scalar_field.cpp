#include "carnot/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace carnot {

struct ScalarField::GridData {
  std::vector<int> shape;       // nodes per axis, >= 2
  std::vector<double> values;   // row-major, last axis fastest
  Interp interp;

  std::size_t index(const std::vector<int>& idx) const {
    std::size_t pos = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) pos = pos * shape[a] + idx[a];
    return pos;
  }
};

namespace {

double catmull_rom(double pm1, double p0, double p1, double p2, double t) {
  return p0 + 0.5 * t * (p1 - pm1 + t * (2.0 * pm1 - 5.0 * p0 + 4.0 * p1 - p2 + t * (3.0 * (p0 - p1) + p2 - pm1)));
}

}  // namespace

ScalarField ScalarField::closed_form(Box domain, std::function<double(const Vec&)> f,
                                     std::optional<std::vector<int>> deps) {
  ScalarField out;
  out.domain_ = std::move(domain);
  out.eval_ = std::move(f);
  if (deps) {
    for (int a : *deps)
      if (a < 0 || a >= out.domain_.dim())
        throw std::invalid_argument("ScalarField::closed_form: dependence axis out of range");
    std::sort(deps->begin(), deps->end());
    deps->erase(std::unique(deps->begin(), deps->end()), deps->end());
  }
  out.deps_ = std::move(deps);
  return out;
}

ScalarField ScalarField::constant(Box domain, double c) {
  return closed_form(std::move(domain), [c](const Vec&) { return c; }, std::vector<int>{});
}

ScalarField ScalarField::coordinate(Box domain, int axis) {
  if (axis < 0 || axis >= domain.dim())
    throw std::invalid_argument("ScalarField::coordinate: axis out of range");
  return closed_form(std::move(domain), [axis](const Vec& w) { return w[axis]; },
                     std::vector<int>{axis});
}

ScalarField ScalarField::from_grid(Box domain, std::vector<int> shape, std::vector<double> values,
                                   Interp interp) {
  if (static_cast<int>(shape.size()) != domain.dim())
    throw std::invalid_argument("ScalarField::from_grid: shape/domain dimension mismatch");
  std::size_t total = 1;
  for (int n : shape) {
    if (n < 2) throw std::invalid_argument("ScalarField::from_grid: need at least 2 nodes per axis");
    total *= static_cast<std::size_t>(n);
  }
  if (values.size() != total)
    throw std::invalid_argument("ScalarField::from_grid: value count does not match the shape");
  ScalarField out;
  out.domain_ = std::move(domain);
  auto grid = std::make_shared<GridData>();
  grid->shape = std::move(shape);
  grid->values = std::move(values);
  grid->interp = interp;
  out.grid_ = std::move(grid);
  return out;
}

ScalarField ScalarField::from_csv(const std::string& path, Interp interp) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ScalarField::from_csv: cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("ScalarField::from_csv: empty file");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  if (header.size() < 2 || header.back() != "value")
    throw std::runtime_error("ScalarField::from_csv: header must name coordinates then 'value'");
  const int d = static_cast<int>(header.size()) - 1;

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (static_cast<int>(row.size()) != d + 1)
      throw std::runtime_error("ScalarField::from_csv: ragged row in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("ScalarField::from_csv: no samples");

  // Infer per-axis node sets, then place rows by coordinate so row order
  // does not matter.
  std::vector<std::vector<double>> axes(d);
  for (int a = 0; a < d; ++a) {
    std::vector<double> vals;
    vals.reserve(rows.size());
    for (const auto& row : rows) vals.push_back(row[a]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() < 2)
      throw std::runtime_error("ScalarField::from_csv: axis " + header[a] + " has fewer than 2 nodes");
    const double step = (vals.back() - vals.front()) / static_cast<double>(vals.size() - 1);
    for (std::size_t k = 0; k < vals.size(); ++k)
      if (std::abs(vals[k] - (vals.front() + step * static_cast<double>(k))) > 1e-9 * std::max(1.0, std::abs(step)))
        throw std::runtime_error("ScalarField::from_csv: axis " + header[a] + " is not uniform");
    axes[a] = std::move(vals);
  }

  std::vector<int> shape(d);
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) {
    shape[a] = static_cast<int>(axes[a].size());
    total *= axes[a].size();
  }
  if (rows.size() != total)
    throw std::runtime_error("ScalarField::from_csv: sample count does not fill the lattice");

  std::vector<double> values(total, std::nan(""));
  for (const auto& row : rows) {
    std::size_t pos = 0;
    for (int a = 0; a < d; ++a) {
      const double step = (axes[a].back() - axes[a].front()) / static_cast<double>(shape[a] - 1);
      const long k = std::lround((row[a] - axes[a].front()) / step);
      pos = pos * shape[a] + static_cast<std::size_t>(k);
    }
    values[pos] = row[d];
  }
  for (double v : values)
    if (std::isnan(v)) throw std::runtime_error("ScalarField::from_csv: duplicate or missing lattice rows");

  Vec lo(d), hi(d);
  for (int a = 0; a < d; ++a) {
    lo[a] = axes[a].front();
    hi[a] = axes[a].back();
  }
  return from_grid(Box(lo, hi), std::move(shape), std::move(values), interp);
}

bool ScalarField::depends_on(int axis) const {
  if (!deps_) return true;
  return std::binary_search(deps_->begin(), deps_->end(), axis);
}

double ScalarField::operator()(const Vec& w) const {
  if (!eval_ && !grid_) throw std::logic_error("ScalarField: evaluating an empty field");
  if (w.size() != domain_.dim())
    throw std::invalid_argument("ScalarField: evaluation point has wrong dimension");
  if (!domain_.contains(w, 1e-12))
    throw DomainError("ScalarField: evaluation outside domain");
  if (!grid_) return eval_(w);

  const GridData& g = *grid_;
  const int d = domain_.dim();

  // Per-axis cell index and fraction.
  std::vector<int> cell(d);
  std::vector<double> frac(d);
  for (int a = 0; a < d; ++a) {
    const double step = (domain_.hi[a] - domain_.lo[a]) / static_cast<double>(g.shape[a] - 1);
    double u = (w[a] - domain_.lo[a]) / step;
    int c = static_cast<int>(std::floor(u));
    c = std::clamp(c, 0, g.shape[a] - 2);
    cell[a] = c;
    frac[a] = u - c;
  }

  if (g.interp == Interp::Multilinear) {
    double acc = 0.0;
    std::vector<int> idx(d);
    for (int corner = 0; corner < (1 << d); ++corner) {
      double wgt = 1.0;
      for (int a = 0; a < d; ++a) {
        const int bit = (corner >> a) & 1;
        idx[a] = cell[a] + bit;
        wgt *= bit ? frac[a] : 1.0 - frac[a];
      }
      if (wgt != 0.0) acc += wgt * g.values[g.index(idx)];
    }
    return acc;
  }

  // Tensor Catmull-Rom with clamped edge stencils.
  std::function<double(int, std::vector<int>&)> rec = [&](int a, std::vector<int>& idx) -> double {
    if (a == d) return g.values[g.index(idx)];
    double p[4];
    for (int k = -1; k <= 2; ++k) {
      idx[a] = std::clamp(cell[a] + k, 0, g.shape[a] - 1);
      p[k + 1] = rec(a + 1, idx);
    }
    return catmull_rom(p[0], p[1], p[2], p[3], frac[a]);
  };
  std::vector<int> idx(d);
  return rec(0, idx);
}

double ScalarField::sup_abs(int per_axis) const {
  if (grid_) {
    double m = 0.0;
    for (double v : grid_->values) m = std::max(m, std::abs(v));
    return m;
  }
  const int d = domain_.dim();
  if (per_axis <= 0) {
    per_axis = std::max(5, static_cast<int>(std::floor(std::pow(1e5, 1.0 / d))));
  }
  double m = 0.0;
  std::vector<int> idx(d, 0);
  Vec w(d);
  while (true) {
    for (int a = 0; a < d; ++a)
      w[a] = domain_.lo[a] + (domain_.hi[a] - domain_.lo[a]) * (idx[a] + 0.5) / per_axis;
    m = std::max(m, std::abs((*this)(w)));
    int a = d - 1;
    while (a >= 0 && ++idx[a] == per_axis) idx[a--] = 0;
    if (a < 0) break;
  }
  return m;
}

}  // namespace carnot
