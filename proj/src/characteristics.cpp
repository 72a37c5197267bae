#include "carnot/characteristics.hpp"

#include "carnot/free.hpp"
#include "carnot/graphs.hpp"

#include <cmath>
#include <fstream>
#include <functional>

namespace carnot {

namespace {

struct DirectionResult {
  std::vector<Vec> states;  // states after 1..n steps
  bool exited = false;
  int good_steps = 0;
};

// One direction of fixed-step RK4. time_slot advances exactly as t; a
// DomainError in any stage truncates the march and flags the exit.
DirectionResult rk4_march(const std::function<Vec(const Vec&)>& vel, const Vec& a, double h,
                          int nsteps, int time_slot, double sign) {
  DirectionResult out;
  out.states.reserve(nsteps);
  Vec w = a;
  const double t0 = a[time_slot];
  for (int k = 0; k < nsteps; ++k) {
    try {
      const Vec k1 = vel(w);
      const Vec k2 = vel(w + 0.5 * h * sign * k1);
      const Vec k3 = vel(w + 0.5 * h * sign * k2);
      const Vec k4 = vel(w + h * sign * k3);
      w += (h * sign / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const DomainError&) {
      out.exited = true;
      break;
    }
    w[time_slot] = t0 + sign * h * (k + 1);
    out.states.push_back(w);
    out.good_steps = k + 1;
  }
  return out;
}

Characteristic assemble(int j, const Vec& a, double T, double h_step, int time_slot,
                        const std::function<Vec(const Vec&)>& vel) {
  if (!(T > 0.0) || !(h_step > 0.0))
    throw std::invalid_argument("integrate: horizon and step must be positive");
  const int n = std::max(1, static_cast<int>(std::lround(T / h_step)));
  const double h = T / n;

  const DirectionResult fwd = rk4_march(vel, a, h, n, time_slot, +1.0);
  const DirectionResult bwd = rk4_march(vel, a, h, n, time_slot, -1.0);

  Characteristic c;
  c.j = j;
  c.base = a;
  c.h_step = h;
  c.exited = fwd.exited || bwd.exited;
  c.exit_time = fwd.exited ? h * fwd.good_steps : (bwd.exited ? -h * bwd.good_steps : 0.0);

  c.base_index = bwd.states.size();
  c.times.reserve(bwd.states.size() + 1 + fwd.states.size());
  c.states.reserve(bwd.states.size() + 1 + fwd.states.size());
  for (std::size_t k = bwd.states.size(); k-- > 0;) {
    c.times.push_back(-h * static_cast<double>(k + 1));
    c.states.push_back(bwd.states[k]);
  }
  c.times.push_back(0.0);
  c.states.push_back(a);
  for (std::size_t k = 0; k < fwd.states.size(); ++k) {
    c.times.push_back(h * static_cast<double>(k + 1));
    c.states.push_back(fwd.states[k]);
  }
  return c;
}

}  // namespace

Characteristic integrate(const ProjectedFieldG& F, const Vec& a, double T, double h_step) {
  if (a.size() != F.algebra.w_dim()) throw std::invalid_argument("integrate: base not on W");
  return assemble(F.j, a, T, h_step, w_axis_x(F.j),
                  [&F](const Vec& w) { return eval_D_G(F, w); });
}

Characteristic integrate(const ProjectedFieldF& F, const Vec& a, double T, double h_step) {
  if (a.size() != (F.m - 1) + pair_count(F.m))
    throw std::invalid_argument("integrate: base not on the free W");
  return assemble(F.j, a, T, h_step, w_axis_x(F.j),
                  [&F](const Vec& w) { return eval_D_F(F, w); });
}

Characteristic integrate(const EngelField& F, const Vec& a, double T, double h_step) {
  if (a.size() != 3) throw std::invalid_argument("integrate: base not on the Engel W");
  const int j = F.which == EngelGenerator::X2 ? 2 : 3;
  return assemble(j, a, T, h_step, j - 2,
                  [&F](const Vec& w) { return eval_D_engel(F, w); });
}

Characteristic translate_curve(const StepTwoAlgebra& A, const Characteristic& gamma,
                               const GroupPoint& q) {
  Characteristic out = gamma;
  for (Vec& w : out.states) w = P_q(A, q, w);
  out.base = out.states.at(out.base_index);
  return out;
}

Characteristic project_curve(const StepTwoAlgebra& A, const Characteristic& free_curve) {
  Characteristic out = free_curve;
  for (Vec& w : out.states) w = project_w(A, w);
  out.base = out.states.at(out.base_index);
  return out;
}

std::vector<double> integrate_along(const Characteristic& gamma, const ScalarField& g) {
  const std::size_t n = gamma.size();
  std::vector<double> gv(n);
  for (std::size_t k = 0; k < n; ++k) gv[k] = g(gamma.states[k]);

  const double h = gamma.h_step;
  std::vector<double> cum(n, 0.0);
  const std::size_t b = gamma.base_index;

  // Simpson over pairs away from the base; a three-point end rule keeps odd
  // offsets fourth-order too.
  for (std::size_t k = b + 1; k < n; ++k) {
    const std::size_t d = k - b;
    if (d == 1)
      cum[k] = k + 1 < n ? h / 12.0 * (5.0 * gv[b] + 8.0 * gv[k] - gv[k + 1])
                         : 0.5 * h * (gv[b] + gv[k]);
    else if (d % 2 == 0)
      cum[k] = cum[k - 2] + h / 3.0 * (gv[k - 2] + 4.0 * gv[k - 1] + gv[k]);
    else
      cum[k] = cum[k - 1] + h / 12.0 * (-gv[k - 2] + 8.0 * gv[k - 1] + 5.0 * gv[k]);
  }
  for (std::size_t k = b; k-- > 0;) {
    const std::size_t d = b - k;
    if (d == 1)
      cum[k] = k > 0 ? -h / 12.0 * (5.0 * gv[b] + 8.0 * gv[k] - gv[k - 1])
                     : -0.5 * h * (gv[b] + gv[k]);
    else if (d % 2 == 0)
      cum[k] = cum[k + 2] - h / 3.0 * (gv[k + 2] + 4.0 * gv[k + 1] + gv[k]);
    else
      cum[k] = cum[k + 1] - h / 12.0 * (-gv[k + 2] + 8.0 * gv[k + 1] + 5.0 * gv[k]);
  }
  return cum;
}

void write_curve_csv(const Characteristic& gamma, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_curve_csv: cannot open " + path);
  out.precision(17);
  out << "t";
  for (Eigen::Index a = 0; a < gamma.base.size(); ++a) out << ",s" << a;
  out << '\n';
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    out << gamma.times[k];
    for (Eigen::Index a = 0; a < gamma.states[k].size(); ++a) out << ',' << gamma.states[k][a];
    out << '\n';
  }
}

}  // namespace carnot
