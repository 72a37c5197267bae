#ifndef CARNOT_CHARACTERISTICS_HPP
#define CARNOT_CHARACTERISTICS_HPP

#include "carnot/fields.hpp"
#include "carnot/types.hpp"

#include <string>
#include <vector>

namespace carnot {

/// Discretized integral curve of a projected vector field, sampled on a
/// uniform time grid covering [-T, T] (or the truncation of it reached
/// before leaving the field's domain). states[base_index] is the start
/// point at time 0; all horizontal slots except x_j stay constant and the
/// x_j slot advances exactly as x_j + t.
struct Characteristic {
  int j = 0;
  Vec base;
  std::vector<double> times;
  std::vector<Vec> states;
  std::size_t base_index = 0;
  double h_step = 0.0;
  std::string method = "rk4";
  bool exited = false;      // curve left the domain; partial result kept
  double exit_time = 0.0;   // last valid time in the truncated direction

  const Vec& state_at(std::size_t k) const { return states.at(k); }
  std::size_t size() const { return states.size(); }
};

/// Classical fixed-step fourth-order integration, forward and backward
/// from a over [-T, T]. h_step is snapped to divide T exactly. For merely
/// continuous phi this produces one Peano solution, which is all the
/// verification statements need.
Characteristic integrate(const ProjectedFieldG& F, const Vec& a, double T, double h_step);
Characteristic integrate(const ProjectedFieldF& F, const Vec& a, double T, double h_step);
Characteristic integrate(const EngelField& F, const Vec& a, double T, double h_step);

/// Intrinsic translation of a curve: gamma_q(t) = P_q(gamma(t)).
Characteristic translate_curve(const StepTwoAlgebra& A, const Characteristic& gamma,
                               const GroupPoint& q);

/// Projection of a free-side characteristic to the W of A, state by state.
Characteristic project_curve(const StepTwoAlgebra& A, const Characteristic& free_curve);

/// Cumulative integral of g along the curve: out[k] = int_0^{t_k} g(gamma(s)) ds,
/// composite Simpson on the stored samples (fourth-order end rule on odd tails).
std::vector<double> integrate_along(const Characteristic& gamma, const ScalarField& g);

void write_curve_csv(const Characteristic& gamma, const std::string& path);

}  // namespace carnot

#endif
