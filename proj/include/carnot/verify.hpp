#ifndef CARNOT_VERIFY_HPP
#define CARNOT_VERIFY_HPP

#include "carnot/algebra.hpp"
#include "carnot/bump.hpp"
#include "carnot/characteristics.hpp"
#include "carnot/fields.hpp"
#include "carnot/graphs.hpp"
#include "carnot/quadrature.hpp"
#include "carnot/scalar_field.hpp"
#include "carnot/types.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace carnot {

/// Structured outcome of one verification run. pass holds exactly when
/// every recorded deviation meets its tolerance.
struct VerificationReport {
  std::string check;
  std::string scenario;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
  std::vector<double> values;
  double tolerance = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

// ---------------------------------------------------------------------------
// Weak (distributional) residuals. Each returns the pairing of the
// conservative-form equation against the test function minus the datum term;
// the value tends to zero under quadrature refinement exactly when the
// distributional equation holds against that test.

std::vector<WeakTerm> weak_terms_G(const StepTwoAlgebra& A, const ScalarField& phi,
                                   const ScalarField& omega_j, int j);
std::vector<WeakTerm> weak_terms_F(int m, const ScalarField& psi,
                                   const ScalarField& omega_pulled_j, int j);
std::vector<WeakTerm> weak_terms_engel(const ScalarField& phi, const ScalarField& omega);

double weak_residual_G(const StepTwoAlgebra& A, const ScalarField& phi,
                       const ScalarField& omega_j, int j, const BumpTest& xi, int level);

/// Same integrand paired against xi o P_q (the pivot side of the
/// translation-invariance identity).
double weak_residual_G_translated_test(const StepTwoAlgebra& A, const ScalarField& phi,
                                       const ScalarField& omega_j, int j, const BumpTest& xi,
                                       const GroupPoint& q, int level);

double weak_residual_F(int m, const ScalarField& psi, const ScalarField& omega_pulled_j, int j,
                       const BumpTest& xi, int level);

/// F-side residual against the separated family (xi_G tensor eta) composed
/// with the change-of-variables matrix M, evaluated on the image of the
/// matched tensor grid (same resolution on both sides of the lift).
double weak_residual_F_matched(const StepTwoAlgebra& A, const ScalarField& psi,
                               const ScalarField& omega_pulled_j, int j, const BumpTest& xi_G,
                               const BumpTest& eta, int level);

double weak_residual_engel(const ScalarField& phi, const ScalarField& omega, const BumpTest& xi,
                           int level);

// ---------------------------------------------------------------------------
// Checks.

/// Fundamental-theorem-of-calculus test along characteristics:
/// max_t | phi(E(a,t)) - phi(a) - int_0^t omega_j(E(a,s)) ds | per curve.
VerificationReport broad_star_check(const ScalarField& phi, const VectorField& omega,
                                    const std::vector<Characteristic>& curves, double tol);

/// |phi(gamma(t)) - phi(gamma(s))| <= slack * sup|omega_j| * |t-s| + tol over
/// all sampled pairs. sup|omega_j| is the grid max of the datum field.
VerificationReport lipschitz_check(const ScalarField& phi, const VectorField& omega,
                                   const std::vector<Characteristic>& curves, double slack = 1.01,
                                   double tol = 1e-12);

/// Characteristic strip balance for the planar reduced equation: compares
/// L(eps) = boundary strips minus the datum strip against
/// R(eps) = -1/2 int (psi(t, g(t)-eps) - psi(t, g(t)))^2 dt.
VerificationReport dafermos_identity(const ScalarField& psi_hat, const ScalarField& omega_hat,
                                     const Characteristic& curve, double eps, int level,
                                     double tol);

/// Little-Hoelder modulus scan: M(r) = sup |phi(b') - phi(b)| / |b'-b|^alpha
/// over sampled pairs differing only in the given axes, |b'-b| < r.
VerificationReport holder_modulus(const ScalarField& phi, const std::vector<int>& axes,
                                  double alpha, const std::vector<double>& radii,
                                  std::uint64_t seed, int pairs_per_radius = 4000);

/// Pivot identity of intrinsic translation: residual of (phi_q, omega o
/// P_{q^-1}) against xi equals the residual of (phi, omega) against
/// xi o P_q; both sides quadratured independently.
VerificationReport translation_invariance_check(const StepTwoAlgebra& A, const ScalarField& phi,
                                                const ScalarField& omega_j, int j,
                                                const GroupPoint& q,
                                                const std::vector<BumpTest>& bumps, int level,
                                                double tol);

/// First-order integrand sum_t coef_t d_axis(test) whose derivative axes all
/// lie in the kept set, plus one frozen axis; the checker pairs it against
/// the plateau-sliced family and compares with the directly reduced integral.
struct ReductionInput {
  std::vector<WeakTerm> terms;  // coefficients on the full box, axes in kept numbering
  std::vector<int> kept_axes;   // ascending full-space indices
  int z_axis = 0;
  double z0 = 0.0;
  BumpTest xi_hat;              // test on the kept space
};

VerificationReport dimensional_reduction_check(const ReductionInput& in,
                                               const std::vector<double>& eps_seq, int level,
                                               double slope_lo = 0.8, double slope_hi = 1.2);

/// Lift consistency: residual of psi = phi o pi against the matched family,
/// normalized by |det M| / integral(eta), against the G-side residual.
VerificationReport lift_residual_check(const StepTwoAlgebra& A, const ScalarField& phi,
                                       const ScalarField& omega_j, int j, const BumpTest& xi_G,
                                       const BumpTest& eta, const Box& free_box, int level,
                                       double ratio_tol = 2.0);

/// Projected free-side characteristics against direct G-side integration.
VerificationReport projection_covariance_check(const StepTwoAlgebra& A, const ScalarField& phi,
                                               const Box& free_box, int j,
                                               const std::vector<Vec>& free_bases, double T,
                                               double h_step, double c_defect = 10.0);

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace carnot

#endif
