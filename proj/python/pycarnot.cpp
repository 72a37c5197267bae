#include "carnot/characteristics.hpp"
#include "carnot/free.hpp"
#include "carnot/graphs.hpp"
#include "carnot/runner.hpp"
#include "carnot/scenario.hpp"
#include "carnot/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace carnot;

namespace {

Mat states_matrix(const Characteristic& c) {
  Mat out(c.size(), c.base.size());
  for (std::size_t k = 0; k < c.size(); ++k) out.row(k) = c.states[k];
  return out;
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict d;
  d["check"] = rep.check;
  d["scenario"] = rep.scenario;
  d["seed"] = rep.seed;
  d["values"] = rep.values;
  d["tolerance"] = rep.tolerance;
  d["pass"] = rep.pass;
  d["params_json"] = rep.params.dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(pycarnot, m) {
  m.doc() = "Step-2 Carnot group geometry and Burgers-type graph verification";

  py::register_exception<DomainError>(m, "DomainError");

  py::class_<Box>(m, "Box")
      .def(py::init<Vec, Vec>(), py::arg("lo"), py::arg("hi"))
      .def_static("cube", &Box::cube)
      .def_readonly("lo", &Box::lo)
      .def_readonly("hi", &Box::hi)
      .def("contains", &Box::contains, py::arg("p"), py::arg("tol") = 0.0)
      .def("shrunk", &Box::shrunk);

  py::class_<GroupPoint>(m, "GroupPoint")
      .def(py::init<Vec, Vec>(), py::arg("x"), py::arg("ystar"))
      .def_readwrite("x", &GroupPoint::x)
      .def_readwrite("ystar", &GroupPoint::ystar);

  py::class_<FreePoint>(m, "FreePoint")
      .def(py::init<Vec, Vec>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &FreePoint::x)
      .def_readwrite("y", &FreePoint::y);

  py::class_<StepTwoAlgebra>(m, "StepTwoAlgebra")
      .def(py::init<int, std::vector<Mat>>(), py::arg("m"), py::arg("structure_matrices"))
      .def_static("heisenberg", &StepTwoAlgebra::heisenberg)
      .def_static("rank3_dim5", &StepTwoAlgebra::rank3_dim5)
      .def_static("free_step_two", &StepTwoAlgebra::free_step_two)
      .def_static("from_json",
                  [](const std::string& s) { return StepTwoAlgebra::from_json(nlohmann::json::parse(s)); })
      .def("to_json", [](const StepTwoAlgebra& a) { return a.to_json().dump(); })
      .def_property_readonly("m", &StepTwoAlgebra::rank)
      .def_property_readonly("h", &StepTwoAlgebra::vertical_dim)
      .def("structure_matrix", &StepTwoAlgebra::structure_matrix, py::arg("i"))
      .def("b", &StepTwoAlgebra::b, py::arg("i"), py::arg("j"), py::arg("l"))
      .def("identity", &StepTwoAlgebra::identity);

  m.def("group_mul", &group_mul);
  m.def("group_inv", &group_inv);
  m.def("dilate", &dilate);
  m.def("hom_norm", &hom_norm);
  m.def("left_invariant_frame", &left_invariant_frame);

  m.def("pair_count", &pair_count);
  m.def("pair_pos", &pair_pos);
  m.def("free_identity", &free_identity);
  m.def("free_mul", &free_mul);
  m.def("free_inv", &free_inv);
  m.def("free_dilate", &free_dilate);
  m.def("free_frame", &free_frame);
  m.def("project_pi", &project_pi);
  m.def("complete_matrix_M", &complete_matrix_M);

  py::class_<ScalarField>(m, "ScalarField")
      .def_static(
          "closed_form",
          [](Box box, std::function<double(const Vec&)> f, std::optional<std::vector<int>> deps) {
            return ScalarField::closed_form(std::move(box), std::move(f), std::move(deps));
          },
          py::arg("domain"), py::arg("f"), py::arg("deps") = std::nullopt)
      .def_static("constant", &ScalarField::constant)
      .def_static("coordinate", &ScalarField::coordinate)
      .def_static(
          "from_grid",
          [](Box box, std::vector<int> shape, std::vector<double> values, bool cubic) {
            return ScalarField::from_grid(std::move(box), std::move(shape), std::move(values),
                                          cubic ? Interp::Cubic : Interp::Multilinear);
          },
          py::arg("domain"), py::arg("shape"), py::arg("values"), py::arg("cubic") = false)
      .def_static("from_csv",
                  [](const std::string& path) { return ScalarField::from_csv(path); })
      .def("__call__", &ScalarField::operator())
      .def_property_readonly("domain", &ScalarField::domain)
      .def("sup_abs", &ScalarField::sup_abs, py::arg("per_axis") = 0);

  m.def("pi_w", &pi_w);
  m.def("pi_l", &pi_l);
  m.def("embed_w", &embed_w);
  m.def("P_q", &P_q);
  m.def("dP_q", &dP_q);
  m.def("graph_map", &graph_map);
  m.def("translate_graph", &translate_graph);
  m.def("pullback_P_q", &pullback_P_q);
  m.def("project_w", &project_w);
  m.def("lift_graph", &lift_graph);

  py::class_<ProjectedFieldG>(m, "ProjectedFieldG")
      .def(py::init<StepTwoAlgebra, ScalarField, int>(), py::arg("algebra"), py::arg("phi"),
           py::arg("j"));
  py::class_<ProjectedFieldF>(m, "ProjectedFieldF")
      .def(py::init<int, ScalarField, int>(), py::arg("m"), py::arg("psi"), py::arg("j"));
  py::enum_<EngelGenerator>(m, "EngelGenerator")
      .value("X2", EngelGenerator::X2)
      .value("X3", EngelGenerator::X3);
  py::class_<EngelField>(m, "EngelField")
      .def(py::init<ScalarField, EngelGenerator>(), py::arg("phi"), py::arg("which"));
  m.def("eval_D_G", &eval_D_G);
  m.def("eval_D_F", &eval_D_F);
  m.def("eval_D_engel", &eval_D_engel);

  py::class_<Characteristic>(m, "Characteristic")
      .def_readonly("j", &Characteristic::j)
      .def_readonly("base", &Characteristic::base)
      .def_readonly("times", &Characteristic::times)
      .def_readonly("base_index", &Characteristic::base_index)
      .def_readonly("h_step", &Characteristic::h_step)
      .def_readonly("exited", &Characteristic::exited)
      .def_readonly("exit_time", &Characteristic::exit_time)
      .def_property_readonly("states", &states_matrix);

  m.def("integrate_G",
        [](const ProjectedFieldG& F, const Vec& a, double T, double h) {
          return integrate(F, a, T, h);
        });
  m.def("integrate_F",
        [](const ProjectedFieldF& F, const Vec& a, double T, double h) {
          return integrate(F, a, T, h);
        });
  m.def("integrate_engel",
        [](const EngelField& F, const Vec& a, double T, double h) {
          return integrate(F, a, T, h);
        });
  m.def("translate_curve", &translate_curve);
  m.def("project_curve", &project_curve);
  m.def("write_curve_csv", &write_curve_csv);

  py::class_<BumpTest>(m, "BumpTest")
      .def(py::init<Vec, Vec, int>(), py::arg("center"), py::arg("radii"), py::arg("p") = 3)
      .def("value", &BumpTest::value)
      .def("gradient", &BumpTest::gradient)
      .def("integral", &BumpTest::integral)
      .def_property_readonly("support", &BumpTest::support);

  m.def("weak_residual_G", &weak_residual_G);
  m.def("weak_residual_F", &weak_residual_F);
  m.def("weak_residual_engel", &weak_residual_engel);

  m.def("broad_star_check",
        [](const ScalarField& phi, const VectorField& omega,
           const std::vector<Characteristic>& curves, double tol) {
          return report_dict(broad_star_check(phi, omega, curves, tol));
        });
  m.def("lipschitz_check",
        [](const ScalarField& phi, const VectorField& omega,
           const std::vector<Characteristic>& curves, double slack, double tol) {
          return report_dict(lipschitz_check(phi, omega, curves, slack, tol));
        },
        py::arg("phi"), py::arg("omega"), py::arg("curves"), py::arg("slack") = 1.01,
        py::arg("tol") = 1e-12);
  m.def("holder_modulus",
        [](const ScalarField& phi, const std::vector<int>& axes, double alpha,
           const std::vector<double>& radii, std::uint64_t seed, int pairs) {
          return report_dict(holder_modulus(phi, axes, alpha, radii, seed, pairs));
        },
        py::arg("phi"), py::arg("axes"), py::arg("alpha"), py::arg("radii"), py::arg("seed"),
        py::arg("pairs_per_radius") = 4000);
  m.def("translation_invariance_check",
        [](const StepTwoAlgebra& A, const ScalarField& phi, const ScalarField& omega_j, int j,
           const GroupPoint& q, const std::vector<BumpTest>& bumps, int level, double tol) {
          return report_dict(translation_invariance_check(A, phi, omega_j, j, q, bumps, level, tol));
        });
  m.def("dafermos_identity",
        [](const ScalarField& psi_hat, const ScalarField& omega_hat, const Characteristic& curve,
           double eps, int level, double tol) {
          return report_dict(dafermos_identity(psi_hat, omega_hat, curve, eps, level, tol));
        });

  m.def("list_scenarios", []() {
    py::list out;
    for (const ScenarioInfo& s : list_scenarios()) {
      py::dict d;
      d["id"] = s.id;
      d["kind"] = s.kind;
      d["note"] = s.note;
      out.append(d);
    }
    return out;
  });
  m.def(
      "run_verify",
      [](const std::string& scenario, const std::string& check, const std::string& out_dir,
         std::uint64_t seed, double tol, int grid, double step) {
        RunOptions opt;
        opt.scenario = scenario;
        opt.check = check;
        opt.out_dir = out_dir;
        opt.seed = seed;
        opt.tol = tol;
        opt.grid = grid;
        opt.step = step;
        std::ostringstream log;
        const int code = run_verify(opt, log);
        return py::make_tuple(code, log.str());
      },
      py::arg("scenario"), py::arg("check"), py::arg("out_dir") = ".", py::arg("seed") = 42,
      py::arg("tol") = 0.0, py::arg("grid") = 0, py::arg("step") = 0.0);
}
