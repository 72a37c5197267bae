"""Smoke tests for the pycarnot module: group operations, projections,
characteristics, a weak residual and one scenario run."""
import math
import os
import tempfile

import numpy as np

import pycarnot as pc


def test_group_ops():
    H = pc.StepTwoAlgebra.heisenberg()
    p = pc.GroupPoint(np.array([1.0, 0.0]), np.array([0.0]))
    q = pc.GroupPoint(np.array([0.0, 1.0]), np.array([0.0]))
    pq = pc.group_mul(H, p, q)
    assert abs(pq.ystar[0] - 0.5) < 1e-15
    e = pc.group_mul(H, pq, pc.group_inv(H, pq))
    assert np.allclose(e.x, 0.0) and np.allclose(e.ystar, 0.0)
    assert abs(pc.hom_norm(H, pc.GroupPoint(np.array([1.0, 0.0]), np.array([4.0]))) - 2.0) < 1e-15

    rt = pc.StepTwoAlgebra.from_json(H.to_json())
    assert rt.m == 2 and rt.h == 1


def test_projection_homomorphism():
    A = pc.StepTwoAlgebra.rank3_dim5()
    rng = np.random.default_rng(5)
    for _ in range(20):
        p = pc.FreePoint(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))
        q = pc.FreePoint(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))
        lhs = pc.project_pi(A, pc.free_mul(p, q))
        rhs = pc.group_mul(A, pc.project_pi(A, p), pc.project_pi(A, q))
        assert np.allclose(lhs.ystar, rhs.ystar, atol=1e-12)

    M = pc.complete_matrix_M(A)
    assert M.shape == (5, 5)
    assert abs(np.linalg.det(M)) > 1e-8

    q = pc.GroupPoint(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 2))
    assert abs(np.linalg.det(pc.dP_q(A, q)) - 1.0) < 1e-12


def test_characteristic_matches_closed_form():
    H = pc.StepTwoAlgebra.heisenberg()
    box = pc.Box.cube(2, -2.0, 2.0)
    phi = pc.ScalarField.coordinate(box, 0)
    field = pc.ProjectedFieldG(H, phi, 2)
    curve = pc.integrate_G(field, np.zeros(2), 1.0, 1.0 / 512)
    t = np.array(curve.times)
    assert np.allclose(curve.states[:, 0], t, atol=1e-13)
    assert np.allclose(curve.states[:, 1], 0.5 * t * t, atol=1e-10)


def test_weak_residual_and_python_callable_field():
    H = pc.StepTwoAlgebra.heisenberg()
    box = pc.Box.cube(2, -1.0, 1.0)
    phi = pc.ScalarField.closed_form(box, lambda w: w[0], [0])
    omega = pc.ScalarField.constant(box, 1.0)
    xi = pc.BumpTest(np.zeros(2), np.array([0.5, 0.5]))
    res = pc.weak_residual_G(H, phi, omega, 2, xi, 128)
    assert abs(res) < 1e-6

    wrong = pc.ScalarField.constant(box, 0.0)
    res_bad = pc.weak_residual_G(H, phi, wrong, 2, xi, 128)
    assert abs(res_bad) > 0.9 * xi.integral()


def test_domain_error_surfaces():
    box = pc.Box.cube(2, -1.0, 1.0)
    phi = pc.ScalarField.constant(box, 0.0)
    try:
        phi(np.array([2.0, 0.0]))
    except pc.DomainError:
        pass
    else:
        raise AssertionError("expected DomainError")


def test_scenario_runner():
    assert {s["id"] for s in pc.list_scenarios()} >= {
        "heisenberg1",
        "intro5d",
        "free3",
        "engel-counterexample",
    }
    with tempfile.TemporaryDirectory() as out:
        code, _ = pc.run_verify("heisenberg1", "broadstar", out_dir=out, seed=3)
        assert code == 0
        assert os.path.exists(os.path.join(out, "heisenberg1_broadstar_report.json"))
        code, _ = pc.run_verify("engel-counterexample", "holder", out_dir=out)
        assert code == 1  # fails by design
        code, _ = pc.run_verify("heisenberg1", "nope", out_dir=out)
        assert code == 2


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
