"""End-to-end checks of the python bindings."""

import math

import pytest

import polyvortex as pv


def test_spectrum_closed_form():
    sp = pv.circulant_spectrum(4, pv.CirculantKind.C)
    assert sp.eigenvalues == [1.5, 0.5, -0.5, 0.0]
    sp0 = pv.circulant_spectrum(4, pv.CirculantKind.C0)
    assert sp0.eigenvalues == [1.5, 0.5, -0.5, -1.5]
    assert sp.max_residual < 1e-10


def test_classify_unit_square():
    ring = pv.PolygonRing(4, 1 + 0j, [1.0, 1.0, 1.0, 1.0])
    report = pv.classify(pv.ring_to_system(ring))
    assert report.kind == pv.EquilibriumKind.ROTATION
    assert abs(report.omega - 1.5) < 1e-12
    assert abs(report.center) < 1e-12


def test_solve_nested_equal_pair():
    sols = pv.solve_nested(2, 1.0, 1.0)
    assert len(sols) == 3
    aligned = [s for s in sols if s.alignment == pv.Alignment.ALIGNED]
    staggered = [s for s in sols if s.alignment == pv.Alignment.STAGGERED]
    assert len(aligned) == 2 and len(staggered) == 1
    assert abs(staggered[0].x - 1.0) < 1e-12
    for s in sols:
        assert s.report.residual < 1e-10


def test_absolute_equilibrium_identities():
    eq = pv.absolute_equilibrium(3, 1.0)
    r = eq.gamma2
    assert abs(r * r + pv.lambda_n(3) * r + 1.0) < 1e-12
    assert abs(eq.s2_over_s1**3 + r * r) < 1e-12
    assert abs(pv.oneil_sum(eq.system)) < 1e-11
    assert max(abs(v) for v in pv.velocities(eq.system)) < 1e-10


def test_corotating_single_pair_anchors():
    pts = pv.corotating_single(2, 1 + 0j, 1.0)
    radii = {p.ray: p.radius for p in pts}
    assert abs(radii[pv.RayKind.VERTEX_RAY] - math.sqrt(5.0)) < 1e-12
    assert abs(radii[pv.RayKind.MIDPOINT_RAY] - math.sqrt(3.0)) < 1e-12


def test_system_json_round_trip():
    s = pv.VortexSystem([1 + 0j, -1 + 0j], [1.0, -1.0])
    back = pv.VortexSystem.from_json(s.to_json())
    assert back.positions == s.positions
    assert back.vorticities == s.vorticities


def test_integration_conserves_hamiltonian():
    s = pv.VortexSystem([0j, 1 + 0j, 2j], [1.0, 2.0, -0.7])
    tr = pv.integrate(s, 1.0, 1e-10)
    assert tr.max_hamiltonian_drift < 1e-9
    csv = tr.to_csv()
    assert csv.startswith("t,x_0,y_0,x_1,y_1,x_2,y_2\n")


def test_validation_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        pv.VortexSystem([0j, 1e-12 + 0j], [1.0, 1.0])
    with pytest.raises(ValueError):
        pv.classify_regime(3, 0.0)


def test_scan_consistency():
    rows = pv.scan_regimes(3, [-5.0, -1.0, 0.5, 2.0])
    assert all(r.consistent for r in rows)


def test_rigidity_dimensions():
    assert pv.vorticity_solution_space(4, pv.RingCase.ROTATING).dimension == 1
    assert pv.vorticity_solution_space(3, pv.RingCase.ROTATING).dimension == 3
    assert pv.vorticity_solution_space(2, pv.RingCase.TRANSLATING).dimension == 1
