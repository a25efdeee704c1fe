import pytest

import rotsys


def test_roundtrip_json():
    p = rotsys.convex_position_system(5)
    q = rotsys.PreRotationSystem.from_json(p.to_json())
    assert p == q
    assert q.n == 5
    assert rotsys.isomorphic(p, rotsys.reflect(p))


def test_convex_k5_has_five_crossings():
    p = rotsys.convex_position_system(5)
    assert len(rotsys.crossings(p)) == 5
    assert rotsys.check_class(p, "convex")
    assert rotsys.is_drawable(p)


def test_class_counts():
    assert [rotsys.count(rotsys.RunConfig(n)) for n in (4, 5, 6)] == [2, 5, 102]


def test_convex_counts():
    cfg = rotsys.RunConfig(6)
    cfg.convex = True
    assert rotsys.count(cfg) == 16


def test_solve_returns_witness():
    cfg = rotsys.RunConfig(6)
    status, pi = rotsys.solve(cfg)
    assert status == "SAT"
    assert pi.n == 6
    assert rotsys.check_class(pi, "drawable")


def test_hc_unsat_small():
    cfg = rotsys.RunConfig(6)
    cfg.hc = True
    status, pi = rotsys.solve(cfg)
    assert status == "UNSAT"
    assert pi is None


def test_oracles():
    p = rotsys.convex_position_system(6)
    assert rotsys.plane_hamiltonian_cycle(p) is not None
    assert rotsys.count_empty_triangles(p) >= 1


def test_dimacs_header():
    text = rotsys.to_dimacs(rotsys.RunConfig(5))
    assert text.startswith("c") or text.startswith("p cnf")
    assert "p cnf" in text


def test_bad_rotation_raises():
    with pytest.raises(ValueError):
        rotsys.PreRotationSystem([[1, 2], [0, 2], [0, 0]])
