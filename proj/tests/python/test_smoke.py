import pytest

import weddle


def test_group_orders():
    assert weddle.group_order(2, 2) == "720"
    assert weddle.group_order(2, 3) == "51840"
    assert int(weddle.gamma_index(2, 6)) == 720 * 51840


def test_orbits_and_stabilizers():
    sizes = sorted(len(o) for o in weddle.characteristic_orbits())
    assert sizes == [6, 10]
    assert weddle.stabilizer_order([1, 0, 1, 0]) == 120
    assert weddle.stabilizer_order([0, 0, 0, 0]) == 72
    with pytest.raises(ValueError):
        weddle.stabilizer_order([2, 0, 0, 0])


def test_steinerian_kernel_at_ones():
    assert weddle.steinerian_minus([1, 1, 1, 1]) == ["6", "-3", "1", "1", "1"]
    assert weddle.steinerian_minus([1, 0, 0, 0]) is None


def test_derived_quartic_and_base_locus():
    q = weddle.derive_burkhardt()
    assert q.startswith("vars=5 degree=4 field=Q")
    assert len(q.strip().splitlines()) == 7
    assert weddle.base_locus_count(7) == 40
    with pytest.raises(MemoryError):
        weddle.base_locus_count(31, 1, 1000)


def test_theta_parity():
    z = [0.1 + 0.2j, -0.3 + 0.05j]
    odd = [1, 0, 1, 0]
    a = weddle.theta(odd, z)
    b = weddle.theta(odd, [-z[0], -z[1]])
    assert abs(a + b) < 1e-12
    assert abs(weddle.theta(odd, [0, 0])) < 1e-12


def test_weddle_surfaces():
    w = weddle.weddle_from_theta()
    assert w["fit_nullity"] == 1 and w["nodes"] == 6 and w["lines"] == 25
    assert w["line_residual"] < 1e-6
    c = weddle.weddle_curve()
    assert c["nullity"] == 1 and c["line_residual"] == 0.0 and c["rigidity_nullity"] == 1


def test_run_suite_report():
    empty = weddle.run_suite("")
    assert empty["records"] == []
    rep = weddle.run_suite("sympchar", seed=7)
    assert [r["id"] for r in rep["records"]] == ["AC01", "AC02", "AC03"]
    assert all(r["status"] == "pass" for r in rep["records"])
    assert rep == weddle.run_suite("sympchar", seed=7)
    with pytest.raises(ValueError):
        weddle.run_suite("bogus")
    with pytest.raises(ValueError):
        weddle.run_suite("curve", p=100)
