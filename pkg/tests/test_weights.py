"""Casimir eigenvalues and sphere classes on the weight and root lattices."""

from fractions import Fraction as Q

import pytest

from casimir_lab import ratlinalg as rl
from casimir_lab.errors import NotInLattice
from casimir_lab.rootsys import RootSystemType, build_root_system
from casimir_lab.weights import (
    LatticeChoice,
    casimir_eigenvalue,
    classes_up_to,
    delta_norm_sq,
    dual_weight,
    enumerate_dominant,
    in_root_lattice,
    make_weight,
    shifted_norm_sq,
    sphere_set,
)

W = LatticeChoice.WEIGHT
R = LatticeChoice.ROOT


def rs_of(fam, rank, scale=1):
    return build_root_system(RootSystemType(fam, rank), metric_scale=Q(scale))


def test_rank1_casimir_formula():
    rs = rs_of("A", 1)
    for m in range(13):
        assert casimir_eigenvalue(rs, make_weight(rs, (m,))) == Q(m * (m + 2), 2)


def test_adjoint_casimir_is_twice_dual_coxeter():
    # with long roots of norm 2 the adjoint eigenvalue is 2 h-vee
    for fam, rank, hvee in (("A", 1, 2), ("A", 2, 3), ("B", 2, 3), ("G", 2, 4), ("A", 3, 4), ("B", 3, 5)):
        rs = rs_of(fam, rank)
        from casimir_lab.rootsys import highest_root

        theta = rs.fw_coords(highest_root(rs))
        mu = make_weight(rs, tuple(int(c) for c in theta))
        assert casimir_eigenvalue(rs, mu) == 2 * hvee


def test_casimir_scales_with_metric():
    plain = rs_of("B", 2)
    scaled = rs_of("B", 2, scale=Q(5, 3))
    mu = (2, 1)
    assert casimir_eigenvalue(scaled, make_weight(scaled, mu)) == Q(5, 3) * casimir_eigenvalue(
        plain, make_weight(plain, mu)
    )


def test_lattice_membership():
    rs = rs_of("A", 2)
    assert in_root_lattice(rs, (1, 1))  # adjoint weight
    assert not in_root_lattice(rs, (1, 0))
    make_weight(rs, (1, 1), R)
    with pytest.raises(NotInLattice):
        make_weight(rs, (1, 0), R)
    with pytest.raises(NotInLattice):
        make_weight(rs, (Q(1, 2), 0), W)


def _box_scan_classes(rs, lat, cap):
    """Independent oracle: scan an integer coordinate box, keep points with
    |mu + delta|^2 <= cap, and bucket them by the exact squared radius."""
    cap = Q(cap)
    # |mu+delta| <= sqrt(cap) and |c_i| bounded via the dual basis: use a
    # generous fixed box instead of sharp bounds; radii here are small.
    span = 25
    buckets = {}
    for c1 in range(-span, span + 1):
        coords_list = [(c1,)] if rs.rank == 1 else [(c1, c2) for c2 in range(-span, span + 1)]
        for coords in coords_list:
            if lat is R and not in_root_lattice(rs, coords):
                continue
            mu = make_weight(rs, coords)
            n = shifted_norm_sq(rs, mu)
            if n <= cap:
                buckets.setdefault(n, set()).add(coords)
    # a Casimir class must label some irreducible: keep dominant-anchored radii
    return {
        n: pts for n, pts in buckets.items() if any(all(x >= 0 for x in p) for p in pts)
    }


@pytest.mark.parametrize("fam,rank", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
def test_classes_match_box_scan(fam, rank):
    rs = rs_of(fam, rank)
    cap = Q(40)
    for lat in (W, R):
        oracle = _box_scan_classes(rs, lat, cap)
        got = classes_up_to(rs, lat, cap)
        assert [c.a_sq for c in got] == sorted(oracle)
        for c in got:
            assert {w.fw_coords for w in c.sphere_members} == oracle[c.a_sq]
            assert {w.fw_coords for w in c.dominant_members} == {
                m for m in oracle[c.a_sq] if all(x >= 0 for x in m)
            }


def test_class_invariants():
    rs = rs_of("B", 2)
    for c in classes_up_to(rs, W, 30):
        assert c.lam == c.a_sq - delta_norm_sq(rs)
        for w in c.sphere_members:
            assert shifted_norm_sq(rs, w) == c.a_sq
        assert set(c.dominant_members) <= set(c.sphere_members)
        # dominant members are closed under duality
        duals = {dual_weight(rs, w).fw_coords for w in c.dominant_members}
        assert duals == {w.fw_coords for w in c.dominant_members}


def test_sphere_set_roundtrip():
    rs = rs_of("A", 2)
    mu = make_weight(rs, (8, 0))
    cls = sphere_set(rs, W, shifted_norm_sq(rs, mu))
    assert cls.a_sq == Q(182, 3)
    members = {w.fw_coords for w in cls.dominant_members}
    assert members == {(8, 0), (0, 8), (5, 4), (4, 5)}


def test_dual_weight_involution_and_types():
    a2 = rs_of("A", 2)
    assert dual_weight(a2, make_weight(a2, (3, 1))).fw_coords == (1, 3)
    assert dual_weight(a2, dual_weight(a2, make_weight(a2, (3, 1)))).fw_coords == (3, 1)
    for fam in ("B", "G"):
        rs = rs_of(fam, 2)
        assert dual_weight(rs, make_weight(rs, (2, 1))).fw_coords == (2, 1)  # self-dual types


def test_enumerate_dominant_sorted_and_complete():
    rs = rs_of("G", 2)
    doms = enumerate_dominant(rs, W, 50)
    assert all(w.is_dominant() for w in doms)
    coords = [w.fw_coords for w in doms]
    assert coords == sorted(coords)  # documented order: by coordinates
    assert all(shifted_norm_sq(rs, w) <= 50 for w in doms)
    # completeness against a plain double loop
    brute = sorted(
        (c1, c2)
        for c1 in range(8)
        for c2 in range(8)
        if shifted_norm_sq(rs, make_weight(rs, (c1, c2))) <= 50
    )
    assert coords == brute


def test_degenerate_radius_classes():
    rs = rs_of("A", 1)
    # a^2 = |delta|^2 contains exactly the zero weight among dominants
    cls = sphere_set(rs, W, delta_norm_sq(rs))
    assert [w.fw_coords for w in cls.dominant_members] == [(0,)]
    assert {w.fw_coords for w in cls.sphere_members} == {(0,), (-2,)}
    # radius 0: the single point -delta, not dominant
    zero = sphere_set(rs, W, 0)
    assert zero.dominant_members == ()
    assert [w.fw_coords for w in zero.sphere_members] == [(-1,)]
