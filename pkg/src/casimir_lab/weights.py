"""Weight lattices, Casimir eigenvalues and sphere/class enumeration.

Dominant weights mu are labeled by nonnegative integer coordinates in the
fundamental-weight basis.  The Casimir eigenvalue is (mu+d, mu+d) - (d, d)
for d the half-sum of positive roots; a Casimir class collects every
lattice weight whose shifted point mu+d lies on a common sphere.  All
enumeration is exact: integer points of rational ellipsoids, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from functools import lru_cache

from . import ratlinalg as rl
from . import rootsys as rsys
from .errors import NonDominantWeight, NotInLattice
from .ratlinalg import Vec
from .rootsys import RootSystem


class LatticeChoice(Enum):
    WEIGHT = "weight_lattice"
    ROOT = "root_lattice"


@dataclass(frozen=True)
class Weight:
    """A lattice weight: integer fundamental-weight coordinates plus its ambient vector."""

    fw_coords: tuple[int, ...]
    ambient: Vec

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fw_coords)


@dataclass(frozen=True)
class CasimirClass:
    """All lattice weights whose shifted points share one squared radius a_sq."""

    a_sq: Q
    lam: Q
    dominant_members: tuple[Weight, ...]
    sphere_members: tuple[Weight, ...]


@lru_cache(maxsize=None)
def _cartan_inverse(rs: RootSystem) -> rl.Mat:
    return rl.inverse(rl.mat(rs.cartan_matrix))


def in_root_lattice(rs: RootSystem, fw_coords) -> bool:
    """mu = sum c_i alpha_i with integer c?  Solve c = m C^{-1} exactly."""
    cinv = _cartan_inverse(rs)
    m = rl.vec(fw_coords)
    c = rl.matvec(rl.transpose(cinv), m)
    return all(x.denominator == 1 for x in c)


def in_lattice(rs: RootSystem, lat: LatticeChoice, fw_coords) -> bool:
    if any(not isinstance(c, int) and rl.frac(c).denominator != 1 for c in fw_coords):
        return False
    if lat is LatticeChoice.WEIGHT:
        return True
    return in_root_lattice(rs, fw_coords)


def root_lattice_index(rs: RootSystem) -> int:
    """Index of the root lattice inside the weight lattice (= |det Cartan|)."""
    return abs(int(rl.det(rl.mat(rs.cartan_matrix))))


def make_weight(rs: RootSystem, fw_coords, lat: LatticeChoice = LatticeChoice.WEIGHT) -> Weight:
    coords = tuple(int(c) for c in fw_coords)
    if len(coords) != rs.rank:
        raise NotInLattice(f"expected {rs.rank} coordinates, got {len(coords)}")
    if tuple(rl.frac(c) for c in fw_coords) != tuple(Q(c) for c in coords):
        raise NotInLattice(f"non-integral fundamental-weight coordinates {fw_coords}")
    if lat is LatticeChoice.ROOT and not in_root_lattice(rs, coords):
        raise NotInLattice(f"{coords} is not in the root lattice of {rs.typ.label}")
    return Weight(fw_coords=coords, ambient=rs.from_fw_coords(coords))


def weight_from_ambient(rs: RootSystem, v: Vec) -> Weight:
    """Weight from an ambient vector lying in the weight lattice of the root span."""
    coords = rs.fw_coords(v)
    return make_weight(rs, coords)


def delta_norm_sq(rs: RootSystem) -> Q:
    return rs.inner(rs.delta, rs.delta)


def shifted_norm_sq(rs: RootSystem, mu: Weight) -> Q:
    s = rl.vadd(mu.ambient, rs.delta)
    return rs.inner(s, s)


def casimir_eigenvalue(rs: RootSystem, mu: Weight) -> Q:
    """Casimir eigenvalue on the irreducible with highest weight mu (dominant)."""
    if not mu.is_dominant():
        raise NonDominantWeight(f"{mu.fw_coords} is not dominant")
    return shifted_norm_sq(rs, mu) - delta_norm_sq(rs)


_MINUS_ONE_CENTER = lambda r: tuple(Q(-1) for _ in range(r))


def _shifted_lattice_points(rs: RootSystem, lat: LatticeChoice, a_sq_cap: Q):
    """Yield (fw_coords, a_sq) for all lattice weights with |mu+delta|^2 <= cap."""
    g = rs.gram_fw
    center = _MINUS_ONE_CENTER(rs.rank)
    for m in rl.ellipsoid_points(g, center, a_sq_cap):
        if lat is LatticeChoice.ROOT and not in_root_lattice(rs, m):
            continue
        y = rl.vec(tuple(mi + 1 for mi in m))
        yield m, rl.dot(y, rl.matvec(g, y))


def enumerate_dominant(rs: RootSystem, lat: LatticeChoice, a_sq_cap) -> list[Weight]:
    """All dominant lattice weights with |mu+delta|^2 <= a_sq_cap, sorted."""
    cap = rl.frac(a_sq_cap)
    out = []
    for m, _ in _shifted_lattice_points(rs, lat, cap):
        if all(mi >= 0 for mi in m):
            out.append(make_weight(rs, m, lat))
    out.sort(key=lambda w: w.fw_coords)
    return out


def sphere_set(rs: RootSystem, lat: LatticeChoice, a_sq) -> CasimirClass:
    """The full Casimir class at exactly |mu+delta|^2 = a_sq (may be empty)."""
    a_sq = rl.frac(a_sq)
    members = []
    for m, val in _shifted_lattice_points(rs, lat, a_sq):
        if val == a_sq:
            members.append(make_weight(rs, m, lat))
    members.sort(key=lambda w: w.fw_coords)
    dominant = tuple(w for w in members if w.is_dominant())
    return CasimirClass(
        a_sq=a_sq,
        lam=a_sq - delta_norm_sq(rs),
        dominant_members=dominant,
        sphere_members=tuple(members),
    )


def classes_up_to(rs: RootSystem, lat: LatticeChoice, a_sq_cap) -> list[CasimirClass]:
    """Casimir classes with at least one dominant member, ascending in a_sq.

    One exact ellipsoid sweep buckets every lattice point by its exact
    shifted norm, so coincidences (equal a_sq) can never be split or merged
    by rounding.
    """
    cap = rl.frac(a_sq_cap)
    buckets: dict[Q, list[Weight]] = {}
    for m, val in _shifted_lattice_points(rs, lat, cap):
        buckets.setdefault(val, []).append(make_weight(rs, m, lat))
    d2 = delta_norm_sq(rs)
    out = []
    for a_sq in sorted(buckets):
        members = sorted(buckets[a_sq], key=lambda w: w.fw_coords)
        dominant = tuple(w for w in members if w.is_dominant())
        if not dominant:
            continue
        out.append(
            CasimirClass(a_sq=a_sq, lam=a_sq - d2, dominant_members=dominant, sphere_members=tuple(members))
        )
    return out


def dual_weight(rs: RootSystem, mu: Weight) -> Weight:
    """Highest weight of the dual representation: the dominant form of -mu."""
    neg = rl.vscale(-1, mu.ambient)
    dom, _ = rsys.to_dominant(rs, neg)
    return weight_from_ambient(rs, dom)
