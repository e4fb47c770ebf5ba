"""Hidden symmetries of shifted eigenvalue spheres.

A Casimir class at squared radius a_sq, translated by the half-sum delta,
becomes a finite point set X on a sphere.  This module enumerates the
full group of ambient-space isometries that permute X (acting as the
identity on the orthogonal complement of span X), checks that the Weyl
group sits inside it under the shift-conjugated action, and reports
orbits.  Everything is exact rational arithmetic; caps keep the
backtracking at desk scale and are refused loudly, never truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from . import ratlinalg as rl
from . import rootsys as rsys
from .errors import CapExceeded, InternalConsistencyError
from .ratlinalg import Mat, Vec
from .rootsys import RootSystem, WeylElement
from .weights import CasimirClass

DEFAULT_POINT_CAP = 60
DEFAULT_RANK_CAP = 4


@dataclass(frozen=True)
class ShiftedConfig:
    """The shifted point set of a Casimir class, with its exact Gram matrix."""

    a_sq: Q
    mu_coords: tuple[tuple[int, ...], ...]
    points: tuple[Vec, ...]
    gram: Mat

    @property
    def size(self) -> int:
        return len(self.points)


@dataclass(frozen=True, eq=False)
class OrthoMap:
    """An exact orthogonal map permuting a shifted configuration.

    permutation[i] is the index of the image of points[i]; the ambient
    matrix acts as the identity on the orthogonal complement of span X.
    """

    matrix: Mat
    permutation: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, OrthoMap) and self.permutation == other.permutation

    def __hash__(self):
        return hash(self.permutation)


def shifted_config(rs: RootSystem, cls: CasimirClass) -> ShiftedConfig:
    """Translate every sphere member by delta; canonical order, exact Gram."""
    rows = sorted(
        (tuple(c + 1 for c in w.fw_coords), rl.vadd(w.ambient, rs.delta), w.fw_coords)
        for w in cls.sphere_members
    )
    points = tuple(p for _, p, _ in rows)
    mu_coords = tuple(m for _, _, m in rows)
    gram = rl.mat([[rs.inner(p, q) for q in points] for p in points])
    for i, p in enumerate(points):
        if gram[i][i] != cls.a_sq:
            raise InternalConsistencyError("shifted point off its sphere")
    return ShiftedConfig(a_sq=cls.a_sq, mu_coords=mu_coords, points=points, gram=gram)


def _select_basis(cfg: ShiftedConfig) -> list[int]:
    """Greedy spanning subset, preferring points whose inner-product profile
    against the already-chosen basis is shared by as few other points as
    possible (cheapest backtracking fan-out)."""
    chosen: list[int] = []
    rows: list[Vec] = []
    while True:
        best = None
        best_score = None
        for i, p in enumerate(cfg.points):
            if i in chosen:
                continue
            if rl.rank(rl.mat(rows + [p])) == len(rows):
                continue
            profile = tuple(cfg.gram[i][j] for j in chosen)
            score = sum(
                1
                for k in range(cfg.size)
                if tuple(cfg.gram[k][j] for j in chosen) == profile
            )
            if best_score is None or score < best_score:
                best, best_score = i, score
        if best is None:
            return chosen
        chosen.append(best)
        rows.append(cfg.points[best])


def stabilizer_group(
    cfg: ShiftedConfig,
    point_cap: int = DEFAULT_POINT_CAP,
    rank_cap: int = DEFAULT_RANK_CAP,
) -> list[OrthoMap]:
    """All orthogonal maps of span X permuting X, extended by the identity.

    Gram-preserving backtracking: images of a spanning subset are chosen
    among points with exactly matching pairwise inner products; each
    complete assignment is accepted only if the induced isometry maps all
    of X onto X.  The result is the full finite group, not a sample.
    """
    if cfg.size > point_cap:
        raise CapExceeded("configuration size", cfg.size, point_cap)
    basis = _select_basis(cfg)
    r = len(basis)
    if r > rank_cap:
        raise CapExceeded("configuration span rank", r, rank_cap)
    n = cfg.size
    if r == 0:
        d = len(cfg.points[0]) if cfg.points else 0
        return [OrthoMap(matrix=rl.identity(d), permutation=tuple(range(n)))]

    perms: set[tuple[int, ...]] = set()
    images = [0] * r

    def extend() -> tuple[int, ...] | None:
        # Profile of x against the basis must be reproduced against the images.
        lookup = {tuple(cfg.gram[y][images[j]] for j in range(r)): y for y in range(n)}
        perm = []
        for x in range(n):
            y = lookup.get(tuple(cfg.gram[x][basis[j]] for j in range(r)))
            if y is None:
                return None
            perm.append(y)
        if sorted(perm) != list(range(n)):
            return None
        return tuple(perm)

    def backtrack(depth: int):
        if depth == r:
            p = extend()
            if p is not None:
                perms.add(p)
            return
        for cand in range(n):
            if all(cfg.gram[cand][images[j]] == cfg.gram[basis[depth]][basis[j]] for j in range(depth)):
                if cfg.gram[cand][cand] == cfg.gram[basis[depth]][basis[depth]]:
                    images[depth] = cand
                    backtrack(depth + 1)

    backtrack(0)

    d = len(cfg.points[0])
    b_cols = rl.transpose(rl.mat([cfg.points[i] for i in basis]))  # d x r
    proj = rl.matmul(rl.inverse(rl.matmul(rl.transpose(b_cols), b_cols)), rl.transpose(b_cols))  # r x d
    complement = rl.mat_sub(rl.identity(d), rl.matmul(b_cols, proj))

    out = []
    for perm in sorted(perms):
        c_cols = rl.transpose(rl.mat([cfg.points[perm[i]] for i in basis]))
        phi = rl.mat_add(rl.matmul(c_cols, proj), complement)
        if rl.matmul(rl.transpose(phi), phi) != rl.identity(d):
            raise InternalConsistencyError("stabilizer candidate is not orthogonal")
        for i, p in enumerate(cfg.points):
            if rl.matvec(phi, p) != cfg.points[perm[i]]:
                raise InternalConsistencyError("stabilizer permutation mismatch")
        out.append(OrthoMap(matrix=phi, permutation=perm))
    return out


def orbits(cfg: ShiftedConfig, group: list[OrthoMap]) -> list[tuple[int, ...]]:
    """Orbits of the point indices under the group, sorted by smallest member."""
    parent = list(range(cfg.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in group:
        for i, j in enumerate(g.permutation):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    buckets: dict[int, list[int]] = {}
    for i in range(cfg.size):
        buckets.setdefault(find(i), []).append(i)
    return sorted(tuple(sorted(v)) for v in buckets.values())


def check_transitivity(cfg: ShiftedConfig, group: list[OrthoMap]) -> bool:
    return len(orbits(cfg, group)) == 1


def check_weyl_inclusion(
    rs: RootSystem, cfg: ShiftedConfig, weyl_cap: int = rsys.DEFAULT_WEYL_CAP
) -> tuple[bool, list[tuple[WeylElement, tuple[int, ...]]]]:
    """Does every Weyl element permute the shifted configuration?

    On shifted points the dislocated action mu -> w(mu+delta)-delta is the
    plain linear action, so this checks w(X) = X for all w and returns the
    induced permutations as witnesses.
    """
    index = {p: i for i, p in enumerate(cfg.points)}
    witnesses = []
    for w in rsys.weyl_group(rs, weyl_cap):
        perm = []
        for p in cfg.points:
            q = w.apply(p)
            j = index.get(q)
            if j is None:
                return False, []
            perm.append(j)
        witnesses.append((w, tuple(perm)))
    return True, witnesses
