"""Representation-theoretic quantities: dimensions, weight multiplicities,
tensor and exterior decompositions, real/complex/quaternionic type.

Everything is exact.  Weight multiplicities come from the Freudenthal
recursion over dominant weights (expanded along Weyl orbits); tensor
products use the signed-reflection (Racah/Klimyk) rule; exterior powers
use Newton's identities on characters.  Characters are dicts keyed by
integer fundamental-weight coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from functools import lru_cache

from . import ratlinalg as rl
from . import rootsys as rsys
from . import weights as wts
from .errors import InternalConsistencyError, NonDominantWeight
from .rootsys import RootSystem
from .weights import LatticeChoice, Weight

Coords = tuple[int, ...]


class RepType(Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNIONIC = "quaternionic"


class KMode(Enum):
    TRIVIAL = "trivial"
    DIAGONAL = "diagonal"
    TORUS = "torus"


@dataclass(frozen=True, eq=False)
class RepLabel:
    """An irreducible representation: a root system and a dominant highest weight."""

    rs: RootSystem
    highest: Weight

    def __post_init__(self):
        if not self.highest.is_dominant():
            raise NonDominantWeight(f"highest weight {self.highest.fw_coords} must be dominant")

    def __eq__(self, other):
        return (
            isinstance(other, RepLabel)
            and self.rs is other.rs
            and self.highest.fw_coords == other.highest.fw_coords
        )

    def __hash__(self):
        return hash((id(self.rs), self.highest.fw_coords))


def rep(rs: RootSystem, fw_coords) -> RepLabel:
    return RepLabel(rs, wts.make_weight(rs, fw_coords))


def adjoint_rep(rs: RootSystem) -> RepLabel:
    coords = tuple(int(c) for c in rs.fw_coords(rsys.highest_root(rs)))
    return rep(rs, coords)


@dataclass(frozen=True)
class VirtualDecomposition:
    """A finite sum of irreducibles: sorted (highest-weight coords, multiplicity) pairs."""

    terms: tuple[tuple[Coords, int], ...]

    @classmethod
    def from_dict(cls, d: dict[Coords, int]) -> "VirtualDecomposition":
        return cls(tuple(sorted((c, m) for c, m in d.items() if m != 0)))

    def as_dict(self) -> dict[Coords, int]:
        return dict(self.terms)

    def get(self, coords: Coords) -> int:
        return self.as_dict().get(tuple(coords), 0)

    def total_dim(self, rs: RootSystem) -> int:
        return sum(m * weyl_dim(rep(rs, c)) for c, m in self.terms)


def trivial_decomposition(rs: RootSystem) -> VirtualDecomposition:
    return VirtualDecomposition.from_dict({(0,) * rs.rank: 1})


def weyl_dim(r: RepLabel) -> int:
    """dim V^mu by the Weyl product formula; exact, asserts integrality."""
    rs = r.rs
    mu_d = rl.vadd(r.highest.ambient, rs.delta)
    num = Q(1)
    den = Q(1)
    for a in rs.positive_roots:
        num *= rl.dot(mu_d, a)
        den *= rl.dot(rs.delta, a)
    d = num / den
    if d.denominator != 1 or d <= 0:
        raise InternalConsistencyError(f"Weyl dimension {d} is not a positive integer")
    return int(d)


def _reflect_coords(rs: RootSystem, m: Coords, i: int) -> Coords:
    row = rs.cartan_matrix[i]
    return tuple(mj - m[i] * row[j] for j, mj in enumerate(m))


def weyl_orbit(rs: RootSystem, coords: Coords) -> set[Coords]:
    """The Weyl orbit of a weight, in fundamental-weight coordinates."""
    start = tuple(int(c) for c in coords)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(rs.rank):
                r = _reflect_coords(rs, m, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def _dominant_coords_of(rs: RootSystem, coords: Coords) -> Coords:
    m = tuple(coords)
    while True:
        for i, mi in enumerate(m):
            if mi < 0:
                m = _reflect_coords(rs, m, i)
                break
        else:
            return m


@lru_cache(maxsize=None)
def _simple_root_coords(rs: RootSystem) -> tuple[Coords, ...]:
    # alpha_i in fundamental-weight coordinates = i-th row of the Cartan matrix.
    return tuple(tuple(row) for row in rs.cartan_matrix)


@lru_cache(maxsize=None)
def _dominant_weight_multiplicities(rs: RootSystem, coords: Coords) -> dict[Coords, int]:
    """Freudenthal recursion: multiplicities of the dominant weights of V^mu."""
    mu = wts.make_weight(rs, coords)
    mu_d = rl.vadd(mu.ambient, rs.delta)
    mu_d_sq = rs.inner(mu_d, mu_d)
    mu_sq = rs.inner(mu.ambient, mu.ambient)

    # Dominant candidates: mu - sum c_i alpha_i with c >= 0 integral, inside the
    # shifted ball |nu + delta|^2 <= |mu + delta|^2.  Enumerate c on an exact
    # ellipsoid: |mu + delta - A^T c|^2 <= |mu + delta|^2.
    simple = rs.simple_roots
    n = rs.rank
    gram_a = rl.mat([[rs.inner(a, b) for b in simple] for a in simple])
    rhs = rl.vec([rs.inner(a, mu_d) for a in simple])
    center = rl.solve(gram_a, rhs)
    bound = rl.dot(center, rl.matvec(gram_a, center))

    candidates: list[tuple[int, Coords]] = []
    for c in rl.ellipsoid_points(gram_a, center, bound):
        if any(ci < 0 for ci in c):
            continue
        nu = tuple(mi - sum(ci * row[j] for ci, row in zip(c, rs.cartan_matrix)) for j, mi in enumerate(coords))
        if all(x >= 0 for x in nu):
            candidates.append((sum(c), nu))
    candidates.sort()

    mults: dict[Coords, int] = {}
    for height, nu_coords in candidates:
        if height == 0:
            mults[nu_coords] = 1
            continue
        nu = rs.from_fw_coords(nu_coords)
        nu_d = rl.vadd(nu, rs.delta)
        denom = mu_d_sq - rs.inner(nu_d, nu_d)
        acc = Q(0)
        for a in rs.positive_roots:
            k = 1
            while True:
                w = rl.vadd(nu, rl.vscale(k, a))
                if rs.inner(w, w) > mu_sq:
                    break
                m = mults.get(_dominant_coords_of(rs, tuple(int(x) for x in rs.fw_coords(w))), 0)
                if m:
                    acc += 2 * m * rs.inner(w, a)
                k += 1
        val = acc / denom
        if val.denominator != 1:
            raise InternalConsistencyError("non-integral Freudenthal multiplicity")
        if val:
            mults[nu_coords] = int(val)
    return mults


def weight_multiplicities(r: RepLabel) -> dict[Coords, int]:
    """The full weight multiset of V^mu as {fw-coords: multiplicity}."""
    return dict(_full_weight_multiplicities(r.rs, r.highest.fw_coords))


@lru_cache(maxsize=None)
def _full_weight_multiplicities(rs: RootSystem, coords: Coords) -> tuple[tuple[Coords, int], ...]:
    table: dict[Coords, int] = {}
    for nu, m in _dominant_weight_multiplicities(rs, coords).items():
        for w in weyl_orbit(rs, nu):
            table[w] = m
    return tuple(sorted(table.items()))


def tensor_decompose(a: RepLabel, b: RepLabel) -> VirtualDecomposition:
    """Decompose V^a (x) V^b by the signed-reflection rule on the weights of b."""
    if a.rs is not b.rs:
        raise ValueError("tensor factors must share one root system")
    rs = a.rs
    if weyl_dim(b) > weyl_dim(a):
        a, b = b, a
    acc: dict[Coords, int] = {}
    one = (1,) * rs.rank
    for nu, m in _full_weight_multiplicities(rs, b.highest.fw_coords):
        t = tuple(x + 1 + y for x, y in zip(a.highest.fw_coords, nu))
        dom, elem = rsys.to_dominant(rs, rs.from_fw_coords(t))
        dc = tuple(int(x) for x in rs.fw_coords(dom))
        if any(x == 0 for x in dc):
            continue
        target = tuple(x - y for x, y in zip(dc, one))
        acc[target] = acc.get(target, 0) + m * elem.det()
    out = {c: m for c, m in acc.items() if m != 0}
    if any(m < 0 for m in out.values()):
        raise InternalConsistencyError("negative multiplicity in a genuine tensor product")
    return VirtualDecomposition.from_dict(out)


def _char_convolve(c1: dict[Coords, int], c2: dict[Coords, int]) -> dict[Coords, int]:
    out: dict[Coords, int] = {}
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return {w: m for w, m in out.items() if m != 0}


def character_of_decomposition(rs: RootSystem, vd: VirtualDecomposition) -> dict[Coords, int]:
    out: dict[Coords, int] = {}
    for coords, mult in vd.terms:
        for w, m in _full_weight_multiplicities(rs, coords):
            out[w] = out.get(w, 0) + mult * m
    return {w: m for w, m in out.items() if m != 0}


def decompose_character(rs: RootSystem, char: dict[Coords, int]) -> VirtualDecomposition:
    """Peel off highest constituents; valid for genuine (nonnegative) characters."""
    work = dict(char)
    found: dict[Coords, int] = {}
    while work:
        dominants = [w for w in work if all(x >= 0 for x in w)]
        if not dominants:
            raise InternalConsistencyError("character with no dominant support is not genuine")
        nu = max(dominants, key=lambda w: (wts.shifted_norm_sq(rs, wts.make_weight(rs, w)), w))
        mult = work[nu]
        if mult < 0:
            raise InternalConsistencyError("negative leading multiplicity in character")
        found[nu] = found.get(nu, 0) + mult
        for w, m in _full_weight_multiplicities(rs, nu):
            nm = work.get(w, 0) - mult * m
            if nm:
                work[w] = nm
            else:
                work.pop(w, None)
    return VirtualDecomposition.from_dict(found)


def exterior_powers(r: RepLabel, pmax: int) -> list[VirtualDecomposition]:
    """Exterior powers Lambda^p V for p = 0..pmax via Newton's identities on characters."""
    rs = r.rs
    base = dict(_full_weight_multiplicities(rs, r.highest.fw_coords))
    zero = (0,) * rs.rank

    def adams(k: int) -> dict[Coords, Q]:
        return {tuple(k * x for x in w): Q(m) for w, m in base.items()}

    def convolve_q(c1, c2):
        out: dict[Coords, Q] = {}
        for w1, m1 in c1.items():
            for w2, m2 in c2.items():
                w = tuple(x + y for x, y in zip(w1, w2))
                out[w] = out.get(w, Q(0)) + m1 * m2
        return {w: m for w, m in out.items() if m != 0}

    chars: list[dict[Coords, Q]] = [{zero: Q(1)}]
    for p in range(1, pmax + 1):
        acc: dict[Coords, Q] = {}
        for k in range(1, p + 1):
            term = convolve_q(adams(k), chars[p - k])
            sign = 1 if k % 2 == 1 else -1
            for w, m in term.items():
                acc[w] = acc.get(w, Q(0)) + sign * m
        ep = {}
        for w, m in acc.items():
            v = m / p
            if v.denominator != 1:
                raise InternalConsistencyError("non-integral exterior-power character")
            if v:
                ep[w] = v
        chars.append(ep)

    out = []
    for ch in chars:
        out.append(decompose_character(rs, {w: int(m) for w, m in ch.items()}))
    return out


def dual_label(r: RepLabel) -> RepLabel:
    return RepLabel(r.rs, wts.dual_weight(r.rs, r.highest))


def classify_type(r: RepLabel) -> RepType:
    """Real/complex/quaternionic type of V^mu.

    Complex iff mu is not self-dual; otherwise the parity of
    sum_{alpha>0} <mu, alpha^vee> separates real (even) from quaternionic (odd).
    """
    rs = r.rs
    if dual_label(r).highest.fw_coords != r.highest.fw_coords:
        return RepType.COMPLEX
    s = Q(0)
    for a in rs.positive_roots:
        s += rs.pairing(r.highest.ambient, a)
    if s.denominator != 1:
        raise InternalConsistencyError("non-integral coroot pairing sum")
    return RepType.QUATERNIONIC if int(s) % 2 else RepType.REAL


def bold_g_label(reps_list) -> str:
    """Symmetry-group label: plain "G" when every listed type is real, else "Q8xG"."""
    for r in reps_list:
        if classify_type(r) is not RepType.REAL:
            return "Q8xG"
    return "G"


def invariant_dim(V, U, kmode: KMode) -> int:
    """Dimension of the K-invariant subspace of V (x) U for the supported K modes.

    - TRIVIAL: V a RepLabel, U a VirtualDecomposition over the same group;
      everything is invariant, so dim V * dim U.
    - DIAGONAL: V a pair (V1, V2) of RepLabels over the factor group G',
      U a VirtualDecomposition over G'; counts the trivial constituents of
      V1 (x) V2 (x) U.
    - TORUS: V a RepLabel, U a {torus-weight coords: multiplicity} multiset;
      counts zero-weight vectors of V (x) U.
    """
    if kmode is KMode.TRIVIAL:
        return weyl_dim(V) * U.total_dim(V.rs)
    if kmode is KMode.DIAGONAL:
        v1, v2 = V
        t = tensor_decompose(v1, v2)
        total = 0
        for tau, mu_mult in U.terms:
            tau_dual = dual_label(rep(v1.rs, tau)).highest.fw_coords
            total += mu_mult * t.get(tau_dual)
        return total
    if kmode is KMode.TORUS:
        wm = weight_multiplicities(V)
        return sum(m * wm.get(tuple(-x for x in u), 0) for u, m in U.items())
    raise ValueError(f"unsupported K mode {kmode}")
