"""Exact metric-parameterized operators on irreducibles of SU(2)^c x T^n.

Builds the operator -sum_ij kappa_ij M_i M_j from explicit Gaussian-rational
representation matrices, extracts characteristic polynomials and resultants,
and searches for rational witness metrics certifying generic spectral
simplicity of a cap-bounded representation list.

Normalization: each su(2) copy uses the basis Y_1, Y_2, Y_3 given by the
symmetric-power images of -(i/2)*sigma_k, which is orthonormal for the
bi-invariant form <X, Y> = -2 trace(XY) on the defining representation.  With
this choice every matrix entry is a Gaussian rational, and the operator at
kappa = identity acts on the spin-(m/2) factor by m(m+2)/4 — exactly half of
the weight-lattice Casimir value m(m+2)/2 computed by the weights module at
the |alpha|^2 = 2 normalization.  The factor 2 is fixed and documented here;
casimir_cross_check() asserts it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, InternalConsistencyError, NotPositiveDefinite
from .gaussian import GZERO, QQi, gadd, gconj_transpose, gidentity, gkron, gmat, gmatmul, gscale, gtrace, gzeros
from .polyq import RationalPoly, poly_from_real_coeff_check, resultant, squarefree_decomposition
from .ratlinalg import frac, is_positive_definite

Q = Fraction


@dataclass(frozen=True)
class GroupSpec:
    """The group SU(2)^c x T^n with its 3c + n dimensional Lie algebra."""

    su2_copies: int
    torus_rank: int = 0

    def __post_init__(self):
        if self.su2_copies < 0 or self.torus_rank < 0:
            raise ValueError("factor counts must be nonnegative")
        if self.su2_copies + self.torus_rank < 1:
            raise ValueError("need at least one group factor")

    @property
    def algebra_dim(self) -> int:
        return 3 * self.su2_copies + self.torus_rank


@dataclass(frozen=True)
class IrrepSpec:
    """Irreducible label: spin parameters m_i (spin m_i/2) plus a torus character."""

    spins: tuple
    torus_char: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "spins", tuple(int(m) for m in self.spins))
        object.__setattr__(self, "torus_char", tuple(int(z) for z in self.torus_char))
        if any(m < 0 for m in self.spins):
            raise ValueError("spin parameters must be nonnegative integers")

    @property
    def dim(self) -> int:
        d = 1
        for m in self.spins:
            d *= m + 1
        return d

    def dual(self) -> "IrrepSpec":
        return IrrepSpec(self.spins, tuple(-z for z in self.torus_char))

    def rep_type(self) -> str:
        """Real/complex/quaternionic trichotomy for this product family.

        A nonzero torus character breaks self-duality (complex type); otherwise
        the product of spin factors is self-dual with indicator (-1)^(sum m_i).
        """
        if any(z != 0 for z in self.torus_char):
            return "complex"
        return "quaternionic" if sum(self.spins) % 2 == 1 else "real"


@dataclass(frozen=True)
class MetricParam:
    """Symmetric rational matrix parameterizing the operator (not assumed definite)."""

    kappa: tuple

    def __post_init__(self):
        rows = tuple(tuple(frac(x) for x in row) for row in self.kappa)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("kappa must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("kappa must be exactly symmetric")
        object.__setattr__(self, "kappa", rows)

    @property
    def n(self) -> int:
        return len(self.kappa)

    def is_positive_definite(self) -> bool:
        return is_positive_definite([list(r) for r in self.kappa])


def diag_metric(entries) -> MetricParam:
    vals = [frac(x) for x in entries]
    n = len(vals)
    return MetricParam(tuple(tuple(vals[i] if i == j else Q(0) for j in range(n)) for i in range(n)))


def _su2_generators(m: int):
    """The three spin-(m/2) matrices in the monomial basis x^(m-k) y^k.

    A 2x2 algebra element [[a, b], [c, d]] acts as a derivation, sending the
    basis vector e_k to (m-k)a+kd on the diagonal, k*b one step up and
    (m-k)*c one step down.  Substituting -(i/2)*sigma_k gives the triple.
    """
    half_i = QQi(0, Q(1, 2))
    half = QQi(Q(1, 2))

    def derivation(a, b, c, d):
        rows = [[GZERO] * (m + 1) for _ in range(m + 1)]
        for k in range(m + 1):
            rows[k][k] = a * QQi(m - k) + d * QQi(k)
            if k > 0:
                rows[k - 1][k] = b * QQi(k)
            if k < m:
                rows[k + 1][k] = c * QQi(m - k)
        return gmat(rows)

    y1 = derivation(GZERO, -half_i, -half_i, GZERO)
    y2 = derivation(GZERO, -half, half, GZERO)
    y3 = derivation(-half_i, GZERO, GZERO, half_i)
    return [y1, y2, y3]


def irrep_matrices(g: GroupSpec, rep: IrrepSpec):
    """Gaussian-rational matrices for the orthonormal algebra basis on V."""
    if len(rep.spins) != g.su2_copies or len(rep.torus_char) != g.torus_rank:
        raise DimensionMismatch(
            f"rep shape ({len(rep.spins)} spins, {len(rep.torus_char)} torus) does not "
            f"match group ({g.su2_copies}, {g.torus_rank})"
        )
    blocks = [_su2_generators(m) for m in rep.spins]
    dims = [m + 1 for m in rep.spins]
    total = rep.dim
    out = []
    for copy in range(g.su2_copies):
        for gen in blocks[copy]:
            acc = gidentity(1)
            for j in range(g.su2_copies):
                acc = gkron(acc, gen if j == copy else gidentity(dims[j]))
            out.append(acc)
    for z in rep.torus_char:
        out.append(gscale(QQi(0, z), gidentity(total)))
    return out


@dataclass(frozen=True)
class ExactOperator:
    matrix: tuple
    rep: IrrepSpec
    kappa_ref: MetricParam

    @property
    def dim(self) -> int:
        return len(self.matrix)


def build_operator(g: GroupSpec, rep: IrrepSpec, k: MetricParam) -> ExactOperator:
    """D = -sum_ij kappa_ij M_i M_j over the Gaussian rationals."""
    if k.n != g.algebra_dim:
        raise DimensionMismatch(f"kappa is {k.n}x{k.n}, algebra dimension is {g.algebra_dim}")
    mats = irrep_matrices(g, rep)
    d = rep.dim
    acc = gzeros(d)
    for i in range(k.n):
        row = k.kappa[i]
        for j in range(k.n):
            if row[j] == 0:
                continue
            acc = gadd(acc, gscale(QQi(-row[j]), gmatmul(mats[i], mats[j])))
    return ExactOperator(acc, rep, k)


def _monomial_weights(rep: IrrepSpec):
    """Diagonal of the invariant inner product on the monomial basis (1/binomial)."""
    weights = [Q(1)]
    for m in rep.spins:
        weights = [w / math.comb(m, k) for w in weights for k in range(m + 1)]
    return weights


def is_w_hermitian(op: ExactOperator) -> bool:
    """Exact self-adjointness for the invariant inner product.

    The monomial basis is not unitary, so the matrix need not equal its own
    conjugate transpose; self-adjointness reads W D = D^dagger W with W the
    diagonal Gram matrix of the basis.  This is what forces a real spectrum.
    """
    w = _monomial_weights(op.rep)
    d = op.dim
    dag = gconj_transpose(op.matrix)
    for i in range(d):
        for j in range(d):
            if op.matrix[i][j] * QQi(w[i]) != dag[i][j] * QQi(w[j]):
                return False
    return True


def char_poly(op: ExactOperator) -> RationalPoly:
    """Exact monic characteristic polynomial via the trace recursion.

    Division-free apart from exact integer divisions; coefficients are
    asserted to be real, anything else signals a bug in the construction.
    """
    a = op.matrix
    d = op.dim
    coeffs = [GZERO] * (d + 1)
    coeffs[d] = QQi(1)
    mk = a
    ident = gidentity(d)
    for k in range(1, d + 1):
        ck = gtrace(mk) / QQi(-k)
        coeffs[d - k] = ck
        if k < d:
            mk = gmatmul(a, gadd(mk, gscale(ck, ident)))
    p = poly_from_real_coeff_check(coeffs)
    if p.leading() != 1:
        raise InternalConsistencyError("characteristic polynomial is not monic")
    return p


@dataclass(frozen=True)
class ABCValues:
    """Separation (a), simplicity (b) and pairing (c) resultants at one metric."""

    a: Q
    b1: Optional[Q]
    b2: Optional[Q]
    c1: Optional[Q]
    c2: Optional[Q]


def abc_values(g: GroupSpec, reps, k: MetricParam) -> ABCValues:
    """a = res(p1, p2); per rep, b = res(p, p') for real/complex type and
    c = res(p, p'') for quaternionic type; the unused slot is absent."""
    v1, v2 = reps
    p1 = char_poly(build_operator(g, v1, k))
    p2 = char_poly(build_operator(g, v2, k))
    a = resultant(p1, p2)
    out = {}
    for tag, v, p in (("1", v1, p1), ("2", v2, p2)):
        if v.rep_type() == "quaternionic":
            out["b" + tag] = None
            out["c" + tag] = resultant(p, p.derivative().derivative())
        else:
            out["b" + tag] = resultant(p, p.derivative())
            out["c" + tag] = None
    return ABCValues(a, out["b1"], out["b2"], out["c1"], out["c2"])


def enumerate_reps(g: GroupSpec, rep_cap: int):
    """All irreducible labels with every m_i <= rep_cap and |z_t| <= rep_cap."""
    def spins_iter(c):
        if c == 0:
            yield ()
            return
        for rest in spins_iter(c - 1):
            for m in range(rep_cap + 1):
                yield rest + (m,)

    def torus_iter(n):
        if n == 0:
            yield ()
            return
        for rest in torus_iter(n - 1):
            for z in range(-rep_cap, rep_cap + 1):
                yield rest + (z,)

    reps = [IrrepSpec(s, z) for s in spins_iter(g.su2_copies) for z in torus_iter(g.torus_rank)]
    reps.sort(key=lambda r: (r.spins, r.torus_char))
    return reps


def witness_sequence(n: int, budget: int, seed: int):
    """Deterministic candidate metrics: graded diagonals over increasing primes,
    then seeded symmetric off-diagonal perturbations of those diagonals.

    Off-diagonal entries are essential for torus ranks >= 2: a diagonal metric
    evaluates characters (z1, z2) and (z1, -z2) to the same quadratic form, so
    only a mixed term can separate that non-dual pair.
    """
    def primes():
        cand, found = 7, 0
        while True:
            if all(cand % p for p in range(2, int(cand ** 0.5) + 1)):
                yield cand
                found += 1
            cand += 1

    out = []
    prime_list = []
    gen = primes()
    while len(prime_list) < max(budget, 1):
        prime_list.append(next(gen))
    half = (budget + 1) // 2
    for p in prime_list[:half]:
        out.append(diag_metric([Q(p + i, p) for i in range(n)]))
    rng = random.Random(seed)
    idx = 0
    while len(out) < budget:
        p = prime_list[idx % len(prime_list)]
        idx += 1
        base = [[Q(p + i, p) if i == j else Q(0) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                eps = Q(rng.randint(1, 9), p * rng.choice([11, 13, 17, 19]))
                base[i][j] = base[j][i] = eps
        out.append(MetricParam(tuple(tuple(row) for row in base)))
    return out


@dataclass(frozen=True)
class Certificate:
    status: str
    group: GroupSpec
    rep_cap: int
    witness_kappa: Optional[MetricParam]
    table: tuple
    violations: tuple
    candidates_tried: int

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def certify(g: GroupSpec, rep_cap: int, budget: int = 12, seed: int = 2026) -> Certificate:
    """Search the deterministic metric sequence for a single witness at which
    every required separation/simplicity/pairing resultant is exactly nonzero.

    Required values over the cap-bounded rep list: a(V, V') for every pair
    with V' neither V nor its dual; b(V) for real/complex type; c(V) for
    quaternionic type.  Success certifies none of those finitely many
    polynomials vanishes identically; exhausting the budget is reported as
    inconclusive, never as a failure certificate.
    """
    reps = enumerate_reps(g, rep_cap)
    last_violations = ()
    tried = 0
    for cand in witness_sequence(g.algebra_dim, budget, seed):
        tried += 1
        polys = {v: char_poly(build_operator(g, v, cand)) for v in reps}
        table = []
        violations = []
        for v in reps:
            p = polys[v]
            if v.rep_type() == "quaternionic":
                val = resultant(p, p.derivative().derivative())
                table.append(("c", v, None, val))
            else:
                val = resultant(p, p.derivative())
                table.append(("b", v, None, val))
            if val == 0:
                violations.append(table[-1])
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                v, w = reps[i], reps[j]
                if w == v.dual():
                    continue
                val = resultant(polys[v], polys[w])
                table.append(("a", v, w, val))
                if val == 0:
                    violations.append(table[-1])
        if not violations:
            return Certificate("certified", g, rep_cap, cand, tuple(table), (), tried)
        last_violations = tuple(violations)
    return Certificate("inconclusive", g, rep_cap, None, (), last_violations, tried)


@dataclass(frozen=True)
class SpectrumCluster:
    center: float
    per_rep: tuple  # ((IrrepSpec, multiplicity), ...)

    def multiplicity_map(self) -> dict:
        return dict(self.per_rep)

    def assembled_dims(self, ustar_dim: int = 1) -> dict:
        """L^2-eigenspace dimension per rep: dim U* x multiplicity x dim V*."""
        return {v: ustar_dim * mult * v.dim for v, mult in self.per_rep}


def _float_hermitian(op: ExactOperator):
    """Conjugate by W^(1/2) to land in an honestly Hermitian float matrix."""
    w = _monomial_weights(op.rep)
    d = op.dim
    s = [math.sqrt(float(x)) for x in w]
    return [[complex(op.matrix[i][j]) * s[i] / s[j] for j in range(d)] for i in range(d)]


def numeric_spectrum(g: GroupSpec, rep_list, k: MetricParam, tol: float = 1e-9, ustar_dim: int = 1):
    """Float eigenvalues per rep, clustered with relative tolerance tol.

    Requires kappa positive definite (checked exactly); returns clusters
    sorted by center, each carrying its per-rep multiplicity map and the
    assembled eigenspace dimensions at the given dim U*.
    """
    if not k.is_positive_definite():
        raise NotPositiveDefinite("kappa is not positive definite")
    pairs = []
    for v in rep_list:
        h = _float_hermitian(build_operator(g, v, k))
        for lam in np.linalg.eigvalsh(np.array(h, dtype=complex)):
            pairs.append((float(lam), v))
    pairs.sort(key=lambda t: t[0])
    clusters = []
    for lam, v in pairs:
        if clusters and lam - clusters[-1][-1][0] <= tol * max(1.0, abs(lam)):
            clusters[-1].append((lam, v))
        else:
            clusters.append([(lam, v)])
    out = []
    for group in clusters:
        center = sum(x for x, _ in group) / len(group)
        counts = {}
        for _, v in group:
            counts[v] = counts.get(v, 0) + 1
        per_rep = tuple(sorted(counts.items(), key=lambda t: (t[0].spins, t[0].torus_char)))
        out.append(SpectrumCluster(center, per_rep))
    return out


def multiplicity_at_float(p: RationalPoly, x: float, tol: float = 1e-6) -> int:
    """Exact multiplicity of the root of p nearest the float estimate x.

    p splits into squarefree layers (layer i collects the multiplicity-i
    roots); within a layer roots are simple, so the Newton residual
    |q(x)/q'(x)| is a sound distance proxy.  Exactly one layer must land
    within tol * max(1, |x|); zero or several matches mean the estimate
    cannot be trusted at this tolerance and is an error, not a guess.
    """
    _, parts = squarefree_decomposition(p)
    scale = max(1.0, abs(x))
    hits = []
    for i, part in enumerate(parts):
        if part.degree <= 0:
            continue
        dval = float(part.derivative().eval(x))
        if dval == 0.0:
            continue
        if abs(float(part.eval(x)) / dval) <= tol * scale:
            hits.append(i + 1)
    if len(hits) != 1:
        raise InternalConsistencyError(
            f"cluster center {x!r} matches {len(hits)} squarefree layers at tol {tol}")
    return hits[0]


def casimir_cross_check(m: int) -> tuple:
    """Return (abstract weight-lattice value, 2 x operator value) for spin m/2.

    The identity-metric operator must be the scalar m(m+2)/4; doubling it
    reproduces the weight-lattice value m(m+2)/2 at |alpha|^2 = 2.  Any
    mismatch is a construction bug, not a data condition.
    """
    g = GroupSpec(1)
    op = build_operator(g, IrrepSpec((m,)), diag_metric([1, 1, 1]))
    expected = QQi(Q(m * (m + 2), 4))
    d = op.dim
    for i in range(d):
        for j in range(d):
            if op.matrix[i][j] != (expected if i == j else GZERO):
                raise InternalConsistencyError("identity-metric operator is not the Casimir scalar")
    return (Q(m * (m + 2), 2), 2 * expected.re)
