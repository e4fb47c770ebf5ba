"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.  No
floating point anywhere in this module; callers that want floats convert
at the very end.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import isqrt
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, NotPositiveDefinite

Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]

ZERO = Q(0)
ONE = Q(1)


def frac(x) -> Q:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Q):
        return x
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str):
        return Q(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged rows")
    return m


def vadd(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vsub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vscale(c, x: Vec) -> Vec:
    c = frac(c)
    return tuple(c * a for a in x)


def dot(x: Vec, y: Vec) -> Q:
    if len(x) != len(y):
        raise DimensionMismatch(f"dot of lengths {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), ZERO)


def identity(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def matmul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch("matmul shapes")
    bt = transpose(b)
    return tuple(tuple(dot(ra, cb) for cb in bt) for ra in a)


def matvec(a: Mat, x: Vec) -> Vec:
    return tuple(dot(r, x) for r in a)


def outer(x: Vec, y: Vec) -> Mat:
    return tuple(tuple(a * b for b in y) for a in x)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(vadd(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(vsub(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_scale(c, a: Mat) -> Mat:
    return tuple(vscale(c, r) for r in a)


def _elim(rows: list[list[Q]], ncols: int) -> tuple[list[list[Q]], list[int]]:
    """In-place fraction Gauss elimination; returns (echelon rows, pivot cols)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(a: Mat) -> int:
    if not a:
        return 0
    rows = [list(r) for r in a]
    _, pivots = _elim(rows, len(a[0]))
    return len(pivots)


def inverse(a: Mat) -> Mat:
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("inverse of non-square matrix")
    aug = [list(r) + list(e) for r, e in zip(a, identity(n))]
    rows, pivots = _elim(aug, n)
    if len(pivots) != n:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in rows)


def solve(a: Mat, b: Vec) -> Vec:
    """Solve a @ x = b for square invertible a."""
    return matvec(inverse(a), b)


def det(a: Mat) -> Q:
    """Exact determinant via Bareiss on the denominator-cleared integer matrix."""
    n = len(a)
    if n == 0:
        return ONE
    if any(len(r) != n for r in a):
        raise DimensionMismatch("det of non-square matrix")
    scale = ONE
    m: list[list[int]] = []
    for row in a:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        scale *= lcm
        m.append([int(x * lcm) for x in row])
    # Bareiss: exact integer one-step fraction-free elimination.
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return ZERO
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Q(sign * m[n - 1][n - 1], 1) / scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def ldl(g: Mat) -> tuple[list[Q], list[list[Q]]]:
    """Decompose symmetric positive-definite g as Q(y) = sum_i d[i]*(y_i + sum_{j>i} u[i][j] y_j)^2.

    Returns (d, u) with u unit upper triangular.  Raises NotPositiveDefinite
    on a nonpositive pivot.
    """
    n = len(g)
    a = [[g[i][j] for j in range(n)] for i in range(n)]
    d: list[Q] = [ZERO] * n
    u = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise NotPositiveDefinite(f"pivot {i} is {d[i]}")
        u[i][i] = ONE
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= d[i] * u[i][k] * u[i][l]
                a[l][k] = a[k][l]
    return d, u


def is_positive_definite(g: Mat) -> bool:
    try:
        ldl(g)
        return True
    except NotPositiveDefinite:
        return False


def floor_sqrt(x: Q) -> int:
    """floor(sqrt(x)) for a nonnegative rational, exactly."""
    if x < 0:
        raise ValueError("negative radicand")
    return isqrt(x.numerator * x.denominator) // x.denominator


def int_interval_shifted_square(c: Q, bound: Q) -> range:
    """All integers y with (y + c)^2 <= bound, as a range, exactly.

    Empty range when bound < 0.  Pure integer arithmetic throughout.
    """
    if bound < 0:
        return range(0)
    cn, cd = c.numerator, c.denominator
    # (y*cd + cn)^2 <= bound*cd^2 ; integer t = y*cd + cn, so t^2 <= floor(X).
    x = bound * cd * cd
    t_max = isqrt(x.numerator // x.denominator)
    lo = -((t_max + cn) // cd)  # ceil((-t_max - cn)/cd) = -floor((t_max + cn)/cd)
    hi = (t_max - cn) // cd
    return range(lo, hi + 1)


def ellipsoid_points(g: Mat, center: Vec, bound: Q) -> Iterator[tuple[int, ...]]:
    """Integer points y with (y - center)^T g (y - center) <= bound.

    g must be symmetric positive definite; enumeration is fully exact
    (Fincke-Pohst with a rational LDL^T in place of Cholesky).
    """
    n = len(g)
    if bound < 0:
        return
    d, u = ldl(g)
    y = [0] * n

    def descend(i: int, remaining: Q) -> Iterator[tuple[int, ...]]:
        # Level i contributes d[i]*(z_i + sum_{j>i} u[i][j] z_j)^2 with z = y - center.
        shift = -center[i] + sum((u[i][j] * (y[j] - center[j]) for j in range(i + 1, n)), ZERO)
        for yi in int_interval_shifted_square(shift, remaining / d[i]):
            y[i] = yi
            used = d[i] * (yi + shift) ** 2
            if i == 0:
                yield tuple(y)
            else:
                yield from descend(i - 1, remaining - used)
        y[i] = 0

    yield from descend(n - 1, bound)


def quad_form(g: Mat, y: Sequence) -> Q:
    v = vec(y)
    return dot(v, matvec(g, v))
