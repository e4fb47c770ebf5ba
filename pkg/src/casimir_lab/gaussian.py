"""Gaussian rationals p + q*i with p, q exact Fractions, plus matrix helpers."""

from __future__ import annotations

from fractions import Fraction as Q

from .errors import DimensionMismatch


class QQi:
    """An element of Q(i).  Immutable, hashable, exact."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Q) else Q(re))
        object.__setattr__(self, "im", im if isinstance(im, Q) else Q(im))

    def __setattr__(self, *a):
        raise AttributeError("QQi is immutable")

    def __add__(self, other):
        other = _coerce(other)
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return QQi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return QQi(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n2 = other.re * other.re + other.im * other.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * QQi(other.re / n2, -other.im / n2)

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def conj(self) -> "QQi":
        return QQi(self.re, -self.im)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"QQi({self.re})"
        return f"QQi({self.re}, {self.im})"


def _coerce(x) -> QQi:
    if isinstance(x, QQi):
        return x
    if isinstance(x, (int, Q)):
        return QQi(x)
    raise TypeError(f"cannot coerce {x!r} to Q(i)")


I_UNIT = QQi(0, 1)
GZERO = QQi(0)
GONE = QQi(1)

GMat = tuple[tuple[QQi, ...], ...]


def gmat(rows) -> GMat:
    return tuple(tuple(_coerce(x) for x in r) for r in rows)


def gidentity(n: int) -> GMat:
    return tuple(tuple(GONE if i == j else GZERO for j in range(n)) for i in range(n))


def gzeros(n: int) -> GMat:
    return tuple(tuple(GZERO for _ in range(n)) for _ in range(n))


def gadd(a: GMat, b: GMat) -> GMat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def gscale(c, a: GMat) -> GMat:
    c = _coerce(c)
    return tuple(tuple(c * x for x in r) for r in a)


def gmatmul(a: GMat, b: GMat) -> GMat:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch("gmatmul shapes")
    bt = tuple(zip(*b))
    out = []
    for ra in a:
        row = []
        for cb in bt:
            s = GZERO
            for x, y in zip(ra, cb):
                if x and y:
                    s = s + x * y
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def gtrace(a: GMat) -> QQi:
    s = GZERO
    for i in range(len(a)):
        s = s + a[i][i]
    return s


def gconj_transpose(a: GMat) -> GMat:
    return tuple(tuple(a[j][i].conj() for j in range(len(a))) for i in range(len(a[0]) if a else 0))


def gkron(a: GMat, b: GMat) -> GMat:
    """Kronecker product, row-major (index = i_a * dim_b + i_b)."""
    na, nb = len(a), len(b)
    out = []
    for ia in range(na):
        for ib in range(nb):
            row = []
            for ja in range(na):
                for jb in range(nb):
                    row.append(a[ia][ja] * b[ib][jb])
            out.append(tuple(row))
    return tuple(out)
