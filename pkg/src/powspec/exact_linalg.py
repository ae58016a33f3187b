"""Exact integer matrices, polynomials, and characteristic polynomials.

Two independent exact routes to det(xI - A) live here.  The primary one
evaluates the shifted determinant at n+1 integer points with Bareiss
elimination and interpolates; the second runs Faddeev-LeVerrier.  They
share no intermediate code beyond raw integer arithmetic, so agreement
between them is meaningful evidence of correctness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels

DEFAULT_MATRIX_CAP = 256
CAP_ENV_VAR = "POWSPEC_MATRIX_CAP"


class MatrixCapExceeded(RuntimeError):
    """Raised when an exact computation is asked for above the order cap."""


def matrix_order_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR, "")
    if not raw:
        return DEFAULT_MATRIX_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def _check_cap(n: int) -> None:
    cap = matrix_order_cap()
    if n > cap:
        raise MatrixCapExceeded(
            f"matrix order {n} exceeds the configured cap {cap}; raise {CAP_ENV_VAR} to override"
        )


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of Python ints."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError(f"matrix entries must be ints, got {v!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.n else self

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("matrix orders differ")
        return IntMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending; () is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients must be trimmed; use from_coeffs")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        out = [int(c) for c in coeffs]
        while out and out[-1] == 0:
            out.pop()
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_coeffs(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial.from_coeffs(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        acc = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def deflate(self, root: int) -> "IntPolynomial":
        """Exact synthetic division by (x - root); raises on remainder."""
        if not self.coeffs:
            raise ValueError("cannot deflate the zero polynomial")
        quotient_desc = []
        carry = 0
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quotient_desc.append(carry)
        rem = quotient_desc.pop()
        if rem != 0:
            raise ValueError(f"{root} is not a root (remainder {rem})")
        return IntPolynomial.from_coeffs(reversed(quotient_desc))

    def monic_normalized(self) -> "IntPolynomial":
        """Flip the global sign when the leading coefficient is -1."""
        if self.is_monic:
            return self
        if self.coeffs and self.coeffs[-1] == -1:
            return -self
        raise ValueError("polynomial cannot be normalized to monic by a sign flip")

    def to_coeff_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            elif d == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{d}" if mag == 1 else f"{mag}*x^{d}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def poly_x() -> IntPolynomial:
    return IntPolynomial((0, 1))


@dataclass(frozen=True)
class FactoredPolynomial:
    """scalar * product of (base ** exponent), kept unexpanded."""

    scalar: int
    factors: tuple[tuple[IntPolynomial, int], ...]

    def __post_init__(self) -> None:
        for base, e in self.factors:
            if e < 1:
                raise ValueError("factor exponents must be positive")
            if not base.coeffs:
                raise ValueError("zero polynomial is not a valid factor")

    @property
    def degree(self) -> int:
        return sum(base.degree * e for base, e in self.factors)

    def expand(self) -> IntPolynomial:
        acc = IntPolynomial((self.scalar,))
        for base, e in self.factors:
            acc = acc * base**e
        return acc

    def __call__(self, x):
        acc = self.scalar
        for base, e in self.factors:
            acc *= base(x) ** e
        return acc

    def __str__(self) -> str:
        parts = [] if self.scalar == 1 else [str(self.scalar)]
        for base, e in self.factors:
            inner = str(base)
            parts.append(f"({inner})" if e == 1 else f"({inner})^{e}")
        return " ".join(parts) if parts else "1"


def matrix_of(graph, kind: str) -> IntMatrix:
    """Adjacency, laplacian, or signless laplacian matrix of a graph."""
    if kind not in ("adjacency", "laplacian", "signless"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    n = graph.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(graph.degree(i) if kind != "adjacency" else 0)
            elif graph.has_edge(i, j):
                row.append(-1 if kind == "laplacian" else 1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def det_exact(m: IntMatrix) -> int:
    _check_cap(m.n)
    return kernels.det_bareiss(m.to_lists())


def _shifted_rows(m: IntMatrix, x: int) -> list[list[int]]:
    # xI - M
    return [
        [(x if i == j else 0) - v for j, v in enumerate(row)]
        for i, row in enumerate(m.rows)
    ]


def _newton_interpolate_integer(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Interpolating polynomial through (xs, ys), coefficients ascending.

    Divided differences run over Fractions; the final coefficients must
    come out integral or the whole computation is rejected loudly.
    """
    npts = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, npts):
        for i in range(npts - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * npts
    coeffs[0] = dd[npts - 1]
    degree = 0
    for i in range(npts - 2, -1, -1):
        # multiply accumulated poly by (x - xs[i]) and add dd[i]
        for d in range(degree, -1, -1):
            coeffs[d + 1] += coeffs[d]
            coeffs[d] = -coeffs[d] * xs[i]
        degree += 1
        coeffs[0] += dd[i]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"interpolated coefficient {c} is not an integer")
        out.append(int(c))
    return out


def char_poly_exact(m: IntMatrix) -> IntPolynomial:
    """det(xI - M) by evaluation at x = 0..n and exact interpolation.

    Always monic of degree n.  This is the primary route; see
    char_poly_leverrier for the independent cross-check.
    """
    _check_cap(m.n)
    n = m.n
    xs = list(range(n + 1))
    ys = [kernels.det_bareiss(_shifted_rows(m, x)) for x in xs]
    coeffs = _newton_interpolate_integer(xs, ys)
    poly = IntPolynomial.from_coeffs(coeffs)
    if poly.degree != n or not poly.is_monic:
        raise ArithmeticError("characteristic polynomial came out non-monic")
    return poly


def char_poly_leverrier(m: IntMatrix) -> IntPolynomial:
    """det(xI - M) by fraction-free Faddeev-LeVerrier (cross-check route)."""
    _check_cap(m.n)
    return IntPolynomial.from_coeffs(kernels.charpoly_leverrier(m.to_lists()))


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for i in range(col + 1, n):
            factor = m[i][col] / pivot
            if factor == 0:
                continue
            for j in range(col, n):
                m[i][j] -= factor * m[col][j]
    return det


def _fraction_solve(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve A X = B by Gauss-Jordan; A must be invertible."""
    n = len(a)
    w = len(b[0])
    m = [a[i][:] + b[i][:] for i in range(n)]
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            raise ZeroDivisionError("singular system")
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        m[col] = [v / pivot for v in m[col]]
        for i in range(n):
            if i == col or m[i][col] == 0:
                continue
            factor = m[i][col]
            m[i] = [v - factor * w_ for v, w_ in zip(m[i], m[col])]
    return [row[n : n + w] for row in m]


@dataclass(frozen=True)
class SchurCheckOutcome:
    passed: bool
    checked_points: tuple[int, ...]
    skipped_points: tuple[int, ...]


def schur_charpoly_check(
    a: IntMatrix, b: IntMatrix, c: IntMatrix, d: IntMatrix, points: Iterable[int]
) -> SchurCheckOutcome:
    """Verify det(xI - [[A,B],[C,D]]) = det(xI-D) * det((xI-A) - B (xI-D)^-1 C)
    at the given integer sample points.

    Points where xI - D is singular are skipped and reported; if every
    point is singular there is nothing to verify and that is an error.
    """
    order = a.n
    for blk in (b, c, d):
        if blk.n != order:
            raise ValueError("all four blocks must have the same order")
    checked, skipped = [], []
    passed = True
    for x in points:
        x = int(x)
        d_shift = [
            [Fraction((x if i == j else 0) - v) for j, v in enumerate(row)]
            for i, row in enumerate(d.rows)
        ]
        dd = _fraction_det(d_shift)
        if dd == 0:
            skipped.append(x)
            continue
        checked.append(x)
        # full shifted matrix [[xI-A, -B], [-C, xI-D]]
        top = [
            [(x if i == j else 0) - a.rows[i][j] for j in range(order)]
            + [-b.rows[i][j] for j in range(order)]
            for i in range(order)
        ]
        bottom = [
            [-c.rows[i][j] for j in range(order)]
            + [(x if i == j else 0) - d.rows[i][j] for j in range(order)]
            for i in range(order)
        ]
        lhs = kernels.det_bareiss(top + bottom)
        dinv_c = _fraction_solve(
            d_shift, [[Fraction(v) for v in row] for row in c.rows]
        )
        schur = [
            [
                Fraction((x if i == j else 0) - a.rows[i][j])
                - sum(Fraction(b.rows[i][t]) * dinv_c[t][j] for t in range(order))
                for j in range(order)
            ]
            for i in range(order)
        ]
        rhs = dd * _fraction_det(schur)
        if rhs != lhs:
            passed = False
    if not checked:
        raise ValueError("all sample points left the lower-right block singular")
    return SchurCheckOutcome(passed, tuple(checked), tuple(skipped))
