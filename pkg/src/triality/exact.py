"""Exact rational linear algebra: dense matrices, characteristic polynomials,
kernels. Everything is built on `fractions.Fraction`; no floating point is
used anywhere in this package.

Determinants use fraction-free Bareiss elimination on an integer-rescaled
copy, characteristic polynomials use the Faddeev-LeVerrier recursion, and
null spaces come from exact reduced row echelon form. All results are exact,
which is what the rest of the toolkit relies on: every downstream check is an
identity, never a tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ConsistencyError(RuntimeError):
    """An internal invariant failed; signals a construction bug, not bad input."""


def format_rational(value: Rational) -> str:
    """Canonical string form: "p/q" in lowest terms, or "p" when q == 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Rational:
    """Parse "p/q" or "p"; raises ValueError on anything else."""
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


class Polynomial:
    """Univariate polynomial over the rationals, coefficients indexed by degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Rational]):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Rational, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Rational:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return _ZERO

    def __call__(self, x: Rational) -> Rational:
        acc = _ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)!r})"


class SquareMatrix:
    """Immutable dense square matrix of rationals.

    Sized for this toolkit: 4x4 transformation blocks, 8x8 antisymmetric
    matrices, and the 28x28 action on so(8) coefficients.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Iterable[Iterable[Rational]]):
        frozen = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(frozen)
        if n == 0 or any(len(row) != n for row in frozen):
            raise ValueError("matrix must be square and non-empty")
        self.dim = n
        self.rows = frozen

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "SquareMatrix":
        return cls([[_ZERO] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[Rational]) -> "SquareMatrix":
        n = len(entries)
        return cls([[Fraction(entries[i]) if i == j else _ZERO for j in range(n)]
                    for i in range(n)])

    def __getitem__(self, i: int) -> tuple[Rational, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SquareMatrix({[list(map(str, row)) for row in self.rows]})"

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check_dim(other)
        return SquareMatrix(tuple(x + y for x, y in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows))

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check_dim(other)
        return SquareMatrix(tuple(x - y for x, y in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows))

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix(tuple(-x for x in row) for row in self.rows)

    def __mul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check_dim(other)
        n = self.dim
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            # skip zero entries; the 8x8 generator matrices are very sparse
            nz = [(k, v) for k, v in enumerate(row) if v != 0]
            out.append(tuple(sum((v * cols[j][k] for k, v in nz), _ZERO)
                             for j in range(n)))
        return SquareMatrix(out)

    def _check_dim(self, other: "SquareMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def scale(self, factor: Rational) -> "SquareMatrix":
        f = Fraction(factor)
        return SquareMatrix(tuple(f * x for x in row) for row in self.rows)

    def power(self, k: int) -> "SquareMatrix":
        """k-th power by repeated exact multiplication; the 0-th power is I."""
        if k < 0 or k != int(k):
            raise ValueError("exponent must be a non-negative integer")
        result = SquareMatrix.identity(self.dim)
        for _ in range(int(k)):
            result = result * self
        return result

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(zip(*self.rows))

    def trace(self) -> Rational:
        return sum((self.rows[i][i] for i in range(self.dim)), _ZERO)

    def apply(self, vector: Sequence[Rational]) -> tuple[Rational, ...]:
        if len(vector) != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {len(vector)}")
        nz = [(j, Fraction(v)) for j, v in enumerate(vector) if v != 0]
        return tuple(sum((row[j] * v for j, v in nz), _ZERO) for row in self.rows)

    def is_antisymmetric(self) -> bool:
        return all(self.rows[i][j] == -self.rows[j][i]
                   for i in range(self.dim) for j in range(i, self.dim))

    def determinant(self) -> Rational:
        """Exact determinant via fraction-free Bareiss elimination.

        Rows are rescaled to integers first so the elimination runs entirely
        in (big) integer arithmetic.
        """
        scale = _ONE
        work: list[list[int]] = []
        for row in self.rows:
            d = lcm(*(x.denominator for x in row))
            scale *= d
            work.append([int(x * d) for x in row])
        det = _bareiss_determinant(work)
        return Fraction(det) / scale

    def char_poly(self) -> Polynomial:
        """Characteristic polynomial det(self - x*I), exact.

        Computed with the Faddeev-LeVerrier recursion; the divisions it
        performs are exact over the rationals.
        """
        n = self.dim
        cs: list[Rational] = []
        mk = SquareMatrix.identity(n)
        for k in range(1, n + 1):
            nk = self * mk
            ck = -nk.trace() / k
            cs.append(ck)
            if k < n:
                mk = SquareMatrix(tuple(nk.rows[i][j] + (ck if i == j else 0)
                                        for j in range(n)) for i in range(n))
        # det(x*I - A) = x^n + c1 x^(n-1) + ... + cn; flip by (-1)^n for det(A - x*I)
        sign = _ONE if n % 2 == 0 else -_ONE
        coeffs = [_ZERO] * (n + 1)
        coeffs[n] = sign
        for k, ck in enumerate(cs, start=1):
            coeffs[n - k] = sign * ck
        return Polynomial(coeffs)

    def kernel_basis(self) -> list[tuple[Rational, ...]]:
        """Basis of the exact null space; empty list iff the matrix is invertible."""
        return kernel_basis_of_rows([list(row) for row in self.rows], self.dim)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[str]]) -> "SquareMatrix":
        return cls([[parse_rational(x) for x in row] for row in rows])


def _bareiss_determinant(a: list[list[int]]) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rref(rows: list[list[Rational]]) -> tuple[list[list[Rational]], list[int]]:
    """Reduced row echelon form (in place on the given copy) and pivot columns."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = _ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        lead = rows[r]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def kernel_basis_of_rows(rows: list[list[Rational]], n_cols: int) -> list[tuple[Rational, ...]]:
    """Kernel basis of the linear map given by `rows`, one vector per free column."""
    reduced, pivots = rref([list(r) for r in rows])
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * n_cols
        v[free] = _ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][free]
        basis.append(tuple(v))
    return basis


def primitive_integer_vector(vector: Sequence[Rational]) -> tuple[Rational, ...]:
    """Rescale a nonzero rational vector to coprime integers, first nonzero > 0."""
    denoms = [Fraction(x).denominator for x in vector]
    scaled = [int(Fraction(x) * lcm(*denoms)) for x in vector]
    g = 0
    for x in scaled:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    scaled = [x // g for x in scaled]
    lead = next(x for x in scaled if x != 0)
    if lead < 0:
        scaled = [-x for x in scaled]
    return tuple(Fraction(x) for x in scaled)


class SpanSolver:
    """Expresses vectors in the span of a fixed independent family, exactly.

    Precomputes a left inverse of the column matrix once, so repeated
    membership queries (bracket-closure checks, adjoint representations)
    cost one small matrix-vector product each.
    """

    def __init__(self, columns: Sequence[Sequence[Rational]]):
        if not columns:
            raise ValueError("need at least one column")
        self.columns = [tuple(Fraction(x) for x in col) for col in columns]
        self.n_rows = len(self.columns[0])
        d = len(self.columns)
        if any(len(col) != self.n_rows for col in self.columns):
            raise ValueError("columns must have equal length")
        aug = [[self.columns[c][r] for c in range(d)]
               + [_ONE if k == r else _ZERO for k in range(self.n_rows)]
               for r in range(self.n_rows)]
        reduced, pivots = rref(aug)
        if pivots[:d] != list(range(d)):
            raise ValueError("columns are linearly dependent")
        # rows 0..d-1 of the elimination record form a left inverse
        self._left_inverse = [tuple(reduced[r][d:]) for r in range(d)]

    @property
    def dim(self) -> int:
        return len(self.columns)

    def coords(self, vector: Sequence[Rational]) -> Optional[tuple[Rational, ...]]:
        """Coordinates of `vector` in the span, or None if it lies outside."""
        if len(vector) != self.n_rows:
            raise ValueError("dimension mismatch")
        vec = [Fraction(x) for x in vector]
        nz = [(j, v) for j, v in enumerate(vec) if v != 0]
        x = tuple(sum((row[j] * v for j, v in nz), _ZERO) for row in self._left_inverse)
        for r in range(self.n_rows):
            recon = sum((self.columns[c][r] * x[c] for c in range(len(x)) if x[c] != 0),
                        _ZERO)
            if recon != vec[r]:
                return None
        return x
