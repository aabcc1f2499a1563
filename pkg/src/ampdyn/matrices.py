"""Dense exact matrices over Q and over imaginary quadratic fields.

Entries are ``Fraction`` or ``QuadElem``; every algorithm here is exact and
only uses field operations, so the same code serves both scalar types.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    AmpdynError,
    DimensionMismatchError,
    NonSquareError,
    RingMismatchError,
    SingularMatrixError,
)
from .poly import RatPoly, lcm, trim
from .scalars import QuadElem, as_fraction, conj, format_rational


class Matrix:
    """Immutable dense matrix, stored row-major as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_coerce(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise AmpdynError("matrices must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise AmpdynError("ragged matrix rows")
        self.rows = rows

    # construction -------------------------------------------------------
    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "Matrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [_coerce(v) for v in values]
        zero = vals[0] * 0
        return cls([[vals[i] if i == j else zero for j in range(len(vals))] for i in range(len(vals))])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        return cls(zip(*cols))

    # basic properties ---------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _require_square(self):
        if not self.is_square():
            raise NonSquareError(f"matrix is {self.nrows}x{self.ncols}")

    @property
    def zero(self):
        return self.rows[0][0] * 0

    @property
    def one(self):
        return self.zero + 1

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    def is_rational(self) -> bool:
        return all(not isinstance(x, QuadElem) or x.is_rational() for x in self.entries())

    def to_rational(self) -> "Matrix":
        if not self.is_rational():
            raise AmpdynError("matrix has irrational entries")
        return Matrix([[x.a if isinstance(x, QuadElem) else x for x in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows])

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape}")

    def scale(self, c) -> "Matrix":
        return Matrix([[x * c for x in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix([[_dot(r, c) for c in cols] for r in self.rows])
        vec = list(other)
        if len(vec) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(vec)} for {self.shape} matrix")
        return tuple(_dot(r, vec) for r in self.rows)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def __pow__(self, k: int) -> "Matrix":
        self._require_square()
        if k < 0:
            return inverse(self) ** (-k)
        out = Matrix.identity(self.nrows, self.one)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conj_transpose(self) -> "Matrix":
        return Matrix([[conj(x) for x in r] for r in zip(*self.rows)])

    def trace(self):
        self._require_square()
        return sum((self.rows[i][i] for i in range(self.nrows)), self.zero)

    def apply(self, v: Sequence) -> tuple:
        return self @ v

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        if not self.is_rational():
            raise AmpdynError("only rational matrices use the flat JSON encoding")
        m = self.to_rational()
        return {"rows": m.nrows, "cols": m.ncols,
                "entries": [format_rational(x) for x in m.entries()]}

    @classmethod
    def from_json(cls, obj) -> "Matrix":
        try:
            r, c, entries = int(obj["rows"]), int(obj["cols"]), list(obj["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise AmpdynError(f"malformed matrix JSON: {exc}") from exc
        if r <= 0 or c <= 0 or len(entries) != r * c:
            raise AmpdynError("matrix JSON: entries length must equal rows*cols")
        vals = [as_fraction(e) for e in entries]
        return cls([vals[i * c:(i + 1) * c] for i in range(r)])


RatMatrix = Matrix


def _coerce(x):
    if isinstance(x, (Fraction, QuadElem)):
        return x
    return as_fraction(x)


def _dot(a: Sequence, b: Sequence):
    acc = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        if x and y:
            acc = acc + x * y
    return acc


def quad_matrix(rows: Iterable[Iterable], d: int) -> Matrix:
    """Matrix over the order tagged ``d``; plain rationals are promoted."""
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, QuadElem):
                if x.d != d:
                    raise RingMismatchError(f"entry ring tag {x.d} differs from {d}")
                row.append(x)
            else:
                row.append(QuadElem(as_fraction(x), Fraction(0), d))
        out.append(row)
    return Matrix(out)


# --------------------------------------------------------------------------
# elimination


def row_echelon(m: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        p = next((i for i in range(r, m.nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    return len(row_echelon(m)[1])


def nullspace(m: Matrix) -> list[tuple]:
    a, pivots = row_echelon(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [m.zero] * m.ncols
        v[f] = m.one
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][f]
        basis.append(tuple(v))
    return basis


def det(m: Matrix):
    m._require_square()
    a = [list(r) for r in m.rows]
    n = m.nrows
    out = m.one
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return m.zero
        if p != c:
            a[c], a[p] = a[p], a[c]
            out = -out
        piv = a[c][c]
        out = out * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination."""
    m._require_square()
    n = m.nrows
    one, zero = m.one, m.zero
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return Matrix([r[n:] for r in a])


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` or None when inconsistent."""
    aug = Matrix([list(r) + [_coerce(y)] for r, y in zip(m.rows, b)])
    a, pivots = row_echelon(aug)
    if m.ncols in pivots:
        return None
    x = [m.zero] * m.ncols
    for i, pc in enumerate(pivots):
        x[pc] = a[i][-1]
    return tuple(x)


# --------------------------------------------------------------------------
# polynomials attached to matrices


def char_poly_coeffs(m: Matrix) -> list:
    """Coefficients (low to high) of ``det(xI - m)`` by Faddeev-LeVerrier."""
    m._require_square()
    n = m.nrows
    one = m.one
    c = [m.zero] * (n + 1)
    c[n] = one
    mk = Matrix.zeros(n, zero=m.zero)
    ident = Matrix.identity(n, one)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(c[n - k + 1])
        c[n - k] = -(m @ mk).trace() / k
    return c


def char_poly(m: Matrix) -> RatPoly:
    """Monic characteristic polynomial of a rational square matrix."""
    m._require_square()
    coeffs = char_poly_coeffs(m)
    return RatPoly(_rationalize(coeffs))


def _rationalize(coeffs: Sequence) -> list[Fraction]:
    out = []
    for x in coeffs:
        if isinstance(x, QuadElem):
            if not x.is_rational():
                raise AmpdynError("polynomial has irrational coefficients")
            x = x.a
        out.append(x)
    return out


def _krylov_relation(m: Matrix, v: tuple) -> list:
    """Monic polynomial of least degree annihilating ``v`` under ``m``."""
    zero, one = m.zero, m.one
    basis: list[tuple[int, list, list]] = []  # (pivot, reduced vector, combination)
    w = list(v)
    k = 0
    while True:
        comb = [zero] * (k + 1)
        comb[k] = one
        red = list(w)
        for piv, vec, cb in basis:
            f = red[piv]
            if f:
                red = [x - f * y for x, y in zip(red, vec)]
                for i, y in enumerate(cb):
                    comb[i] = comb[i] - f * y
        piv = next((i for i, x in enumerate(red) if x), None)
        if piv is None:
            return trim(comb)
        inv = 1 / red[piv]
        red = [x * inv for x in red]
        comb = [x * inv for x in comb]
        # keep existing rows reduced at the new pivot
        new_basis = []
        for p2, vec, cb in basis:
            f = vec[piv]
            if f:
                vec = [x - f * y for x, y in zip(vec, red)]
                cb = [x - f * y for x, y in zip(cb + [zero] * (len(comb) - len(cb)), comb)]
            new_basis.append((p2, vec, cb))
        basis = new_basis + [(piv, red, comb)]
        w = list(m @ w)
        k += 1


def min_poly(m: Matrix) -> RatPoly:
    """Monic minimal polynomial: lcm of the Krylov relations of the basis vectors."""
    m._require_square()
    n = m.nrows
    out = RatPoly([1])
    for j in range(n):
        e = tuple(m.one if i == j else m.zero for i in range(n))
        if _annihilates(out, m, e):
            continue
        rel = RatPoly(_rationalize(_krylov_relation(m, e)))
        out = lcm(out, rel)
        if out.degree == n:
            break
    return out


def _annihilates(p: RatPoly, m: Matrix, v: tuple) -> bool:
    acc = [m.zero] * len(v)
    for c in reversed(p.coeffs):
        acc = [x + c * y for x, y in zip(m @ acc, v)] if any(acc) else [c * y for y in v]
    return not any(acc)


def poly_at_matrix(p: RatPoly, m: Matrix) -> Matrix:
    m._require_square()
    acc = Matrix.zeros(m.nrows, zero=m.zero)
    ident = Matrix.identity(m.nrows, m.one)
    for c in reversed(p.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc


def inf_norm(m: Matrix) -> Fraction:
    """Maximum absolute row sum (operator norm induced by the max norm)."""
    return max(sum((abs(x) for x in r), Fraction(0)) for r in m.rows)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block ``(i, j)`` equals ``a[i, j] * b``."""
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append([x * y for x in ra for y in rb])
    return Matrix(rows)
