"""Exact two-phase simplex over the rationals (Bland's rule).

Solves ``min c.x  s.t.  A x = b, x >= 0`` with Fraction arithmetic.  Sizes in
this package are tiny, so a dense tableau is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(tab: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    inv = 1 / tab[r][c]
    tab[r] = [x * inv for x in tab[r]]
    pr = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c]:
            f = row[c]
            tab[i] = [x - f * y for x, y in zip(row, pr)]
    if obj[c]:
        f = obj[c]
        obj[:] = [x - f * y for x, y in zip(obj, pr)]


def _run(tab, obj, basis, allowed: int) -> str:
    """Simplex iterations on columns ``< allowed``; returns "optimal" or "unbounded"."""
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        r = best[1]
        _pivot(tab, obj, r, enter)
        basis[r] = enter


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    m = len(A)
    n = len(A[0]) if m else len(c or [])
    if c is None:
        c = [0] * n
    c = [Fraction(x) for x in c]
    if m == 0:
        if any(x < 0 for x in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(n)), Fraction(0))
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        tab.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    # phase 1: minimise the sum of artificials
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(n, n + m):
        obj[i] = Fraction(1)
    for row in tab:
        obj = [x - y for x, y in zip(obj, row)]
    _run(tab, obj, basis, n + m)
    if -obj[-1] > 0:
        return LPResult("infeasible")
    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j]), None)
            if col is None:
                del tab[i]
                del basis[i]
                continue
            _pivot(tab, obj, i, col)
            basis[i] = col
        i += 1
    # phase 2
    tab = [row[:n] + [row[-1]] for row in tab]
    obj = c + [Fraction(0)]
    for i, j in enumerate(basis):
        if obj[j]:
            f = obj[j]
            obj = [x - f * y for x, y in zip(obj, tab[i])]
    status = _run(tab, obj, basis, n)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = tab[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value)
