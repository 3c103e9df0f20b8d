"""Exact rational linear algebra and strict-inequality feasibility.

Everything runs over `fractions.Fraction`; no floating point anywhere.
Matrices are sequences of equal-length rows; vectors are tuples.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConsistencyError, InputError


def frac(x) -> Fraction:
    """Coerce ints, canonical strings like "-3/4", and Fractions."""
    return x if isinstance(x, Fraction) else Fraction(x)


def _to_rows(matrix) -> list[list[Fraction]]:
    rows = [[frac(x) for x in row] for row in matrix]
    if rows:
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise InputError("matrix rows have unequal lengths")
    return rows


def rref(matrix):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = _to_rows(matrix)
    if not rows or not rows[0]:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def rank_and_kernel(matrix, ncols: int | None = None):
    """Rank and an echelon-normalized basis of the right kernel.

    Every returned vector v satisfies M v = 0 exactly.  The basis itself is
    in reduced row echelon form, so each vector's first nonzero entry is 1
    and the output is deterministic.  `ncols` is only needed when `matrix`
    has no rows.
    """
    rows = _to_rows(matrix)
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        ncols = 0
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    normalized, _ = rref(basis)
    return len(pivots), tuple(tuple(row) for row in normalized if any(x != 0 for x in row))


def affine_system_consistent(rows, rhs) -> bool:
    """True iff the linear system rows·v = rhs has a rational solution."""
    rows = _to_rows(rows)
    rhs = [frac(b) for b in rhs]
    if len(rows) != len(rhs):
        raise InputError("right-hand side length mismatch")
    aug = [row + [b] for row, b in zip(rows, rhs)]
    return rank(rows) == rank(aug)


def solve_square(A, B):
    """Solve A X = B for square invertible A; B given as a list of rows."""
    A = _to_rows(A)
    B = _to_rows(B)
    n = len(A)
    if n == 0:
        return []
    if len(B) != n:
        raise InputError("dimension mismatch in solve_square")
    aug = [A[i] + B[i] for i in range(n)]
    for c in range(n):
        pr = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pr is None:
            raise ConsistencyError("singular matrix in solve_square")
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


class SparseEchelon:
    """Incremental exact Gaussian elimination over sparse vectors.

    Vectors are dicts {column_key: Fraction} with orderable keys.  Pivot
    rows are kept normalized (pivot coefficient 1), so ranks and residuals
    are deterministic.
    """

    def __init__(self):
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        out = {k: frac(v) for k, v in vec.items() if v != 0}
        while out:
            k = min(out)
            row = self.pivots.get(k)
            if row is None:
                return out
            f = out[k]
            for c, v in row.items():
                nv = out.get(c, Fraction(0)) - f * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True iff it enlarges the span."""
        res = self.reduce(vec)
        if not res:
            return False
        k = min(res)
        pv = res[k]
        self.pivots[k] = {c: v / pv for c, v in res.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def _canon_row(v: tuple) -> tuple:
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return v
    s = abs(lead)
    return tuple(x / s for x in v)


def strict_feasible(constraints, dim: int | None = None) -> bool:
    """Decide existence of a rational point satisfying strict inequalities.

    Each constraint is (coeffs, constant, sign) where sign +1 asserts
    coeffs·v + constant > 0 and sign -1 asserts coeffs·v + constant < 0.
    Decided exactly by Fourier-Motzkin elimination; for strict systems over
    Q the projection step is lossless, so the answer is exact.
    """
    work: set[tuple] = set()
    d = dim
    for coeffs, const, sgn in constraints:
        vec = [frac(x) for x in coeffs]
        if d is None:
            d = len(vec)
        elif len(vec) != d:
            raise InputError("constraint rows have unequal lengths")
        if sgn not in (1, -1):
            raise InputError("constraint sign must be +1 or -1")
        row = vec + [frac(const)]
        if sgn < 0:
            row = [-x for x in row]
        work.add(_canon_row(tuple(row)))

    while True:
        live = set()
        for v in work:
            if all(x == 0 for x in v[:-1]):
                if v[-1] <= 0:
                    return False
            else:
                live.add(v)
        if not live:
            return True
        width = len(next(iter(live))) - 1
        best = None
        for k in range(width):
            pos = sum(1 for v in live if v[k] > 0)
            neg = sum(1 for v in live if v[k] < 0)
            if pos == 0 and neg == 0:
                continue
            cost = pos * neg
            if best is None or cost < best[0]:
                best = (cost, k)
        k = best[1]
        new: set[tuple] = set()
        for v in live:
            if v[k] == 0:
                new.add(_canon_row(v[:k] + v[k + 1:]))
        pos_rows = [v for v in live if v[k] > 0]
        neg_rows = [v for v in live if v[k] < 0]
        for p in pos_rows:
            for q in neg_rows:
                comb = tuple(-q[k] * a + p[k] * b for a, b in zip(p, q))
                new.add(_canon_row(comb[:k] + comb[k + 1:]))
        work = new
