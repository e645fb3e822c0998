"""Exact rational linear algebra: rank, nullspace, unique kernel vectors.

Everything reduces to integer row elimination.  Rational rows are cleared
to primitive integer rows first; rank, kernels and tightness tests are all
invariant under row scaling, so nothing is lost.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Row = tuple[int, ...]


def primitive(vec: Sequence) -> Row:
    """Scale a rational vector to a primitive integer vector.

    The direction (sign pattern) is preserved; entries end up coprime.
    A zero vector comes back as all zeros.
    """
    ints: list[int]
    if all(type(v) is int for v in vec):
        ints = list(vec)
    else:
        fracs = [Fraction(v) for v in vec]
        denom_lcm = 1
        for f in fracs:
            d = f.denominator
            denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
        ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def _as_int_rows(rows: Iterable[Sequence]) -> list[Row]:
    return [primitive(r) for r in rows]


class IntRowBasis:
    """Incremental integer row echelon structure with push/pop.

    Rows are reduced against previously stored rows in insertion order.
    Stored rows are primitive.  Later rows are zero at earlier rows'
    pivot columns, which is all the back-substitution below needs.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[Row] = []
        self.pivots: list[int] = []
        self._pivot_set: set[int] = set()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence[int]) -> Row:
        """Eliminate the stored pivots from a row; return the primitive residual."""
        cur = list(row)
        for srow, p in zip(self.rows, self.pivots):
            cp = cur[p]
            if cp:
                sp = srow[p]
                cur = [a * sp - b * cp for a, b in zip(cur, srow)]
        g = 0
        for v in cur:
            g = gcd(g, v)
        if g > 1:
            cur = [v // g for v in cur]
        return tuple(cur)

    def push(self, row: Sequence[int]) -> bool:
        """Add a row if it increases rank.  Returns whether it did."""
        res = self.reduce(row)
        for j, v in enumerate(res):
            if v:
                self.rows.append(res)
                self.pivots.append(j)
                self._pivot_set.add(j)
                return True
        return False

    def pop(self) -> None:
        self.rows.pop()
        self._pivot_set.discard(self.pivots.pop())

    def free_columns(self) -> list[int]:
        return [j for j in range(self.ncols) if j not in self._pivot_set]

    def kernel_vector_for(self, free_col: int) -> Row:
        """Kernel vector with 1 at free_col and 0 at every other free column.

        Integer back-substitution: x[p] is still 0 when its own row is
        processed (later rows are zero at earlier pivots), so the pivot term
        never contributes to the accumulated sum.  When a pivot does not
        divide the sum, the whole vector is scaled to stay integral; the
        final result is normalized to primitive form.
        """
        x: list[int] = [0] * self.ncols
        x[free_col] = 1
        for srow, p in zip(reversed(self.rows), reversed(self.pivots)):
            acc = 0
            for c, coeff in enumerate(srow):
                if coeff and x[c]:
                    acc += coeff * x[c]
            if not acc:
                continue
            q, r = divmod(-acc, srow[p])
            if r == 0:
                x[p] = q
            else:
                sp = srow[p]
                if sp < 0:
                    sp, acc = -sp, -acc
                x = [v * sp for v in x]
                x[p] = -acc
        return primitive(x)

    def kernel_basis(self) -> list[Row]:
        return [self.kernel_vector_for(f) for f in self.free_columns()]


def rank(rows: Iterable[Sequence]) -> int:
    """Exact rank of a matrix given as an iterable of rational rows."""
    int_rows = _as_int_rows(rows)
    if not int_rows:
        return 0
    basis = IntRowBasis(len(int_rows[0]))
    for r in int_rows:
        basis.push(r)
    return basis.rank


def nullspace_basis(rows: Sequence[Sequence], ncols: int | None = None) -> list[Row]:
    """Primitive integer basis of the kernel; empty iff full column rank.

    ncols must be supplied when rows is empty (kernel of a 0×n matrix).
    """
    int_rows = _as_int_rows(rows)
    if ncols is None:
        if not int_rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(int_rows[0])
    basis = IntRowBasis(ncols)
    for r in int_rows:
        basis.push(r)
    return basis.kernel_basis()


def unique_nullspace_solution(rows: Sequence[Sequence], ncols: int | None = None) -> Row | None:
    """The spanning kernel vector when the nullity is exactly one, else None."""
    int_rows = _as_int_rows(rows)
    if ncols is None:
        if not int_rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(int_rows[0])
    basis = IntRowBasis(ncols)
    for r in int_rows:
        basis.push(r)
    free = basis.free_columns()
    if len(free) != 1:
        return None
    return basis.kernel_vector_for(free[0])


def is_scaling_of(u: Sequence, v: Sequence) -> bool:
    """True iff u = λ·v for some scalar λ (λ=0 only when u is zero)."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    uf = [Fraction(a) for a in u]
    vf = [Fraction(a) for a in v]
    if all(a == 0 for a in uf):
        return True
    lam = None
    for a, b in zip(uf, vf):
        if b == 0:
            if a != 0:
                return False
        else:
            r = a / b
            if lam is None:
                lam = r
            elif r != lam:
                return False
    return True
