"""Rational H-polytopes {Ax = b, Bx <= d} with exact membership, tightness,
vertexhood and ratio tests.

Rows are cleared to primitive integer form (coefficients and right-hand side
jointly, positive scaling only), which changes nothing about =, <= or the
ratio test but keeps all arithmetic in integers as long as the query point
is integral.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import Unbounded
from .linalg import IntRowBasis
from .rational import format_rational, parse_rational

Vector = tuple[Fraction, ...]


def as_vector(entries: Sequence) -> Vector:
    return tuple(Fraction(v) for v in entries)


def add_scaled(x: Vector, g: Sequence, alpha: Fraction) -> Vector:
    """x + alpha*g with integral entries normalized to int (exact, hash-friendly)."""
    out = []
    for xv, gv in zip(x, g):
        v = xv + alpha * gv
        if isinstance(v, Fraction) and v.denominator == 1:
            v = int(v)
        out.append(v)
    return tuple(out)


def _clear_row(coeffs: Sequence, rhs) -> tuple[tuple[int, ...], int]:
    """Scale (coeffs, rhs) by a positive rational to primitive integers."""
    fr = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    lcm = 1
    for f in fr:
        d = f.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(f * lcm) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


@dataclass(frozen=True)
class TightSet:
    equality_rows: tuple[int, ...]
    inequality_rows: tuple[int, ...]


class HPolytope:
    """Immutable H-description.  Row order is preserved and significant."""

    def __init__(self, A, b, B, d, row_labels, ambient_dim, description_complete):
        self.A = tuple(as_vector(r) for r in A)
        self.b = as_vector(b)
        self.B = tuple(as_vector(r) for r in B)
        self.d = as_vector(d)
        self.row_labels = tuple(row_labels)
        self.ambient_dim = int(ambient_dim)
        self.description_complete = bool(description_complete)

        if len(self.A) != len(self.b) or len(self.B) != len(self.d):
            raise ValueError("row / rhs count mismatch")
        if len(self.row_labels) != len(self.A) + len(self.B):
            raise ValueError("need one label per row (A rows then B rows)")
        for r in self.A + self.B:
            if len(r) != self.ambient_dim:
                raise ValueError("row length differs from ambient_dim")

        self.eq_int = tuple(_clear_row(r, v) for r, v in zip(self.A, self.b))
        self.ineq_int = tuple(_clear_row(r, v) for r, v in zip(self.B, self.d))

        basis = IntRowBasis(self.ambient_dim)
        for row, _ in self.eq_int + self.ineq_int:
            if basis.push(row) and basis.rank == self.ambient_dim:
                break
        if basis.rank != self.ambient_dim:
            raise ValueError("[A; B] must have full column rank")

        # column -> [(row index, coeff)] over nonzeros, for support-sparse dots
        eq_cols = [[] for _ in range(self.ambient_dim)]
        for i, (row, _) in enumerate(self.eq_int):
            for j, c in enumerate(row):
                if c:
                    eq_cols[j].append((i, c))
        ineq_cols = [[] for _ in range(self.ambient_dim)]
        for i, (row, _) in enumerate(self.ineq_int):
            for j, c in enumerate(row):
                if c:
                    ineq_cols[j].append((i, c))
        self._eq_cols = tuple(tuple(c) for c in eq_cols)
        self._ineq_cols = tuple(tuple(c) for c in ineq_cols)

    # -- evaluation helpers --------------------------------------------------

    def eq_values(self, x: Sequence) -> list:
        acc = [0] * len(self.eq_int)
        for j, xv in enumerate(x):
            if xv:
                for i, c in self._eq_cols[j]:
                    acc[i] += c * xv
        return acc

    def ineq_values(self, x: Sequence) -> list:
        acc = [0] * len(self.ineq_int)
        for j, xv in enumerate(x):
            if xv:
                for i, c in self._ineq_cols[j]:
                    acc[i] += c * xv
        return acc

    def _check_dim(self, x: Sequence) -> None:
        if len(x) != self.ambient_dim:
            raise ValueError("point length differs from ambient_dim")

    # -- membership and step queries -------------------------------------------

    def contains(self, x: Sequence) -> bool:
        self._check_dim(x)
        vals = self.eq_values(x)
        for v, (_, rhs) in zip(vals, self.eq_int):
            if v != rhs:
                return False
        vals = self.ineq_values(x)
        for v, (_, rhs) in zip(vals, self.ineq_int):
            if v > rhs:
                return False
        return True

    def tight_rows(self, x: Sequence) -> TightSet:
        if not self.contains(x):
            raise ValueError("point is not in the polytope")
        vals = self.ineq_values(x)
        tight = tuple(i for i, (v, (_, rhs)) in enumerate(zip(vals, self.ineq_int)) if v == rhs)
        return TightSet(tuple(range(len(self.eq_int))), tight)

    def is_vertex(self, x: Sequence) -> bool:
        tight = self.tight_rows(x)  # also enforces membership
        basis = IntRowBasis(self.ambient_dim)
        for row, _ in self.eq_int:
            if basis.push(row) and basis.rank == self.ambient_dim:
                return True
        for i in tight.inequality_rows:
            if basis.push(self.ineq_int[i][0]) and basis.rank == self.ambient_dim:
                return True
        return False

    def max_step(self, x: Sequence, g: Sequence):
        """Largest alpha with x + alpha*g still inside; None when it is zero."""
        if not self.contains(x):
            raise ValueError("point is not in the polytope")
        self._check_dim(g)
        eq_move = self.eq_values(g)
        if any(eq_move):
            raise ValueError("direction leaves the equality subspace (Ag != 0)")
        return self._max_step_inner(x, g)

    def _max_step_inner(self, x: Sequence, g: Sequence):
        """Ratio test without precondition checks (callers guarantee them)."""
        bx = self.ineq_values(x)
        bg = self.ineq_values(g)
        alpha = None
        for v, move, (_, rhs) in zip(bx, bg, self.ineq_int):
            if move > 0:
                ratio = Fraction(rhs - v) / move
                if alpha is None or ratio < alpha:
                    alpha = ratio
                    if alpha == 0:
                        return None
        if alpha is None:
            raise Unbounded("no inequality row limits this direction")
        if alpha == 0:
            return None
        return alpha

    # -- JSON ------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        neq = len(self.A)
        return {
            "ambient_dim": self.ambient_dim,
            "equalities": [
                {
                    "coeffs": [format_rational(c) for c in row],
                    "rhs": format_rational(v),
                    "label": self.row_labels[i],
                }
                for i, (row, v) in enumerate(zip(self.A, self.b))
            ],
            "inequalities": [
                {
                    "coeffs": [format_rational(c) for c in row],
                    "rhs": format_rational(v),
                    "label": self.row_labels[neq + i],
                }
                for i, (row, v) in enumerate(zip(self.B, self.d))
            ],
            "description_complete": self.description_complete,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "HPolytope":
        eqs = data.get("equalities", [])
        ineqs = data.get("inequalities", [])
        A = [[parse_rational(c) for c in row["coeffs"]] for row in eqs]
        b = [parse_rational(row["rhs"]) for row in eqs]
        B = [[parse_rational(c) for c in row["coeffs"]] for row in ineqs]
        d = [parse_rational(row["rhs"]) for row in ineqs]
        labels = [row["label"] for row in eqs] + [row["label"] for row in ineqs]
        return cls(A, b, B, d, labels, data["ambient_dim"], data["description_complete"])

    @classmethod
    def from_json_text(cls, text: str) -> "HPolytope":
        return cls.from_json_dict(json.loads(text))
