"""Circuit tests, canonical forms, and exhaustive circuit enumeration.

A nonzero vector g is a circuit of {Ax = b, Bx <= d} exactly when Ag = 0 and
the maximal set B' of inequality rows orthogonal to g makes [A; B'] have a
one-dimensional kernel.  The test below computes B' once and checks the rank
of the stacked tight system; there is no subset search in the test itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BudgetExceeded, IncompleteDescription
from .linalg import IntRowBasis, primitive
from .polytope import HPolytope

CIRCUIT = "circuit"
NOT_CIRCUIT = "not-circuit"
NOT_CERTIFIED = "not-certified"

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Circuit:
    direction: tuple[int, ...]
    sign_canonical: bool
    certificate: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CircuitTest:
    """Outcome of a circuit query.

    verdict is "circuit" or "not-circuit" for complete descriptions.  With a
    partial description a failed test is only "not-certified": missing rows
    could still certify the vector, while a passing test stays sound.
    """

    verdict: str
    direction: tuple[int, ...]
    certificate: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.verdict == CIRCUIT


def canonicalize(g) -> Circuit:
    """Primitive integer form with the first nonzero entry positive."""
    vec = primitive(g)
    if not any(vec):
        raise ValueError("zero vector has no canonical circuit form")
    for v in vec:
        if v:
            if v < 0:
                vec = tuple(-u for u in vec)
            break
    return Circuit(vec, True)


def _sign_normalized(row: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    lead = 0
    for v in row:
        if v:
            if lead == 0:
                lead = v
            g = gcd(g, v)
    if lead < 0:
        return tuple(-v // g for v in row)
    if g > 1:
        return tuple(v // g for v in row)
    return row


def is_circuit(P: HPolytope, g) -> CircuitTest:
    """Test g against the maximal tight inequality set of P."""
    direction = primitive(g)
    if not any(direction):
        raise ValueError("zero vector cannot be a circuit")

    if any(P.eq_values(direction)):
        return CircuitTest(NOT_CIRCUIT, direction, None)

    moves = P.ineq_values(direction)
    tight = tuple(i for i, v in enumerate(moves) if v == 0)

    # Singleton rows orthogonal to g pin their column to zero for every
    # kernel vector, so the rank test only needs the remaining columns.
    n = P.ambient_dim
    pinned = set()
    loose_rows = []
    for row, _ in P.eq_int:
        nz = [j for j, c in enumerate(row) if c]
        if len(nz) == 1:
            pinned.add(nz[0])
        else:
            loose_rows.append(row)
    for i in tight:
        row = P.ineq_int[i][0]
        nz = [j for j, c in enumerate(row) if c]
        if len(nz) == 1:
            pinned.add(nz[0])
        else:
            loose_rows.append(row)

    unpinned = [j for j in range(n) if j not in pinned]
    target = len(unpinned) - 1
    if target <= 0:
        verdict = CIRCUIT  # kernel of the tight system is exactly span{g}
        return CircuitTest(verdict, direction, tight)

    basis = IntRowBasis(len(unpinned))
    seen = set()
    for row in loose_rows:
        restricted = tuple(row[j] for j in unpinned)
        if not any(restricted):
            continue
        key = _sign_normalized(restricted)
        if key in seen:
            continue
        seen.add(key)
        if basis.push(key) and basis.rank == target:
            return CircuitTest(CIRCUIT, direction, tight)

    verdict = NOT_CIRCUIT if P.description_complete else NOT_CERTIFIED
    return CircuitTest(verdict, direction, None)


@dataclass(frozen=True)
class CircuitSet:
    circuits: tuple[Circuit, ...]
    polytope: HPolytope

    def __len__(self) -> int:
        return len(self.circuits)

    def directions(self) -> set[tuple[int, ...]]:
        return {c.direction for c in self.circuits}


def enumerate_circuits(P: HPolytope, budget: int = DEFAULT_BUDGET) -> CircuitSet:
    """All circuits of P, canonical and deduplicated.

    Iterates independent inequality-row subsets of size exactly k-1,
    k = ambient_dim - rank(A): each one pushes the tight system to rank
    ambient_dim - 1, whose kernel vector is then a circuit, and every
    circuit certificate contains such a subset.  Budget counts candidate
    subset visits (every attempted extension), raising instead of silently
    truncating.
    """
    if not P.description_complete:
        raise IncompleteDescription("circuit enumeration needs a complete description")

    n = P.ambient_dim
    basis = IntRowBasis(n)
    for row, _ in P.eq_int:
        basis.push(row)
    k = n - basis.rank
    depth_needed = k - 1

    rows = [row for row, _ in P.ineq_int]
    m = len(rows)
    found: dict[tuple[int, ...], Circuit] = {}
    visited = 0

    def descend(start: int, depth: int, picked: list[int]) -> None:
        nonlocal visited
        if depth == depth_needed:
            free = basis.free_columns()
            vec = basis.kernel_vector_for(free[0])
            circ = canonicalize(vec)
            if circ.direction not in found:
                found[circ.direction] = Circuit(circ.direction, True, tuple(picked))
            return
        remaining_needed = depth_needed - depth
        for i in range(start, m - remaining_needed + 1):
            visited += 1
            if visited > budget:
                raise BudgetExceeded(f"more than {budget} candidate row subsets visited")
            if basis.push(rows[i]):
                picked.append(i)
                descend(i + 1, depth + 1, picked)
                picked.pop()
                basis.pop()

    if depth_needed == 0:
        # rank(A) is already n-1; the kernel of A alone spans the only circuit
        free = basis.free_columns()
        if len(free) == 1:
            circ = canonicalize(basis.kernel_vector_for(free[0]))
            found[circ.direction] = Circuit(circ.direction, True, ())
    elif depth_needed > 0:
        descend(0, 0, [])

    ordered = tuple(found[key] for key in sorted(found))
    return CircuitSet(ordered, P)


def pairwise_circuit_report(P: HPolytope, points) -> list[tuple[int, int, str]]:
    """is_circuit verdict for the difference of every unordered point pair."""
    pts = [tuple(p) for p in points]
    report = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            diff = tuple(b - a for a, b in zip(pts[i], pts[j]))
            report.append((i, j, is_circuit(P, diff).verdict))
    return report
