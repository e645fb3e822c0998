"""Circuit steps, walks, walk validation, and BFS distances/diameters.

A circuit step moves from x along a circuit direction g by the largest
feasible alpha.  A walk is a chain of such steps; distances count the fewest
steps needed, searched breadth-first over an enumerated circuit set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .circuits import CIRCUIT, Circuit, CircuitSet, canonicalize, is_circuit
from .errors import DepthLimit, IncompleteDescription, NoStep, NotACircuit
from .linalg import primitive
from .polytope import HPolytope, add_scaled
from .rational import format_rational


@dataclass(frozen=True)
class WalkStep:
    from_point: tuple
    circuit: Circuit
    direction: tuple[int, ...]  # signed primitive direction actually used
    alpha: Fraction
    to_point: tuple


@dataclass(frozen=True)
class Walk:
    points: tuple
    steps: tuple[WalkStep, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    def to_json_dict(self) -> dict:
        return {
            "points": [[format_rational(v) for v in p] for p in self.points],
            "steps": [
                {
                    "circuit": [str(v) for v in s.circuit.direction],
                    "direction": [str(v) for v in s.direction],
                    "alpha": format_rational(s.alpha),
                }
                for s in self.steps
            ],
        }


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    index: int | None = None
    reason: str | None = None


def circuit_step(P: HPolytope, x, g, certified: bool = False) -> WalkStep:
    """The maximal step from x along g.  g must be a circuit of P unless the
    caller vouches for it (certified=True)."""
    direction = primitive(g)
    if not any(direction):
        raise NotACircuit("zero direction")
    if not certified:
        test = is_circuit(P, direction)
        if test.verdict != CIRCUIT:
            raise NotACircuit(f"direction failed the circuit test ({test.verdict})")
    if not P.contains(x):
        raise ValueError("step origin is not in the polytope")
    alpha = P._max_step_inner(x, direction)
    if alpha is None:
        raise NoStep("no positive step along this direction")
    to_point = add_scaled(tuple(x), direction, alpha)
    return WalkStep(tuple(x), canonicalize(direction), direction, alpha, to_point)


def validate_walk(
    P: HPolytope,
    walk: Walk,
    step_cache: dict | None = None,
    circuit_cache: dict | None = None,
) -> ValidationReport:
    """Check every transition: in-polytope, certified circuit, maximal alpha,
    exact landing.  Reports the first violation's step index and reason."""
    pts = walk.points
    steps = walk.steps
    if len(pts) != len(steps) + 1:
        return ValidationReport(False, 0, "points-steps-mismatch")
    if not P.contains(pts[0]):
        return ValidationReport(False, 0, "start-not-in-polytope")
    for i, s in enumerate(steps):
        if tuple(s.from_point) != tuple(pts[i]) or tuple(s.to_point) != tuple(pts[i + 1]):
            return ValidationReport(False, i, "points-steps-mismatch")
        if step_cache is not None:
            key = (id(P), s.from_point, s.direction, s.alpha, s.to_point)
            cached = step_cache.get(key)
            if cached is not None:
                if cached == "ok":
                    continue
                return ValidationReport(False, i, cached)
        reason = _step_violation(P, s, circuit_cache)
        if step_cache is not None:
            step_cache[(id(P), s.from_point, s.direction, s.alpha, s.to_point)] = reason or "ok"
        if reason:
            return ValidationReport(False, i, reason)
    return ValidationReport(True)


def _step_violation(P: HPolytope, s: WalkStep, circuit_cache: dict | None) -> str | None:
    if s.alpha <= 0:
        return "alpha-not-positive"
    if circuit_cache is not None:
        ckey = (id(P), s.direction)
        verdict = circuit_cache.get(ckey)
        if verdict is None:
            verdict = is_circuit(P, s.direction).verdict
            circuit_cache[ckey] = verdict
    else:
        verdict = is_circuit(P, s.direction).verdict
    if verdict != CIRCUIT:
        return "direction-not-circuit"
    if tuple(add_scaled(s.from_point, s.direction, s.alpha)) != tuple(s.to_point):
        return "landing-mismatch"
    alpha = P._max_step_inner(s.from_point, s.direction)
    if alpha != s.alpha:
        return "alpha-not-maximal"
    if not P.contains(s.to_point):
        return "landing-not-in-polytope"
    return None


def one_step(P: HPolytope, x, y) -> bool:
    """True iff y - x is a circuit and the maximal step from x along it lands
    exactly on y.  Intentionally asymmetric in x and y."""
    xt, yt = tuple(x), tuple(y)
    if xt == yt:
        raise ValueError("one_step needs two distinct points")
    if not P.contains(xt) or not P.contains(yt):
        raise ValueError("both points must be in the polytope")
    diff = tuple(b - a for a, b in zip(xt, yt))
    if is_circuit(P, diff).verdict != CIRCUIT:
        return False
    return P._max_step_inner(xt, diff) == 1


def two_step_search(P: HPolytope, x, y, intermediates: Iterable) -> Walk | None:
    """First z among intermediates with one_step(x,z) and one_step(z,y),
    returned as a validated 2-step walk; None when no candidate works."""
    xt, yt = tuple(x), tuple(y)
    for z in intermediates:
        zt = tuple(z)
        if zt == xt or zt == yt:
            continue
        if one_step(P, xt, zt) and one_step(P, zt, yt):
            s1 = circuit_step(P, xt, tuple(b - a for a, b in zip(xt, zt)), certified=True)
            s2 = circuit_step(P, zt, tuple(b - a for a, b in zip(zt, yt)), certified=True)
            walk = Walk((xt, s1.to_point, s2.to_point), (s1, s2))
            if validate_walk(P, walk).ok:
                return walk
    return None


class _StepOracle:
    """Shared machinery for BFS over an enumerated circuit set.

    Caches the inequality-row movement of every canonical direction and the
    row values at every visited point, so each (point, +-direction) step is a
    single ratio scan.
    """

    def __init__(self, P: HPolytope, circuits: CircuitSet):
        self.P = P
        self.dirs = [c.direction for c in circuits.circuits]
        self.dir_set = set(self.dirs)
        self.moves = [P.ineq_values(g) for g in self.dirs]
        self.rhs = [r for _, r in P.ineq_int]
        self.point_vals: dict[tuple, list] = {}

    def _vals(self, x: tuple) -> list:
        v = self.point_vals.get(x)
        if v is None:
            v = self.P.ineq_values(x)
            self.point_vals[x] = v
        return v

    def _alpha(self, vals, move, sign: int):
        alpha = None
        for v, mv, rhs in zip(vals, move, self.rhs):
            m = mv * sign
            if m > 0:
                ratio = Fraction(rhs - v) / m
                if alpha is None or ratio < alpha:
                    if ratio == 0:
                        return None
                    alpha = ratio
        return alpha

    def landings(self, x: tuple) -> set[tuple]:
        vals = self._vals(x)
        out = set()
        for g, move in zip(self.dirs, self.moves):
            for sign in (1, -1):
                alpha = self._alpha(vals, move, sign)
                if alpha is not None:
                    step = alpha if sign == 1 else -alpha
                    out.add(add_scaled(x, g, step))
        return out

    def lands_exactly(self, x: tuple, y: tuple) -> bool:
        """True iff a maximal step from x along the circuit y-x lands on y."""
        diff = primitive(tuple(b - a for a, b in zip(x, y)))
        key = diff
        for v in diff:
            if v:
                if v < 0:
                    key = tuple(-u for u in diff)
                break
        if key not in self.dir_set:
            return False
        vals = self._vals(x)
        move = self.P.ineq_values(diff)
        alpha = self._alpha(vals, move, 1)
        if alpha is None:
            return False
        return add_scaled(x, diff, alpha) == y


def _bfs_levels(oracle: _StepOracle, source: tuple, targets: set[tuple], depth_limit: int):
    """Distances from source to each target, resolved level by level.

    Expansion of a frontier is deferred until some target is still missing,
    so shallow queries never build deep point clouds.
    """
    dist: dict[tuple, int] = {}
    remaining = set(targets)
    if source in remaining:
        dist[source] = 0
        remaining.discard(source)
    visited = {source}
    frontier = [source]
    depth = 0
    while remaining and depth < depth_limit:
        depth += 1
        hits = {y for y in remaining if any(oracle.lands_exactly(z, y) for z in frontier)}
        for y in hits:
            dist[y] = depth
        remaining -= hits
        if not remaining or depth == depth_limit:
            break
        new_frontier = set()
        for z in frontier:
            new_frontier |= oracle.landings(z)
        new_frontier -= visited
        visited |= new_frontier
        frontier = sorted(new_frontier)
        if not frontier:
            break
    return dist


def circuit_distance(
    P: HPolytope,
    x,
    y,
    circuits: CircuitSet,
    depth_limit: int = 4,
) -> int | None:
    """Fewest maximal circuit steps from x to y; None if unreachable within
    depth_limit."""
    if not P.description_complete:
        raise IncompleteDescription("circuit distance needs the complete circuit set")
    oracle = _StepOracle(P, circuits)
    xt, yt = tuple(x), tuple(y)
    return _bfs_levels(oracle, xt, {yt}, depth_limit).get(yt)


def circuit_diameter(
    P: HPolytope,
    vertices: Sequence,
    circuits: CircuitSet,
    depth_limit: int = 4,
) -> int:
    """Max circuit distance over ordered vertex pairs.  Raises DepthLimit when
    some pair stays unresolved within depth_limit."""
    if not P.description_complete:
        raise IncompleteDescription("circuit diameter needs the complete circuit set")
    oracle = _StepOracle(P, circuits)
    pts = [tuple(v) for v in vertices]
    targets = set(pts)
    best = 0
    for src in pts:
        dist = _bfs_levels(oracle, src, targets, depth_limit)
        if len(dist) < len(targets):
            missing = sorted(targets - set(dist))[0]
            raise DepthLimit(
                f"distance from {src} to {missing} unresolved within depth {depth_limit}"
            )
        best = max(best, max(dist.values()))
    return best
