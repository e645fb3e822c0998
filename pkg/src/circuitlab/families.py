"""Combinatorial polytope families over complete graphs.

Matching, perfect matching, and travelling salesman polytopes with a fixed
lexicographic edge indexing, combinatorial vertex enumerators, and the
constructive short-walk recipes used by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ConstructionFailed
from .polytope import HPolytope
from .walks import Walk, circuit_step, validate_walk


class EdgeIndex:
    """Bijection between unordered node pairs of K_n and coordinates.

    Pairs (i, j) with i < j are ordered lexicographically, so the mapping is
    stable across runs."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need at least two nodes")
        self.n = n
        self.pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
        self._index = {p: k for k, p in enumerate(self.pairs)}

    def __len__(self) -> int:
        return len(self.pairs)

    def index(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("loops have no coordinate")
        return self._index[(u, v) if u < v else (v, u)]

    def pair(self, k: int) -> tuple[int, int]:
        return self.pairs[k]

    def chi(self, edges) -> tuple[int, ...]:
        vec = [0] * len(self.pairs)
        for u, v in edges:
            vec[self.index(u, v)] = 1
        return tuple(vec)


def _normalize_edges(edges) -> frozenset:
    out = set()
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def _check_matching(edges: frozenset, n: int) -> None:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen or not (0 <= u < n and 0 <= v < n):
            raise ValueError("not a matching on 0..n-1")
        seen.update((u, v))


def _odd_subsets(n: int, min_size: int, max_size: int):
    for size in range(min_size, max_size + 1, 2):
        yield from combinations(range(n), size)


def build_matching_polytope(n: int) -> HPolytope:
    """Nonnegativity, degree caps, and odd-set rows x(E[S]) <= (|S|-1)/2."""
    if n < 2:
        raise ValueError("need at least two nodes")
    if n > 16:
        raise ValueError("odd-subset enumeration is limited to 16 nodes")
    E = EdgeIndex(n)
    m = len(E)
    B: list[list[int]] = []
    d: list[int] = []
    labels: list[str] = []
    for u, v in E.pairs:
        row = [0] * m
        row[E.index(u, v)] = -1
        B.append(row)
        d.append(0)
        labels.append(f"nonneg[{u},{v}]")
    for v in range(n):
        row = [0] * m
        for w in range(n):
            if w != v:
                row[E.index(v, w)] = 1
        B.append(row)
        d.append(1)
        labels.append(f"degree[{v}]")
    for S in _odd_subsets(n, 3, n):
        row = [0] * m
        for u, v in combinations(S, 2):
            row[E.index(u, v)] = 1
        B.append(row)
        d.append((len(S) - 1) // 2)
        labels.append(f"oddset[{','.join(map(str, S))}]")
    return HPolytope([], [], B, d, labels, m, True)


def build_perfect_matching_polytope(n: int) -> HPolytope:
    """Degree equalities plus odd-cut rows x(delta(S)) >= 1 stored in <= form."""
    if n % 2 or n < 4:
        raise ValueError("need an even node count of at least four")
    if n > 16:
        raise ValueError("odd-subset enumeration is limited to 16 nodes")
    E = EdgeIndex(n)
    m = len(E)
    A: list[list[int]] = []
    b: list[int] = []
    labels: list[str] = []
    for v in range(n):
        row = [0] * m
        for w in range(n):
            if w != v:
                row[E.index(v, w)] = 1
        A.append(row)
        b.append(1)
        labels.append(f"degree[{v}]")
    B: list[list[int]] = []
    d: list[int] = []
    for S in _odd_subsets(n, 3, n - 1):
        inside = set(S)
        row = [0] * m
        for u, v in E.pairs:
            if (u in inside) != (v in inside):
                row[E.index(u, v)] = -1
        B.append(row)
        d.append(-1)
        labels.append(f"oddcut[{','.join(map(str, S))}]")
    for u, v in E.pairs:
        row = [0] * m
        row[E.index(u, v)] = -1
        B.append(row)
        d.append(0)
        labels.append(f"nonneg[{u},{v}]")
    return HPolytope(A, b, B, d, labels, m, True)


def build_tsp_polytope(n: int, include_combs: bool = False) -> HPolytope:
    """Degree-two equalities, subtour rows, nonnegativity; optional comb rows
    (triangle handle with three two-node teeth).  The description is complete
    exactly for n <= 5."""
    if n < 3:
        raise ValueError("need at least three nodes")
    if n > 10:
        raise ValueError("subset enumeration is limited to 10 nodes")
    if include_combs and n < 6:
        raise ValueError("comb rows need at least six nodes")
    E = EdgeIndex(n)
    m = len(E)
    A: list[list[int]] = []
    b: list[int] = []
    labels: list[str] = []
    for v in range(n):
        row = [0] * m
        for w in range(n):
            if w != v:
                row[E.index(v, w)] = 1
        A.append(row)
        b.append(2)
        labels.append(f"degree[{v}]")
    B: list[list[int]] = []
    d: list[int] = []
    for size in range(2, n - 1):
        for S in combinations(range(n), size):
            row = [0] * m
            for u, v in combinations(S, 2):
                row[E.index(u, v)] = 1
            B.append(row)
            d.append(size - 1)
            labels.append(f"subtour[{','.join(map(str, S))}]")
    for u, v in E.pairs:
        row = [0] * m
        row[E.index(u, v)] = -1
        B.append(row)
        d.append(0)
        labels.append(f"nonneg[{u},{v}]")
    if include_combs:
        seen_rows = set()
        for handle in combinations(range(n), 3):
            rest = [w for w in range(n) if w not in handle]
            for tips in permutations(rest, 3):
                row = [0] * m
                for x, y in combinations(handle, 2):
                    row[E.index(x, y)] = 1
                for x, y in zip(handle, tips):
                    row[E.index(x, y)] = 1
                key = tuple(row)
                if key in seen_rows:  # symmetry hygiene; none expected
                    continue
                seen_rows.add(key)
                B.append(row)
                d.append(4)
                h = ",".join(map(str, handle))
                t = ",".join(map(str, tips))
                labels.append(f"comb[{h}|{t}]")
    return HPolytope(A, b, B, d, labels, m, n <= 5)


# -- vertex enumerators --------------------------------------------------------


def _matchings(n: int, must_cover: bool):
    def go(u: int, free: frozenset, acc: tuple):
        while u < n and u not in free:
            u += 1
        if u >= n:
            yield acc
            return
        rest = free - {u}
        if not must_cover:  # u may stay uncovered
            yield from go(u + 1, rest, acc)
        for v in sorted(rest):  # v > u always: u was the smallest free node
            yield from go(u + 1, rest - {v}, acc + ((u, v),))

    yield from go(0, frozenset(range(n)), ())


def enumerate_matchings(n: int) -> list[tuple[int, ...]]:
    """Characteristic vectors of all matchings of K_n, sorted."""
    E = EdgeIndex(n)
    return sorted(E.chi(m) for m in _matchings(n, False))


def enumerate_perfect_matchings(n: int) -> list[tuple[int, ...]]:
    if n % 2:
        raise ValueError("perfect matchings need an even node count")
    E = EdgeIndex(n)
    return sorted(E.chi(m) for m in _matchings(n, True))


def enumerate_tours(n: int) -> list[tuple[int, ...]]:
    """Characteristic vectors of Hamiltonian cycles of K_n, one per cycle up
    to rotation and direction, sorted."""
    if n < 3:
        raise ValueError("tours need at least three nodes")
    E = EdgeIndex(n)
    out = []
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:  # fix traversal direction
            continue
        cycle = (0,) + perm
        edges = [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
        out.append(E.chi(edges))
    return sorted(out)


# -- symmetric difference walks -------------------------------------------------


@dataclass(frozen=True)
class DiffComponent:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    kind: str  # "path", "cycle", or "trivial"


def symmetric_difference_components(M1, M2, n: int) -> list[DiffComponent]:
    """Connected components of (V, M1 symmetric-difference M2), isolated
    nodes included as trivial components."""
    e1 = _normalize_edges(M1)
    e2 = _normalize_edges(M2)
    _check_matching(e1, n)
    _check_matching(e2, n)
    diff = e1 ^ e2
    adj = {v: [] for v in range(n)}
    for u, v in diff:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        nodes = []
        while stack:
            u = stack.pop()
            nodes.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        nodes.sort()
        inside = set(nodes)
        edges = tuple(sorted(e for e in diff if e[0] in inside))
        if not edges:
            kind = "trivial"
        elif len(edges) == len(nodes):
            kind = "cycle"
        else:
            kind = "path"
        comps.append(DiffComponent(tuple(nodes), edges, kind))
    return comps


def _chi_diff(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _finish_walk(P, points, steps, target, step_cache, circuit_cache) -> Walk:
    if points[-1] != target:
        raise ConstructionFailed("walk did not land on the target vertex")
    walk = Walk(tuple(points), tuple(steps))
    report = validate_walk(P, walk, step_cache, circuit_cache)
    if not report.ok:
        raise ConstructionFailed(
            f"constructed walk failed validation at step {report.index}: {report.reason}"
        )
    return walk


def matching_component_walk(
    M1,
    M2,
    n: int,
    P: HPolytope | None = None,
    step_cache: dict | None = None,
    circuit_cache: dict | None = None,
) -> Walk:
    """One circuit step per nontrivial symmetric-difference component; the
    walk length equals the component count."""
    E = EdgeIndex(n)
    e1 = _normalize_edges(M1)
    e2 = _normalize_edges(M2)
    _check_matching(e1, n)
    _check_matching(e2, n)
    if P is None:
        P = build_matching_polytope(n)
    cur = e1
    points = [E.chi(cur)]
    steps = []
    for comp in symmetric_difference_components(e1, e2, n):
        if comp.kind == "trivial":
            continue
        nxt = cur ^ set(comp.edges)
        step = circuit_step(P, points[-1], _chi_diff(E.chi(nxt), points[-1]), certified=True)
        steps.append(step)
        points.append(step.to_point)
        cur = nxt
    return _finish_walk(P, points, steps, E.chi(e2), step_cache, circuit_cache)


def matching_two_step_recipe(
    M1,
    M2,
    n: int,
    P: HPolytope | None = None,
    step_cache: dict | None = None,
    circuit_cache: dict | None = None,
) -> Walk:
    """Walk of length at most two between matchings of K_n, n >= 7.

    Case analysis: when both matchings have private edges, the difference is
    a single circuit unless the symmetric difference splits V into exactly
    two components, in which case the components are applied one at a time.
    When one matching contains the other, up to two edges move directly; for
    three or more, a helper edge joining two private edges bridges the gap."""
    if n < 7:
        raise ValueError("the two-step recipe needs at least seven nodes")
    E = EdgeIndex(n)
    e1 = _normalize_edges(M1)
    e2 = _normalize_edges(M2)
    _check_matching(e1, n)
    _check_matching(e2, n)
    if P is None:
        P = build_matching_polytope(n)
    x1, x2 = E.chi(e1), E.chi(e2)
    if e1 == e2:
        return _finish_walk(P, [x1], [], x2, step_cache, circuit_cache)

    only1 = sorted(e1 - e2)
    only2 = sorted(e2 - e1)

    def hop(points, steps, target_edges):
        xt = E.chi(target_edges)
        step = circuit_step(P, points[-1], _chi_diff(xt, points[-1]), certified=True)
        steps.append(step)
        points.append(step.to_point)

    points: list = [x1]
    steps: list = []
    if only1 and only2:
        comps = symmetric_difference_components(e1, e2, n)
        nontrivial = [c for c in comps if c.kind != "trivial"]
        if len(nontrivial) == 1 or len(comps) >= 3:
            hop(points, steps, e2)
        else:
            # two components covering every node: switch them one at a time
            mid = e1 ^ set(nontrivial[0].edges)
            hop(points, steps, mid)
            hop(points, steps, e2)
    elif only2:
        # e1 is contained in e2
        if len(only2) <= 2:
            cur = set(e1)
            for f in only2:
                cur.add(f)
                hop(points, steps, cur)
        else:
            a, c = only2[0][0], only2[1][0]
            helper = (min(a, c), max(a, c))
            hop(points, steps, e1 | {helper})
            hop(points, steps, e2)
    else:
        # e2 is contained in e1
        if len(only1) <= 2:
            cur = set(e1)
            for f in only1:
                cur.remove(f)
                hop(points, steps, cur)
        else:
            a, c = only1[0][0], only1[1][0]
            helper = (min(a, c), max(a, c))
            hop(points, steps, e2 | {helper})
            hop(points, steps, e2)
    return _finish_walk(P, points, steps, x2, step_cache, circuit_cache)
