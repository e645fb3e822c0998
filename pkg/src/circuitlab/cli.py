"""Command-line interface.

Subcommands: gen, vertices, circuits, is-circuit, step, distance, diameter,
fstab-walk, verify.  Polytopes travel as exact JSON; `gen` output piped back
through `vertices` or re-emitted after a load is byte-identical.

Exit codes: 0 success, 1 generic error, 2 not a circuit, 3 no step possible,
4 enumeration budget exceeded, 5 constraint description incomplete.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from .circuits import CIRCUIT, enumerate_circuits, is_circuit
from .circuits import DEFAULT_BUDGET
from .errors import (
    BudgetExceeded,
    CircuitLabError,
    IncompleteDescription,
    NoStep,
    NotACircuit,
)
from .families import (
    EdgeIndex,
    build_matching_polytope,
    build_perfect_matching_polytope,
    build_tsp_polytope,
    enumerate_matchings,
    enumerate_perfect_matchings,
    enumerate_tours,
    matching_component_walk,
)
from .fstab import (
    C_WALK,
    Graph,
    ball_decomposition,
    build_fstab_polytope,
    center_node,
    enumerate_fstab_vertices,
    fstab_walk,
)
from .linalg import rank
from .polytope import HPolytope
from .rational import format_rational, format_vector, parse_rational
from .verify import SUITES, run_suite
from .walks import circuit_diameter, circuit_distance, circuit_step, one_step

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_A_CIRCUIT = 2
EXIT_NO_STEP = 3
EXIT_BUDGET = 4
EXIT_INCOMPLETE = 5

_EXIT_BY_ERROR = (
    (NotACircuit, EXIT_NOT_A_CIRCUIT),
    (NoStep, EXIT_NO_STEP),
    (BudgetExceeded, EXIT_BUDGET),
    (IncompleteDescription, EXIT_INCOMPLETE),
)


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(text)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(text)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return Graph.from_text(_read_text(path))


def _load_polytope(args) -> HPolytope:
    if getattr(args, "polytope", None):
        return HPolytope.from_json_text(_read_text(args.polytope))
    if getattr(args, "family", None):
        return _build_family(args)
    # no flag: read the polytope JSON from stdin (pipe-friendly)
    return HPolytope.from_json_text(sys.stdin.read())


def _build_family(args) -> HPolytope:
    fam = args.family
    if fam == "matching":
        return build_matching_polytope(args.n)
    if fam == "permatch":
        return build_perfect_matching_polytope(args.n)
    if fam == "tsp":
        return build_tsp_polytope(args.n, include_combs=args.combs)
    if fam == "fstab":
        if not args.graph:
            raise ValueError("--family fstab needs --graph FILE")
        return build_fstab_polytope(_load_graph(args.graph))
    raise ValueError(f"unknown family {fam!r}")


def _parse_vector(text: str, dim: int) -> tuple:
    items = [s for s in text.replace(",", " ").split() if s]
    if len(items) != dim:
        raise ValueError(f"expected {dim} coordinates, got {len(items)}")
    return tuple(parse_rational(s) for s in items)


def _named_point(name: str, P: HPolytope, args) -> tuple:
    """Point syntax: 'empty', 'perfect', or a comma-separated rational vector."""
    if name == "empty":
        return (0,) * P.ambient_dim
    if name == "perfect":
        fam = getattr(args, "family", None)
        if fam not in ("matching", "permatch"):
            raise ValueError("'perfect' is only defined for matching families")
        if args.n % 2:
            raise ValueError("'perfect' needs an even number of nodes")
        E = EdgeIndex(args.n)
        return E.chi([(2 * i, 2 * i + 1) for i in range(args.n // 2)])
    return _parse_vector(name, P.ambient_dim)


# -- vertex enumeration -------------------------------------------------------


def _infer_family_vertices(P: HPolytope):
    """Recognize the polytopes produced by the built-in generators from their
    row labels and use the matching combinatorial enumerator."""
    labels = set()
    for lbl in P.row_labels:
        labels.add(lbl.split("[", 1)[0])
    m = P.ambient_dim

    def nodes_from_edge_count():
        n = int((1 + (1 + 8 * m) ** 0.5) / 2 + 0.5)
        return n if n * (n - 1) // 2 == m else None

    if "subtour" in labels:
        n = nodes_from_edge_count()
        if n:
            return enumerate_tours(n)
    if "oddcut" in labels:
        n = nodes_from_edge_count()
        if n:
            return enumerate_perfect_matchings(n)
    if "oddset" in labels or ("degree" in labels and "nonneg" in labels and not P.A):
        n = nodes_from_edge_count()
        if n:
            return enumerate_matchings(n)
    if "edge" in labels:
        edges = []
        for lbl in P.row_labels:
            if lbl.startswith("edge["):
                u, v = lbl[5:-1].split(",")
                edges.append((int(u), int(v)))
        return enumerate_fstab_vertices(Graph(m, edges))
    return None


def _generic_vertices(P: HPolytope, budget: int) -> list[tuple]:
    """Basis enumeration: every vertex is the unique solution of n tight,
    independent rows.  Exponential; intended for small hand-made systems."""
    n = P.ambient_dim
    rows = [tuple(r) for r in P.A] + [tuple(r) for r in P.B]
    rhs = list(P.b) + list(P.d)
    if rank(rows) < n:
        return []
    out = set()
    visited = 0
    for idx in itertools.combinations(range(len(rows)), n):
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"more than {budget} row bases visited")
        sol = _solve_square([rows[i] for i in idx], [rhs[i] for i in idx])
        if sol is not None and P.contains(sol):
            out.add(sol)
    return sorted(out)


def _solve_square(rows, rhs):
    n = len(rows[0])
    M = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [v / pv for v in M[col]]
        for i in range(n):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return tuple(M[i][n] for i in range(n))


# -- distance with a proof-style fallback ----------------------------------------


def _matching_distance_bounds(P, x, y, n, budget):
    """Exact circuit distance for the matching polytope when full enumeration
    does not fit the budget, via the same bounding argument the verification
    suite uses: recipe walks from above, circuit refutations from below."""
    if x == y:
        return 0
    if one_step(P, x, y):
        return 1
    E = EdgeIndex(n)

    def edges_of(p):
        return [E.pair(i) for i, v in enumerate(p) if v]

    upper = matching_component_walk(edges_of(x), edges_of(y), n, P).length
    lower = 2
    zero = (0,) * P.ambient_dim
    src, dst = (x, y) if y != zero else (y, x)
    if src == zero and dst != zero:
        # from the all-zeros vertex every reachable point in one step is a
        # single-edge indicator; refute each as a predecessor of dst
        if all(
            not is_circuit(P, tuple(b - (1 if i == j else 0) for i, b in enumerate(dst)))
            for j in range(P.ambient_dim)
        ):
            lower = 3
    if upper == lower:
        return upper
    raise BudgetExceeded(
        f"distance bracketed to [{lower}, {upper}] but not resolved; "
        "rerun with a larger --budget"
    )


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    P = _build_family(args)
    text = P.to_json_text()
    sys.stdout.write(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_vertices(args) -> int:
    P = _load_polytope(args)
    vs = _infer_family_vertices(P)
    if vs is None:
        vs = _generic_vertices(P, args.budget)
    _emit(
        {
            "count": len(vs),
            "vertices": [format_vector(v) for v in vs],
        },
        args,
    )
    return EXIT_OK


def cmd_circuits(args) -> int:
    P = _load_polytope(args)
    cs = enumerate_circuits(P, budget=args.budget)
    _emit(
        {
            "count": len(cs),
            "circuits": [format_vector(c.direction) for c in cs.circuits],
        },
        args,
    )
    return EXIT_OK


def cmd_is_circuit(args) -> int:
    P = _load_polytope(args)
    g = _parse_vector(args.vector, P.ambient_dim)
    t = is_circuit(P, g)
    _emit(
        {
            "verdict": t.verdict,
            "certificate_rows": list(t.certificate) if t.certificate else None,
        },
        args,
    )
    if t.verdict == CIRCUIT:
        return EXIT_OK
    return EXIT_NOT_A_CIRCUIT


def cmd_step(args) -> int:
    P = _load_polytope(args)
    x = _named_point(args.point, P, args)
    g = _parse_vector(args.vector, P.ambient_dim)
    s = circuit_step(P, x, g, certified=args.certified)
    _emit(
        {
            "from": format_vector(s.from_point),
            "direction": format_vector(s.direction),
            "alpha": format_rational(s.alpha),
            "to": format_vector(s.to_point),
        },
        args,
    )
    return EXIT_OK


def cmd_distance(args) -> int:
    P = _load_polytope(args)
    x = _named_point(args.src, P, args)
    y = _named_point(args.dst, P, args)
    try:
        circuits = enumerate_circuits(P, budget=args.budget)
    except BudgetExceeded:
        if getattr(args, "family", None) == "matching":
            d = _matching_distance_bounds(P, x, y, args.n, args.budget)
            _emit({"distance": d, "method": "bounds"}, args)
            return EXIT_OK
        raise
    d = circuit_distance(P, x, y, circuits, depth_limit=args.depth_limit)
    if d is None:
        _emit({"distance": None, "method": "bfs", "depth_limit": args.depth_limit}, args)
        return EXIT_ERROR
    _emit({"distance": d, "method": "bfs"}, args)
    return EXIT_OK


def cmd_diameter(args) -> int:
    P = _load_polytope(args)
    vs = _infer_family_vertices(P)
    if vs is None:
        vs = _generic_vertices(P, args.budget)
    circuits = enumerate_circuits(P, budget=args.budget)
    d = circuit_diameter(P, vs, circuits)
    _emit({"diameter": d, "vertices": len(vs)}, args)
    return EXIT_OK


def cmd_fstab_walk(args) -> int:
    G = _load_graph(args.graph)
    vs = enumerate_fstab_vertices(G)
    for label, idx in (("--from", args.src), ("--to", args.dst)):
        if not 0 <= idx < len(vs):
            raise ValueError(f"{label} index out of range (0..{len(vs) - 1})")
    root = args.root if args.root is not None else center_node(G)
    ecc = ball_decomposition(G, root).eccentricity
    w = fstab_walk(G, vs[args.src], vs[args.dst], root)
    payload = w.to_json_dict()
    payload.update(
        {
            "root": root,
            "eccentricity": ecc,
            "length": w.length,
            "length_budget": 4 * ecc + C_WALK,
        }
    )
    _emit(payload, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, sample=args.sample, seed=args.seed)
    sys.stdout.write(report.to_text() + "\n")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(json.dumps(report.to_json_dict(), indent=2) + "\n")
    return EXIT_OK if report.passed else EXIT_ERROR


# -- argument plumbing -----------------------------------------------------------


def _add_polytope_source(sp, family_flags=True):
    sp.add_argument("--polytope", help="polytope JSON file ('-' for stdin)")
    if family_flags:
        sp.add_argument("--family", choices=["matching", "permatch", "tsp", "fstab"])
        sp.add_argument("--n", type=int, help="node count for the chosen family")
        sp.add_argument("--combs", action="store_true", help="include comb rows (tsp)")
        sp.add_argument("--graph", help="graph file for --family fstab")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="circuitlab",
        description="Exact circuit walks on rational polytopes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="emit a family polytope as JSON")
    sp.add_argument("--family", required=True, choices=["matching", "permatch", "tsp", "fstab"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--combs", action="store_true")
    sp.add_argument("--graph")
    sp.add_argument("--json", help="also write the JSON to this file")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("vertices", help="enumerate the vertices of a polytope")
    _add_polytope_source(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_vertices)

    sp = sub.add_parser("circuits", help="enumerate canonical circuits")
    _add_polytope_source(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_circuits)

    sp = sub.add_parser("is-circuit", help="test one direction vector")
    _add_polytope_source(sp)
    sp.add_argument("--vector", required=True, help="comma-separated rationals")
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_is_circuit)

    sp = sub.add_parser("step", help="take one maximal circuit step")
    _add_polytope_source(sp)
    sp.add_argument("--point", required=True, help="start point or 'empty'/'perfect'")
    sp.add_argument("--vector", required=True)
    sp.add_argument("--certified", action="store_true", help="run the circuit test first")
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_step)

    sp = sub.add_parser("distance", help="exact circuit distance between two points")
    _add_polytope_source(sp)
    sp.add_argument("--from", dest="src", required=True)
    sp.add_argument("--to", dest="dst", required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--depth-limit", type=int, default=4)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("diameter", help="circuit diameter over all vertex pairs")
    _add_polytope_source(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_diameter)

    sp = sub.add_parser("fstab-walk", help="walk between two fractional stable set vertices")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--from", dest="src", type=int, required=True, help="vertex index")
    sp.add_argument("--to", dest="dst", type=int, required=True, help="vertex index")
    sp.add_argument("--root", type=int, default=None)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_fstab_walk)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    sp.add_argument("--sample", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CircuitLabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        for etype, code in _EXIT_BY_ERROR:
            if isinstance(exc, etype):
                return code
        return EXIT_ERROR
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
