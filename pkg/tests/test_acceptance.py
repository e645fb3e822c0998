"""Acceptance gate: one test per headline claim, exact tolerances.

Each test reproduces one recorded result end to end through the public API
(the same code paths the `verify` subcommand uses) and fails loudly with the
full per-check report when anything drifts.
"""

import random
from fractions import Fraction

import pytest

from circuitlab import (
    Graph,
    build_fstab_polytope,
    build_matching_polytope,
    build_perfect_matching_polytope,
    build_tsp_polytope,
    circuit_step,
    enumerate_circuits,
    enumerate_fstab_vertices,
    enumerate_matchings,
    enumerate_perfect_matchings,
    enumerate_tours,
)
from circuitlab.errors import NoStep
from circuitlab.verify import run_suite


def _run(suite, **kw):
    report = run_suite(suite, **kw)
    print(report.to_text())
    assert report.passed, "\n" + report.to_text()
    return report


def test_matching_diameters_at_two_to_five_nodes():
    # diameters 1, 1, 2, 2 for 2..5 nodes, full enumeration + shortest walks
    _run("matching-small")


def test_matching_six_nodes_empty_to_perfect_needs_three_steps():
    # budget refusal, the two refutation facts, and length-3 walks everywhere
    _run("matching-6")


def test_matching_seven_nodes_all_pairs_within_two_steps():
    # every ordered matching pair within two validated steps, some need two
    _run("matching-7")


def test_perfect_matching_diameters_at_four_to_ten_nodes():
    # 1 at n=4 and 6; 2 at n=8 with the crossing witness; 1 again at n=10
    _run("permatch")


def test_tsp_diameters_at_five_to_seven_nodes():
    _run("tsp-5")
    _run("tsp-6")
    _run("tsp-7")


def test_stable_set_circuit_oracle_matches_generic_test():
    _run("fstab-oracle")


def test_stable_set_walks_bounded_by_four_ecc_plus_constant():
    _run("fstab-walks")


def test_sign_uniform_circuits_have_singleton_support():
    _run("nonneg-circuits")


def test_step_invariants_hold_on_ten_thousand_random_steps():
    # 10^4 maximal steps across the family polytopes: every landing stays
    # feasible and tightens a blocking row, and the step cannot be repeated
    rng = random.Random(20251114)
    arenas = []
    for P, vertices in [
        (build_matching_polytope(3), enumerate_matchings(3)),
        (build_matching_polytope(4), enumerate_matchings(4)),
        (build_perfect_matching_polytope(4), enumerate_perfect_matchings(4)),
        (build_tsp_polytope(5), enumerate_tours(5)),
    ]:
        arenas.append((P, vertices, list(enumerate_circuits(P).circuits)))
    for G in [
        Graph(3, [(0, 1), (1, 2), (0, 2)]),
        Graph(4, [(0, 1), (1, 2), (2, 3)]),
        Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    ]:
        P = build_fstab_polytope(G)
        arenas.append((P, enumerate_fstab_vertices(G, P), list(enumerate_circuits(P).circuits)))

    taken = 0
    attempts = 0
    while taken < 10_000:
        attempts += 1
        assert attempts < 200_000, "direction sampling starved"
        P, vertices, circuits = arenas[rng.randrange(len(arenas))]
        # start from a vertex or a rational point between two vertices
        if rng.random() < 0.5:
            x = rng.choice(vertices)
        else:
            a, b = rng.choice(vertices), rng.choice(vertices)
            lam = Fraction(rng.randint(1, 3), 4)
            x = tuple(p + lam * (q - p) for p, q in zip(a, b))
        g = rng.choice(circuits).direction
        if rng.random() < 0.5:
            g = tuple(-v for v in g)
        if P.max_step(x, g) is None:
            # blocked direction: the step must refuse, not silently no-op
            with pytest.raises(NoStep):
                circuit_step(P, x, g, certified=True)
            continue
        s = circuit_step(P, x, g, certified=True)
        assert P.contains(s.to_point)
        vals = P.ineq_values(s.to_point)
        blocking = [
            i
            for i, (row, rhs) in enumerate(P.ineq_int)
            if vals[i] == rhs and sum(r * v for r, v in zip(row, g)) > 0
        ]
        assert blocking, "landing left no tight row with forward movement"
        with pytest.raises(NoStep):
            circuit_step(P, s.to_point, g, certified=True)
        taken += 1
    assert taken == 10_000
