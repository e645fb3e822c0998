import pytest

from circuitlab import (
    CIRCUIT,
    NOT_CERTIFIED,
    NOT_CIRCUIT,
    HPolytope,
    build_matching_polytope,
    canonicalize,
    enumerate_circuits,
    is_circuit,
)
from circuitlab.errors import BudgetExceeded, IncompleteDescription

# circuits of the triangle-free matching polytope on 3 nodes, derived once by
# brute force over all support patterns and pinned here
MATCH3_CIRCUITS = {
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, -1, 0),
    (1, 0, -1),
    (0, 1, -1),
    (1, 1, -1),
    (1, -1, 1),
    (1, -1, -1),
}


def test_canonicalize():
    c = canonicalize((0, -2, 4))
    assert c.direction == (0, 1, -2)
    assert canonicalize((3, 6)).direction == (1, 2)
    with pytest.raises(ValueError):
        canonicalize((0, 0))


def test_match3_circuit_set():
    P = build_matching_polytope(3)
    cs = enumerate_circuits(P)
    assert cs.directions() == MATCH3_CIRCUITS


def test_match4_circuit_count():
    P = build_matching_polytope(4)
    cs = enumerate_circuits(P)
    assert len(cs) == 93


def test_is_circuit_agrees_with_enumeration_on_match3():
    P = build_matching_polytope(3)
    # scan all sign patterns over the 3 coordinates
    from itertools import product

    for g in product((-1, 0, 1), repeat=3):
        if not any(g):
            continue
        expected = canonicalize(g).direction in MATCH3_CIRCUITS
        assert bool(is_circuit(P, g)) == expected


def test_is_circuit_verdicts():
    P = build_matching_polytope(4)
    t = is_circuit(P, (1, 0, 0, 0, 0, 0))
    assert t.verdict == CIRCUIT and bool(t)
    t = is_circuit(P, (1, 0, 0, 0, 0, 1))
    assert t.verdict == NOT_CIRCUIT and not bool(t)
    with pytest.raises(ValueError):
        is_circuit(P, (0, 0, 0, 0, 0, 0))


def test_is_circuit_rejects_kernel_violations():
    # equality row forces g_1 + g_2 = 0
    P = HPolytope(
        [(1, 1)],
        [1],
        [(-1, 0), (0, -1)],
        [0, 0],
        ["sum", "xpos", "ypos"],
        2,
        True,
    )
    assert is_circuit(P, (1, -1))
    assert not is_circuit(P, (1, 1))


def test_partial_description_not_certified():
    # same rows as the square but flagged incomplete: a failing test can only
    # say "not-certified", a passing one is still sound
    B = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    P = HPolytope([], [], B, [1, 1, 0, 0], list("abcd"), 2, False)
    assert is_circuit(P, (1, 0)).verdict == CIRCUIT
    assert is_circuit(P, (1, 1)).verdict == NOT_CERTIFIED


def test_enumeration_needs_complete_description():
    B = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    P = HPolytope([], [], B, [1, 1, 0, 0], list("abcd"), 2, False)
    with pytest.raises(IncompleteDescription):
        enumerate_circuits(P)


def test_enumeration_budget():
    P = build_matching_polytope(4)
    with pytest.raises(BudgetExceeded):
        enumerate_circuits(P, budget=10)


def test_circuits_closed_under_negation():
    P = build_matching_polytope(3)
    for c in enumerate_circuits(P).circuits:
        neg = tuple(-v for v in c.direction)
        assert is_circuit(P, neg)
