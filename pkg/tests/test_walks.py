from fractions import Fraction

import pytest

from circuitlab import (
    Walk,
    build_matching_polytope,
    circuit_diameter,
    circuit_distance,
    circuit_step,
    enumerate_circuits,
    enumerate_matchings,
    one_step,
    two_step_search,
    validate_walk,
)
from circuitlab.errors import DepthLimit, NoStep, NotACircuit
from circuitlab.walks import WalkStep


def chain(steps):
    pts = (steps[0].from_point,) + tuple(s.to_point for s in steps)
    return Walk(pts, tuple(steps))


def test_circuit_step_lands_on_boundary():
    P = build_matching_polytope(3)
    s = circuit_step(P, (0, 0, 0), (1, 0, 0))
    assert s.alpha == 1
    assert s.to_point == (1, 0, 0)
    assert s.direction == (1, 0, 0)
    # some inequality with positive movement is tight at the landing
    vals = P.ineq_values(s.to_point)
    tight = [i for i, (row, rhs) in enumerate(P.ineq_int) if vals[i] == rhs]
    moving = [
        i
        for i in tight
        if sum(a * b for a, b in zip(P.ineq_int[i][0], s.direction)) > 0
    ]
    assert moving


def test_circuit_step_scales_direction_not_length():
    P = build_matching_polytope(3)
    s = circuit_step(P, (0, 0, 0), (2, 0, 0))
    assert s.to_point == (1, 0, 0)
    assert s.direction == (1, 0, 0)


def test_circuit_step_no_step():
    P = build_matching_polytope(3)
    with pytest.raises(NoStep):
        circuit_step(P, (1, 0, 0), (1, 0, 0))


def test_step_rejects_non_circuit_by_default():
    P = build_matching_polytope(4)
    with pytest.raises(NotACircuit):
        circuit_step(P, (0,) * 6, (1, 0, 0, 0, 0, 1))
    # certified=True skips the test and takes the (feasible) move anyway
    s = circuit_step(P, (0,) * 6, (1, 0, 0, 0, 0, 1), certified=True)
    assert s.alpha == 1


def test_repeating_a_maximal_step_raises():
    P = build_matching_polytope(3)
    s = circuit_step(P, (0, 0, 0), (0, 1, 0))
    with pytest.raises(NoStep):
        circuit_step(P, s.to_point, (0, 1, 0))


def test_validate_walk_accepts_real_walk():
    P = build_matching_polytope(3)
    s1 = circuit_step(P, (0, 0, 0), (1, 0, 0))
    s2 = circuit_step(P, s1.to_point, (-1, 0, 1))
    report = validate_walk(P, chain([s1, s2]))
    assert report.ok, report.reason


def test_validate_walk_flags_short_step():
    P = build_matching_polytope(3)
    # half of the maximal step: feasible but not maximal
    bad = WalkStep(
        (0, 0, 0), None, (1, 0, 0), Fraction(1, 2), (Fraction(1, 2), 0, 0)
    )
    report = validate_walk(P, chain([bad]))
    assert not report.ok
    assert report.reason == "alpha-not-maximal"
    assert report.index == 0


def test_validate_walk_flags_disconnected_chain():
    P = build_matching_polytope(3)
    s1 = circuit_step(P, (0, 0, 0), (1, 0, 0))
    s2 = circuit_step(P, (0, 0, 0), (0, 1, 0))  # does not start at s1's landing
    walk = Walk((s1.from_point, s1.to_point, s2.to_point), (s1, s2))
    report = validate_walk(P, walk)
    assert not report.ok
    assert report.reason == "points-steps-mismatch"


def test_one_step():
    P = build_matching_polytope(3)
    assert one_step(P, (0, 0, 0), (1, 0, 0))
    assert one_step(P, (1, 0, 0), (0, 1, 0))
    with pytest.raises(ValueError):
        one_step(P, (0, 0, 0), (0, 0, 0))


def test_two_step_search():
    P = build_matching_polytope(4)
    vertices = enumerate_matchings(4)
    empty = (0,) * 6
    perfect = tuple(1 if k in (0, 5) else 0 for k in range(6))  # {01, 23}
    assert not one_step(P, empty, perfect)
    w = two_step_search(P, empty, perfect, vertices)
    assert w is not None and w.length == 2
    assert validate_walk(P, w).ok
    assert w.points[0] == empty and w.points[-1] == perfect


def test_distance_and_diameter_match3():
    P = build_matching_polytope(3)
    circuits = enumerate_circuits(P)
    vs = enumerate_matchings(3)
    assert circuit_distance(P, (0, 0, 0), (1, 0, 0), circuits) == 1
    assert circuit_distance(P, (0, 0, 0), (0, 0, 0), circuits) == 0
    assert circuit_diameter(P, vs, circuits) == 1


def test_distance_depth_limit():
    P = build_matching_polytope(4)
    circuits = enumerate_circuits(P)
    empty = (0,) * 6
    perfect = tuple(1 if k in (0, 5) else 0 for k in range(6))
    assert circuit_distance(P, empty, perfect, circuits) == 2
    assert circuit_distance(P, empty, perfect, circuits, depth_limit=1) is None
    with pytest.raises(DepthLimit):
        circuit_diameter(P, enumerate_matchings(4), circuits, depth_limit=1)
