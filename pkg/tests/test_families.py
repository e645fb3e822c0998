import itertools

import pytest

from circuitlab import (
    EdgeIndex,
    build_matching_polytope,
    build_perfect_matching_polytope,
    build_tsp_polytope,
    enumerate_matchings,
    enumerate_perfect_matchings,
    enumerate_tours,
    is_circuit,
    matching_component_walk,
    matching_two_step_recipe,
    symmetric_difference_components,
    validate_walk,
)


def test_edge_index_bijection():
    E = EdgeIndex(5)
    assert len(E) == 10
    seen = set()
    for k in range(10):
        u, v = E.pair(k)
        assert u < v
        assert E.index(u, v) == k
        assert E.index(v, u) == k
        seen.add((u, v))
    assert len(seen) == 10
    assert E.pair(0) == (0, 1)  # lexicographic start


def test_chi():
    E = EdgeIndex(4)
    x = E.chi([(0, 1), (2, 3)])
    assert sum(x) == 2
    assert x[E.index(0, 1)] == 1 and x[E.index(2, 3)] == 1


def test_matching_polytope_row_structure():
    P = build_matching_polytope(4)
    assert P.ambient_dim == 6
    assert len(P.A) == 0
    # 6 nonneg + 4 degree + 4 odd sets of size 3
    assert len(P.B) == 14
    kinds = [lbl.split("[")[0] for lbl in P.row_labels]
    assert kinds.count("nonneg") == 6
    assert kinds.count("degree") == 4
    assert kinds.count("oddset") == 4
    assert P.description_complete

    P5 = build_matching_polytope(5)
    kinds5 = [lbl.split("[")[0] for lbl in P5.row_labels]
    # odd sets of size 3 and 5
    assert kinds5.count("oddset") == 10 + 1


def test_matching_polytope_odd_set_rhs():
    P = build_matching_polytope(5)
    for (row, rhs), lbl in zip(P.ineq_int, P.row_labels):
        if lbl.startswith("oddset["):
            size = lbl.count(",") + 1
            assert rhs == (size - 1) // 2


def test_matching_vertices_are_matchings():
    P = build_matching_polytope(4)
    vs = enumerate_matchings(4)
    assert len(vs) == 10
    for x in vs:
        assert P.is_vertex(x)


def test_matching_counts():
    assert len(enumerate_matchings(6)) == 76
    assert len(enumerate_matchings(7)) == 232


def test_perfect_matching_polytope_row_structure():
    P = build_perfect_matching_polytope(8)
    assert len(P.A) == 8  # one degree equality per node
    kinds = [lbl.split("[")[0] for lbl in P.row_labels]
    # odd cuts over all odd S with 3 <= |S| <= 7, plus nonnegativity
    assert kinds.count("oddcut") == 120
    assert kinds.count("nonneg") == 28
    with pytest.raises(ValueError):
        build_perfect_matching_polytope(5)


def test_perfect_matching_counts():
    assert len(enumerate_perfect_matchings(4)) == 3
    assert len(enumerate_perfect_matchings(8)) == 105
    assert len(enumerate_perfect_matchings(10)) == 945
    P = build_perfect_matching_polytope(4)
    for x in enumerate_perfect_matchings(4):
        assert P.is_vertex(x)


def test_tsp_polytope_row_structure():
    P5 = build_tsp_polytope(5)
    assert P5.description_complete
    P6 = build_tsp_polytope(6)
    assert not P6.description_complete  # subtour relaxation only
    P6c = build_tsp_polytope(6, include_combs=True)
    kinds = [lbl.split("[")[0] for lbl in P6c.row_labels]
    assert kinds.count("comb") == 120
    P7c = build_tsp_polytope(7, include_combs=True)
    kinds7 = [lbl.split("[")[0] for lbl in P7c.row_labels]
    assert kinds7.count("comb") == 840
    assert len(P7c.B) == 973
    with pytest.raises(ValueError):
        build_tsp_polytope(5, include_combs=True)


def test_tour_counts_and_vertexhood():
    assert len(enumerate_tours(5)) == 12
    assert len(enumerate_tours(6)) == 60
    assert len(enumerate_tours(7)) == 360
    P = build_tsp_polytope(5)
    for x in enumerate_tours(5):
        assert P.is_vertex(x)


def test_symmetric_difference_components():
    # M1 = {01, 23}, M2 = {12, 03}: one 4-cycle
    comps = symmetric_difference_components([(0, 1), (2, 3)], [(1, 2), (0, 3)], 4)
    assert len(comps) == 1
    assert comps[0].kind == "cycle"
    assert sorted(comps[0].nodes) == [0, 1, 2, 3]

    # M1 = {01}, M2 = {12}: a path through shared node 1
    comps = symmetric_difference_components([(0, 1)], [(1, 2)], 4)
    kinds = sorted(c.kind for c in comps)
    assert "path" in kinds

    # identical matchings: only trivial components
    comps = symmetric_difference_components([(0, 1)], [(0, 1)], 4)
    assert all(c.kind == "trivial" for c in comps)


def test_matching_component_walk_small():
    n = 5
    P = build_matching_polytope(n)
    E = EdgeIndex(n)
    M1 = [(0, 1), (2, 3)]
    M2 = [(1, 2), (3, 4)]
    w = matching_component_walk(M1, M2, n, P)
    assert w.points[0] == E.chi(M1)
    assert w.points[-1] == E.chi(M2)
    assert validate_walk(P, w).ok
    assert w.length <= 3


def test_two_step_recipe_covers_the_awkward_cases():
    n = 7
    P = build_matching_polytope(n)
    E = EdgeIndex(n)
    cases = [
        # pure add of three disjoint edges (needs the helper-edge detour)
        ([], [(0, 1), (2, 3), (4, 5)]),
        # pure removal of three disjoint edges
        ([(0, 1), (2, 3), (4, 5)], []),
        # two nontrivial swap components, no trivial ones
        ([(0, 1), (2, 3)], [(1, 2), (3, 4)]),
        # identical
        ([(0, 1)], [(0, 1)]),
        # single shared edge plus swap
        ([(0, 1), (2, 3)], [(0, 1), (3, 4)]),
    ]
    for M1, M2 in cases:
        w = matching_two_step_recipe(M1, M2, n, P)
        assert w.length <= 2
        assert w.points[0] == E.chi(M1)
        assert w.points[-1] == E.chi(M2)
        assert validate_walk(P, w).ok


def test_two_step_recipe_needs_seven_nodes():
    with pytest.raises(ValueError):
        matching_two_step_recipe([], [(0, 1)], 6)


def test_ordered_matching_pair_sample_at_n7():
    n = 7
    P = build_matching_polytope(n)
    E = EdgeIndex(n)
    vs = enumerate_matchings(n)
    step_cache, circuit_cache = {}, {}

    def edges_of(x):
        return [E.pair(i) for i, v in enumerate(x) if v]

    found_non_circuit = False
    for x1, x2 in itertools.islice(itertools.permutations(vs, 2), 300):
        w = matching_two_step_recipe(
            edges_of(x1), edges_of(x2), n, P, step_cache, circuit_cache
        )
        assert w.length <= 2
        if w.length == 2:
            diff = tuple(b - a for a, b in zip(x1, x2))
            if not is_circuit(P, diff):
                found_non_circuit = True
    assert found_non_circuit
