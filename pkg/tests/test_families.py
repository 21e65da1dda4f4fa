import pytest

from wellhued.chroma import hue_profile
from wellhued.families import (
    Matching,
    alternating_reachable,
    conjecture_alpha_predicate,
    first_perfect_matching,
    greedy_independent_alt_dominating,
    is_alternating_dominating,
    is_corona_of_complete,
    matching_invariance_check,
    perfect_matchings,
    thm222_predicate,
    thm_2k1_predicate,
    thm_2k1_witness,
    thm_3k_predicate,
    thm_3k_witness,
    validate_matching,
)
from wellhued.graph import (
    complete_graph,
    corona,
    cycle_graph,
    from_edges,
    from_graph6,
    path_graph,
    union,
)

OCTAHEDRON = from_graph6("E]~o")
HOUSE = from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (4, 1), (4, 3)])


# --- matchings ---------------------------------------------------------------


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching(((0, 0),))
    with pytest.raises(ValueError):
        Matching(((0, 1), (1, 2)))
    m = Matching(((0, 1), (2, 3)))
    assert m.covered == 0b1111
    assert m.partner(2) == 3 and m.partner(5) is None
    assert m.is_perfect(path_graph(4))
    assert m.to_json() == [[0, 1], [2, 3]]
    with pytest.raises(ValueError):
        validate_matching(cycle_graph(4), Matching(((0, 2),)))


def test_perfect_matchings_counts():
    assert len(perfect_matchings(complete_graph(4))) == 3
    assert len(perfect_matchings(cycle_graph(6))) == 2
    assert len(perfect_matchings(path_graph(4))) == 1
    assert perfect_matchings(path_graph(3)) == []
    assert first_perfect_matching(cycle_graph(4)) is not None
    assert first_perfect_matching(path_graph(3)) is None
    assert first_perfect_matching(union(complete_graph(1), complete_graph(3))) is None


# --- alternating paths ---------------------------------------------------------


def test_alternating_reachability_p4():
    g = path_graph(4)
    m = Matching(((0, 1), (2, 3)))
    r = alternating_reachable(g, m, 0b0001)
    assert r.reached == 0b1111
    assert is_alternating_dominating(g, m, 0b0001)
    with pytest.raises(ValueError):
        alternating_reachable(g, Matching(((0, 1),)), 0b0100)  # unmatched source


def test_alternating_reachability_is_blocked_by_components():
    g = union(path_graph(2), path_graph(2))
    m = Matching(((0, 1), (2, 3)))
    assert alternating_reachable(g, m, 0b0001).reached == 0b0011
    assert not is_alternating_dominating(g, m, 0b0001)


def test_greedy_independent_alt_dominating():
    two_k2 = union(path_graph(2), path_graph(2))
    m = Matching(((0, 1), (2, 3)))
    assert greedy_independent_alt_dominating(two_k2, m) == 0b0101
    k4 = complete_graph(4)
    assert greedy_independent_alt_dominating(k4, Matching(((0, 1), (2, 3)))) == 0b0001
    with pytest.raises(ValueError):
        greedy_independent_alt_dominating(path_graph(4), Matching(((0, 1),)))


def test_matching_invariance():
    assert matching_invariance_check(cycle_graph(6), 0b000001)
    assert matching_invariance_check(complete_graph(4), 0b0011)
    with pytest.raises(ValueError):
        matching_invariance_check(path_graph(3), 0b001)


# --- family predicates -----------------------------------------------------------


def test_is_corona_of_complete():
    for m in range(1, 5):
        assert is_corona_of_complete(corona(complete_graph(m))) == m
    assert is_corona_of_complete(complete_graph(2)) == 1
    assert is_corona_of_complete(path_graph(4)) == 2
    assert is_corona_of_complete(cycle_graph(4)) is None
    assert is_corona_of_complete(cycle_graph(6)) is None
    assert is_corona_of_complete(path_graph(3)) is None


def test_thm222_predicate():
    assert thm222_predicate(OCTAHEDRON)
    assert thm222_predicate(cycle_graph(4))
    assert not thm222_predicate(cycle_graph(6))  # V - N[u] is not a clique
    assert not thm222_predicate(complete_graph(4))  # complement lacks a matching
    assert not thm222_predicate(cycle_graph(5))  # odd order


def test_thm_2k1():
    holds, c = thm_2k1_witness(cycle_graph(5))
    assert holds and c is not None
    assert hue_profile(cycle_graph(5)).sequence == (2, 4, 5)
    holds, c = thm_2k1_witness(HOUSE)
    assert (holds, c) == (True, 1)
    assert hue_profile(HOUSE).sequence == (2, 4, 5)
    assert not thm_2k1_predicate(cycle_graph(7))
    assert not thm_2k1_predicate(cycle_graph(4))  # even order
    assert not thm_2k1_predicate(path_graph(3))


def test_thm_3k():
    # clique on 0..5 plus an edge 6-7 matched into the clique in the complement
    g = from_edges(
        8,
        [(u, v) for u in range(6) for v in range(u + 1, 6)] + [(6, 7), (5, 6), (4, 7)],
    )
    holds, clique = thm_3k_witness(g, 2)
    assert holds and clique == (0, 1, 2, 3, 4, 5)
    assert hue_profile(g).sequence == (2, 4, 5, 6, 7, 8)
    assert not thm_3k_predicate(cycle_graph(6), 2)
    with pytest.raises(ValueError):
        thm_3k_witness(complete_graph(6), 1)
    with pytest.raises(ValueError):
        thm_3k_witness(complete_graph(5), 2)


def test_conjecture_alpha():
    assert conjecture_alpha_predicate(cycle_graph(6))
    assert not conjecture_alpha_predicate(cycle_graph(5))  # n not divisible by alpha
    assert conjecture_alpha_predicate(complete_graph(4))
    assert not conjecture_alpha_predicate(path_graph(3))
