import random
from itertools import combinations

import pytest

from wellhued.graph import (
    Graph,
    Graph6LengthError,
    Graph6OrderError,
    Graph6TrailingBitsError,
    bits,
    canonical_form,
    complement,
    complete_graph,
    complete_multipartite,
    components,
    corona,
    cycle_graph,
    empty_graph,
    enumerate_connected_nonisomorphic,
    enumerate_nonisomorphic,
    from_edge_list,
    from_edges,
    from_graph6,
    induced,
    is_connected,
    join,
    path_graph,
    permute,
    to_edge_list,
    to_graph6,
    union,
)
from oracles import naive_canonical_form


def _random_graph(rng, n, p):
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edges(n, edges)


# --- construction and validation -------------------------------------------


def test_post_init_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10,))  # length mismatch
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        Graph(1, (0b10,))  # stray bit
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)


def test_from_edges_rejects_loops():
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])


def test_basic_accessors():
    g = cycle_graph(5)
    assert g.order == 5 and g.size() == 5
    assert g.degree_sequence() == (2, 2, 2, 2, 2)
    assert g.has_edge(0, 4) and not g.has_edge(0, 2)
    assert g.closed_neighborhood(0) == 0b10011
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert list(bits(0b101001)) == [0, 3, 5]


def test_constructors():
    assert complete_graph(4).size() == 6
    assert empty_graph(3).size() == 0
    assert path_graph(4).degree_sequence() == (1, 1, 2, 2)
    with pytest.raises(ValueError):
        cycle_graph(2)
    k23 = complete_multipartite([2, 3])
    assert k23.size() == 6 and k23.degree_sequence() == (2, 2, 2, 3, 3)
    with pytest.raises(ValueError):
        complete_multipartite([2, 0])


def test_operations():
    c5 = cycle_graph(5)
    assert complement(complement(c5)).adj == c5.adj
    assert complement(complete_graph(4)).size() == 0
    u = union(complete_graph(2), complete_graph(3))
    assert u.order == 5 and u.size() == 4 and not is_connected(u)
    j = join(complete_graph(2), complete_graph(3))
    assert j.adj == complete_graph(5).adj
    cr = corona(complete_graph(3))
    assert cr.order == 6 and cr.size() == 6
    assert sorted(cr.degree_sequence()) == [1, 1, 1, 3, 3, 3]


def test_induced_and_permute():
    c5 = cycle_graph(5)
    sub = induced(c5, 0b00111)  # vertices 0,1,2 -> path
    assert sub.adj == path_graph(3).adj
    p = permute(c5, [1, 2, 3, 4, 0])
    assert p.degree_sequence() == c5.degree_sequence() and p.size() == 5


def test_connectivity_and_components():
    assert is_connected(cycle_graph(4))
    g = union(path_graph(2), path_graph(3))
    assert not is_connected(g)
    assert components(g) == [0b00011, 0b11100]
    assert is_connected(empty_graph(0))


# --- graph6 ------------------------------------------------------------------


def test_graph6_known_values():
    assert to_graph6(complete_graph(2)) == "A_"
    assert to_graph6(complete_graph(3)) == "Bw"
    assert from_graph6("A_").adj == complete_graph(2).adj
    assert from_graph6(">>graph6<<Bw").adj == complete_graph(3).adj


def test_graph6_round_trip_small():
    rng = random.Random(7)
    for n in range(0, 9):
        for _ in range(20):
            g = _random_graph(rng, n, 0.5)
            assert from_graph6(to_graph6(g)).adj == g.adj


def test_graph6_long_order_form():
    for n in (63, 64):
        g = path_graph(n)
        s = to_graph6(g)
        assert s.startswith("~")
        assert from_graph6(s).adj == g.adj


def test_graph6_errors():
    with pytest.raises(Graph6LengthError):
        from_graph6("")
    with pytest.raises(Graph6LengthError):
        from_graph6("B")  # truncated body
    with pytest.raises(Graph6LengthError):
        from_graph6("Bww")  # extra body
    with pytest.raises(Graph6TrailingBitsError):
        from_graph6("Bx")  # nonzero padding bits
    with pytest.raises(Graph6OrderError):
        from_graph6("~@A" + chr(63 + 1))  # n = 65 > 64
    with pytest.raises(Graph6LengthError):
        from_graph6("B\x07")  # byte outside printable range


# --- edge lists ---------------------------------------------------------------


def test_edge_list_round_trip():
    g = cycle_graph(6)
    text = to_edge_list(g)
    assert text.splitlines()[0] == "6 6"
    assert from_edge_list(text).adj == g.adj
    commented = "# a cycle\n" + text
    assert from_edge_list(commented).adj == g.adj


def test_edge_list_errors():
    with pytest.raises(ValueError):
        from_edge_list("")
    with pytest.raises(ValueError):
        from_edge_list("3\n0 1\n")  # bad header
    with pytest.raises(ValueError):
        from_edge_list("3 2\n0 1\n")  # missing edge line
    with pytest.raises(ValueError):
        from_edge_list("3 1\n1 0\n")  # u >= v
    with pytest.raises(ValueError):
        from_edge_list("3 1\n0 3\n")  # v out of range


# --- canonical forms and enumeration -----------------------------------------


def test_canonical_form_is_label_invariant():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 7)
        g = _random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(permute(g, perm))


def test_canonical_form_matches_permutation_oracle():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 6)
        g = _random_graph(rng, n, 0.5)
        assert canonical_form(g) == naive_canonical_form(g)


def test_canonical_form_order_cap():
    with pytest.raises(ValueError):
        canonical_form(empty_graph(11))


def test_enumeration_counts():
    all_counts = [len(list(enumerate_nonisomorphic(n))) for n in range(1, 7)]
    assert all_counts == [1, 2, 4, 11, 34, 156]
    conn_counts = [
        len(list(enumerate_connected_nonisomorphic(n))) for n in range(1, 7)
    ]
    assert conn_counts == [1, 1, 2, 6, 21, 112]


def test_enumeration_matches_labeled_oracle():
    # independent ground truth: canonicalize every labeled graph
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            g = from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            seen.add(canonical_form(g))
        assert seen == {to_graph6(g) for g in enumerate_nonisomorphic(n)}


def test_enumeration_order_cap():
    with pytest.raises(ValueError):
        list(enumerate_nonisomorphic(8))
    with pytest.raises(ValueError):
        list(enumerate_connected_nonisomorphic(0))
