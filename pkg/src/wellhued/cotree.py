"""Cograph recognition, cotrees, and the uniform assignment property.

A cotree is the parse tree of a cograph: leaves carry vertex ids, internal
nodes alternate between union and join labels and have at least two
children. Construction uses recursive component / co-component
decomposition, adequate at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, complement, induced

UNION = "U"
JOIN = "J"


class NotACographError(ValueError):
    pass


@dataclass(eq=False)
class Leaf:
    vertex: int

    @property
    def is_leaf(self) -> bool:
        return True


@dataclass(eq=False)
class Internal:
    label: str
    children: list

    @property
    def is_leaf(self) -> bool:
        return False


@dataclass(eq=False)
class Cotree:
    root: object
    order: int


def internal_node(label: str, children: list):
    """Internal node constructor that merges same-label children to keep
    the union/join alternation invariant."""
    flat = []
    for c in children:
        if not c.is_leaf and c.label == label:
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1:
        return flat[0]
    return Internal(label, flat)


def _leaf_mask(node) -> int:
    if node.is_leaf:
        return 1 << node.vertex
    out = 0
    for c in node.children:
        out |= _leaf_mask(c)
    return out


def _signature(node) -> str:
    if node.is_leaf:
        return "*"
    return "(" + node.label + "".join(_signature(c) for c in node.children) + ")"


def _sort_children(node) -> None:
    if node.is_leaf:
        return
    for c in node.children:
        _sort_children(c)
    node.children.sort(key=lambda c: (_signature(c), _leaf_mask(c)))


def validate_cotree(t: Cotree) -> None:
    seen: list[int] = []

    def walk(node, parent_label) -> None:
        if node.is_leaf:
            seen.append(node.vertex)
            return
        if node.label not in (UNION, JOIN):
            raise ValueError(f"bad internal label {node.label!r}")
        if node.label == parent_label:
            raise ValueError("adjacent internal nodes share a label")
        if len(node.children) < 2:
            raise ValueError("internal node with fewer than two children")
        for c in node.children:
            walk(c, node.label)

    walk(t.root, None)
    if sorted(seen) != list(range(t.order)):
        raise ValueError("leaf ids are not exactly 0..n-1")


# ---------------------------------------------------------------------------
# Recognition and construction
# ---------------------------------------------------------------------------


def _components_mask(g: Graph, mask: int) -> list[int]:
    out = []
    todo = mask
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & mask
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        todo &= ~seen
    return out


def _co_components_mask(g: Graph, mask: int) -> list[int]:
    out = []
    todo = mask
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= ~g.adj[v] & mask & ~(1 << v)
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        todo &= ~seen
    return out


def has_induced_p4(g: Graph) -> bool:
    """Direct 4-subset scan; the recognition oracle."""
    for quad in combinations(range(g.order), 4):
        sub = induced(g, sum(1 << v for v in quad))
        degs = sorted(sub.degree(v) for v in range(4))
        if sub.size() == 3 and degs == [1, 1, 2, 2]:
            return True
    return False


def is_cograph(g: Graph) -> bool:
    """Recursive union/join decomposition succeeds iff g is P4-free."""

    def rec(mask: int) -> bool:
        if mask.bit_count() <= 1:
            return True
        comps = _components_mask(g, mask)
        if len(comps) > 1:
            return all(rec(c) for c in comps)
        cocomps = _co_components_mask(g, mask)
        if len(cocomps) == 1:
            return False
        return all(rec(c) for c in cocomps)

    return rec(g.full_mask)


def build_cotree(g: Graph) -> Cotree:
    """Cotree whose expansion equals g; raises NotACographError otherwise."""

    def rec(mask: int):
        if mask.bit_count() == 1:
            return Leaf(mask.bit_length() - 1)
        comps = _components_mask(g, mask)
        if len(comps) > 1:
            return Internal(UNION, [rec(c) for c in comps])
        cocomps = _co_components_mask(g, mask)
        if len(cocomps) == 1:
            raise NotACographError("graph contains an induced P4")
        return Internal(JOIN, [rec(c) for c in cocomps])

    if g.order == 0:
        raise ValueError("cotree requires at least one vertex")
    root = rec(g.full_mask)
    _sort_children(root)
    t = Cotree(root, g.order)
    validate_cotree(t)
    return t


def cotree_to_graph(t: Cotree) -> Graph:
    adj = [0] * t.order

    def walk(node) -> int:
        if node.is_leaf:
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        if node.label == JOIN:
            for i, mi in enumerate(masks):
                for mj in masks[i + 1:]:
                    for u in bits(mi):
                        adj[u] |= mj
                    for v in bits(mj):
                        adj[v] |= mi
        out = 0
        for m in masks:
            out |= m
        return out

    walk(t.root)
    return Graph(t.order, tuple(adj))


def cotree_complement(t: Cotree) -> Cotree:
    """Same shape with every union/join label swapped."""

    def walk(node):
        if node.is_leaf:
            return Leaf(node.vertex)
        swapped = UNION if node.label == JOIN else JOIN
        return Internal(swapped, [walk(c) for c in node.children])

    return Cotree(walk(t.root), t.order)


# ---------------------------------------------------------------------------
# Procedures and the uniform assignment property
# ---------------------------------------------------------------------------


def procedure_values(t: Cotree, which: int) -> dict:
    """Node values under Procedure 1 or 2 (keyed by node identity).

    Leaves get 1. Procedure 1 sums at even distance from the root and takes
    the maximum at odd distance; Procedure 2 swaps the parities.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    vals: dict = {}

    def walk(node, depth: int) -> int:
        if node.is_leaf:
            vals[id(node)] = 1
            return 1
        child_vals = [walk(c, depth + 1) for c in node.children]
        even = depth % 2 == 0
        use_sum = even if which == 1 else not even
        v = sum(child_vals) if use_sum else max(child_vals)
        vals[id(node)] = v
        return v

    walk(t.root, 0)
    return vals


def uniform_assignment_property(t: Cotree) -> bool:
    """Procedure 1 children agree at odd depths, Procedure 2 at even depths."""
    v1 = procedure_values(t, 1)
    v2 = procedure_values(t, 2)
    ok = True

    def walk(node, depth: int) -> None:
        nonlocal ok
        if node.is_leaf or not ok:
            return
        vals = v1 if depth % 2 == 1 else v2
        child_vals = {vals[id(c)] for c in node.children}
        if len(child_vals) > 1:
            ok = False
            return
        for c in node.children:
            walk(c, depth + 1)

    walk(t.root, 0)
    return ok


def homogeneous_children(t: Cotree) -> bool:
    """No internal node mixes leaf and internal children."""

    def walk(node) -> bool:
        if node.is_leaf:
            return True
        kinds = {c.is_leaf for c in node.children}
        if len(kinds) > 1:
            return False
        return all(walk(c) for c in node.children)

    return walk(t.root)


def is_well_equi_hued_cograph(t: Cotree) -> bool:
    """Fast path for the equi-hued decision on cographs.

    Ground truth is the brute-force profile; this delegates to the uniform
    assignment property.
    """
    return uniform_assignment_property(t)


# ---------------------------------------------------------------------------
# S-expression text format: leaf = decimal id, internal = "(J ...)"/"(U ...)"
# ---------------------------------------------------------------------------


def cotree_to_sexpr(t: Cotree) -> str:
    def walk(node) -> str:
        if node.is_leaf:
            return str(node.vertex)
        return "(" + node.label + " " + " ".join(walk(c) for c in node.children) + ")"

    return walk(t.root)


def cotree_from_sexpr(text: str) -> Cotree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of cotree expression")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens) or tokens[pos] not in (UNION, JOIN):
                raise ValueError("expected U or J after '('")
            label = tokens[pos]
            pos += 1
            children = []
            while pos < len(tokens) and tokens[pos] != ")":
                children.append(parse())
            if pos >= len(tokens):
                raise ValueError("missing ')'")
            pos += 1
            return Internal(label, children)
        if tok == ")":
            raise ValueError("unexpected ')'")
        return Leaf(int(tok))

    root = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens after cotree expression")
    t = Cotree(root, _leaf_mask(root).bit_count())
    validate_cotree(t)
    return t
