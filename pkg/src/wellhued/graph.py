"""Bitmask graph kernel: construction, graph6 I/O, canonical forms, enumeration.

Graphs are undirected and simple, capped at 64 vertices so every adjacency
row fits in one machine word. Vertex subsets are plain ints used as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

MAX_ORDER = 64

CANONICAL_ORDER_LIMIT = 10
GENERATOR_ORDER_LIMIT = 7


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6LengthError(Graph6Error):
    """The body does not match the length implied by the order field."""


class Graph6TrailingBitsError(Graph6Error):
    """Padding bits after the adjacency triangle are nonzero."""


class Graph6OrderError(Graph6Error):
    """Encoded order exceeds the 64-vertex cap."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..order-1.

    adj[i] has bit j set iff ij is an edge. Symmetry and loop-freeness are
    checked at construction time.
    """

    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside 0..{MAX_ORDER}")
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match order")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"stray bits in adjacency row {i}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (self.adj[i] >> j & 1) != (self.adj[j] >> i & 1):
                    raise ValueError(f"asymmetric adjacency at ({i},{j})")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return (self.adj[v]).bit_count()

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.order):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple((full ^ row) & ~(1 << i) for i, row in enumerate(g.adj)))


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union, g1 on 0..n1-1 and g2 shifted above it."""
    n = g1.order + g2.order
    if n > MAX_ORDER:
        raise ValueError("combined order exceeds 64")
    adj = list(g1.adj) + [row << g1.order for row in g2.adj]
    return Graph(n, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n1, n2 = g1.order, g2.order
    n = n1 + n2
    if n > MAX_ORDER:
        raise ValueError("combined order exceeds 64")
    hi = ((1 << n2) - 1) << n1
    lo = (1 << n1) - 1
    adj = [row | hi for row in g1.adj] + [(row << n1) | lo for row in g2.adj]
    return Graph(n, tuple(adj))


def corona(g: Graph) -> Graph:
    """Attach one pendant vertex to every vertex of g."""
    n = g.order
    if 2 * n > MAX_ORDER:
        raise ValueError("corona order exceeds 64")
    adj = [row | (1 << (n + i)) for i, row in enumerate(g.adj)]
    adj += [1 << i for i in range(n)]
    return Graph(2 * n, tuple(adj))


def complete_multipartite(parts: list[int]) -> Graph:
    """Parts occupy consecutive index ranges; edges run between distinct parts."""
    if any(p <= 0 for p in parts):
        raise ValueError("parts must be positive")
    n = sum(parts)
    if n > MAX_ORDER:
        raise ValueError("order exceeds 64")
    full = (1 << n) - 1
    adj = []
    start = 0
    for p in parts:
        part_mask = ((1 << p) - 1) << start
        for i in range(start, start + p):
            adj.append(full & ~part_mask)
        start += p
    return Graph(n, tuple(adj))


def induced(g: Graph, s: int) -> Graph:
    """Subgraph induced by vertex mask s, relabeled order-preservingly."""
    verts = list(bits(s & g.full_mask))
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & s):
            adj[pos[v]] |= 1 << pos[u]
    return Graph(len(verts), tuple(adj))


def permute(g: Graph, perm: list[int]) -> Graph:
    """Relabel so vertex perm[i] of g becomes vertex i of the result."""
    n = g.order
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v] = i
    adj = [0] * n
    for i, v in enumerate(perm):
        for u in bits(g.adj[v]):
            adj[i] |= 1 << inv[u]
    return Graph(n, tuple(adj))


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by least vertex."""
    out = []
    todo = g.full_mask
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        todo &= ~seen
    return out


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    buf = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            buf = (buf << 1) | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + buf))
                buf = nbits = 0
    if nbits:
        out.append(chr(63 + (buf << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise Graph6LengthError("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6LengthError(f"byte {c} outside graph6 range")
        vals.append(c - 63)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6OrderError("8-byte order field implies n > 64")
        if len(vals) < 4:
            raise Graph6LengthError("truncated long order field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    if n > MAX_ORDER:
        raise Graph6OrderError(f"order {n} exceeds {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6LengthError(f"expected {need} body bytes, got {len(body)}")
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    pad = need * 6 - idx
    if pad and body and body[-1] & ((1 << pad) - 1):
        raise Graph6TrailingBitsError("nonzero padding bits")
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" with u < v.
# ---------------------------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not 0 <= u < v < n:
            raise ValueError(f"edge ({u},{v}) violates 0 <= u < v < n")
        edges.append((u, v))
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Canonical forms and enumeration
# ---------------------------------------------------------------------------


def _min_labeling(g: Graph) -> list[int]:
    """Permutation whose relabeling minimizes the graph6 bit string.

    Branch-and-bound over vertex orderings: position d contributes the
    column of adjacency bits against positions 0..d-1, compared
    lexicographically against the best full ordering found so far.
    """
    n = g.order
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    adj = g.adj
    perm: list[int] = []
    cols: list[int] = []
    rem = set(range(n))

    def dfs() -> None:
        nonlocal best_cols, best_perm
        d = len(perm)
        if d == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols[:]
                best_perm = perm[:]
            return
        cand = []
        for v in rem:
            av = adj[v]
            col = 0
            for u in perm:
                col = (col << 1) | (av >> u & 1)
            cand.append((col, v))
        cand.sort()
        for col, v in cand:
            cols.append(col)
            if best_cols is not None and cols > best_cols[: d + 1]:
                cols.pop()
                break  # candidates ascend, so the rest are worse too
            perm.append(v)
            rem.remove(v)
            dfs()
            rem.add(v)
            perm.pop()
            cols.pop()

    dfs()
    assert best_perm is not None
    return best_perm


@lru_cache(maxsize=1 << 18)
def _canonical_form_cached(g: Graph) -> str:
    return to_graph6(permute(g, _min_labeling(g)))


def canonical_form(g: Graph) -> str:
    """Lexicographically minimal graph6 string over all relabelings (n <= 10)."""
    if g.order > CANONICAL_ORDER_LIMIT:
        raise ValueError(f"canonical_form limited to n <= {CANONICAL_ORDER_LIMIT}")
    return _canonical_form_cached(g)


@lru_cache(maxsize=None)
def _all_graphs_g6(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings of all (not necessarily connected) graphs on n vertices.

    Built by extending each (n-1)-vertex representative with one new vertex
    over every possible neighborhood, deduplicating by canonical form.
    """
    if n == 0:
        return (to_graph6(empty_graph(0)),)
    if n == 1:
        return (to_graph6(empty_graph(1)),)
    seen: set[str] = set()
    for g6 in _all_graphs_g6(n - 1):
        base = from_graph6(g6)
        for nb in range(1 << (n - 1)):
            adj = [row | ((nb >> i & 1) << (n - 1)) for i, row in enumerate(base.adj)]
            adj.append(nb)
            seen.add(_canonical_form_cached(Graph(n, tuple(adj))))
    return tuple(sorted(seen))


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """All isomorphism classes of graphs on n vertices, canonical order."""
    if not 0 <= n <= GENERATOR_ORDER_LIMIT:
        raise ValueError(f"built-in generator limited to n <= {GENERATOR_ORDER_LIMIT}")
    for g6 in _all_graphs_g6(n):
        yield from_graph6(g6)


def enumerate_connected_nonisomorphic(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    if not 1 <= n <= GENERATOR_ORDER_LIMIT:
        raise ValueError(f"built-in generator limited to 1 <= n <= {GENERATOR_ORDER_LIMIT}")
    for g6 in _all_graphs_g6(n):
        g = from_graph6(g6)
        if is_connected(g):
            yield g
