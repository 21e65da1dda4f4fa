"""Exact colorability, maximal k-colorable subgraphs, and hue profiles.

A hue profile records, for each k up to the chromatic number, the distinct
orders of maximal k-colorable induced subgraphs. When every one of those is
a singleton the graph is well-hued and carries the sequence a_1..a_chi.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, induced

PROFILE_ORDER_LIMIT = 16


# ---------------------------------------------------------------------------
# Colorability
# ---------------------------------------------------------------------------


def _greedy_clique(g: Graph, mask: int) -> int:
    """A (not necessarily maximum) clique mask inside mask, grown greedily."""
    if not mask:
        return 0
    start = max(bits(mask), key=lambda v: (g.adj[v] & mask).bit_count())
    clique = 1 << start
    cand = g.adj[start] & mask
    while cand:
        v = max(bits(cand), key=lambda u: (g.adj[u] & cand).bit_count())
        clique |= 1 << v
        cand &= g.adj[v]
    return clique


def _greedy_colors(g: Graph, mask: int) -> int:
    """Number of colors used by greedy coloring in decreasing-degree order."""
    order = sorted(bits(mask), key=lambda v: -(g.adj[v] & mask).bit_count())
    classes: list[int] = []
    for v in order:
        for i, cls in enumerate(classes):
            if not cls & g.adj[v]:
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
    return len(classes)


def _k_colorable_mask(g: Graph, mask: int, k: int) -> bool:
    nv = mask.bit_count()
    if k >= nv:
        return True
    if k <= 0:
        return nv == 0
    clique = _greedy_clique(g, mask)
    if clique.bit_count() > k:
        return False
    if _greedy_colors(g, mask) <= k:
        return True
    # Backtracking, clique vertices pre-assigned to distinct colors.
    rest = sorted(bits(mask & ~clique), key=lambda v: -(g.adj[v] & mask).bit_count())
    classes = [1 << v for v in bits(clique)]
    classes += [0] * (k - len(classes))

    def assign(i: int, used: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        av = g.adj[v]
        for c in range(min(used + 1, k)):
            if not classes[c] & av:
                classes[c] |= 1 << v
                if assign(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return assign(0, clique.bit_count())


def is_k_colorable(g: Graph, k: int) -> bool:
    """True iff V(g) partitions into at most k independent sets."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _k_colorable_mask(g, g.full_mask, k)


def chromatic_number(g: Graph) -> int:
    mask = g.full_mask
    k = _greedy_clique(g, mask).bit_count()
    while not _k_colorable_mask(g, mask, k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# Maximal independent sets (k = 1 fast path): Bron-Kerbosch with pivoting
# on the complement relation.
# ---------------------------------------------------------------------------


def maximal_independent_sets_mask(g: Graph, mask: int) -> list[int]:
    """Maximal independent sets of the subgraph induced by mask (host coords)."""
    nonadj = [(~g.adj[v]) & mask & ~(1 << v) for v in range(g.order)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda v: (nonadj[v] & p).bit_count())
        for v in bits(p & ~nonadj[pivot]):
            bk(r | (1 << v), p & nonadj[v], x & nonadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if mask:
        bk(0, mask, 0)
    elif g.order == 0 or mask == 0:
        out.append(0)
    return out


def maximal_independent_sets(g: Graph) -> list[int]:
    return maximal_independent_sets_mask(g, g.full_mask)


def independence_number(g: Graph) -> int:
    if g.order == 0:
        return 0
    return max(s.bit_count() for s in maximal_independent_sets(g))


def clique_number(g: Graph) -> int:
    return _greedy_clique_exact(g)


def _greedy_clique_exact(g: Graph) -> int:
    # maximum clique = maximum independent set of the complement
    from .graph import complement

    return independence_number(complement(g))


# ---------------------------------------------------------------------------
# Maximal k-colorable subgraph enumeration
# ---------------------------------------------------------------------------


def maximal_k_colorable_sets(g: Graph, k: int) -> list[int]:
    """All vertex masks inducing maximal k-colorable subgraphs.

    A memo of k-colorability verdicts is shared across the subset lattice;
    maximality adds each absent vertex once.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.order
    full = g.full_mask
    if k == 1:
        sets = maximal_independent_sets(g)
        return sorted(sets)
    if _k_colorable_mask(g, full, k):
        return [full]
    verdict: dict[int, bool] = {}

    def colorable(mask: int) -> bool:
        v = verdict.get(mask)
        if v is None:
            v = _k_colorable_mask(g, mask, k)
            verdict[mask] = v
        return v

    out = []
    for mask in range(full, -1, -1):
        if not colorable(mask):
            continue
        absent = full & ~mask
        if all(not colorable(mask | (1 << v)) for v in bits(absent)):
            out.append(mask)
    return sorted(out)


# ---------------------------------------------------------------------------
# Hue profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HueProfile:
    order: int
    chromatic_number: int
    maximal_orders: dict[int, tuple[int, ...]]
    sequence: tuple[int, ...] | None
    well_covered: bool
    well_bicovered: bool
    well_hued: bool
    well_equi_hued: bool

    def to_json(self) -> dict:
        return {
            "n": self.order,
            "chi": self.chromatic_number,
            "sequence": list(self.sequence) if self.sequence is not None else None,
            "maximal_orders": {str(k): list(v) for k, v in self.maximal_orders.items()},
            "well_covered": self.well_covered,
            "well_bicovered": self.well_bicovered,
            "well_hued": self.well_hued,
            "well_equi_hued": self.well_equi_hued,
        }


def hue_profile(g: Graph, allow_large: bool = False) -> HueProfile:
    """Full enumeration profile. Practical limit n <= 16 (2^n subset memo)."""
    n = g.order
    if n < 1:
        raise ValueError("hue_profile requires at least one vertex")
    if n > PROFILE_ORDER_LIMIT and not allow_large:
        raise ValueError(
            f"n={n} exceeds the practical profile limit {PROFILE_ORDER_LIMIT}; "
            "pass allow_large=True to override"
        )
    chi = chromatic_number(g)
    orders: dict[int, tuple[int, ...]] = {}
    for k in range(1, chi + 1):
        sets = maximal_k_colorable_sets(g, k)
        orders[k] = tuple(sorted({s.bit_count() for s in sets}))
    hued = all(len(v) == 1 for v in orders.values())
    seq = tuple(orders[k][0] for k in range(1, chi + 1)) if hued else None
    covered = len(orders[1]) == 1
    bicovered = len(orders[2]) == 1 if chi >= 2 else True
    equi = hued and seq is not None and all(
        seq[i - 1] * chi == i * n for i in range(1, chi + 1)
    )
    return HueProfile(n, chi, orders, seq, covered, bicovered, hued, equi)


def is_well_equi_hued(g: Graph) -> bool:
    return hue_profile(g).well_equi_hued


# ---------------------------------------------------------------------------
# Sequence realizability
# ---------------------------------------------------------------------------


def _differences(a: list[int]) -> list[int]:
    return [a[0]] + [a[i] - a[i - 1] for i in range(1, len(a))]


def is_realizable_sequence(a: list[int]) -> bool:
    """True iff the difference sequence is non-negative and non-increasing.

    Terms beyond the list are treated as constant, so "eventually zero"
    holds for any finite prefix.
    """
    if not a or any(x <= 0 for x in a):
        return False
    d = _differences(a)
    return all(d[i] >= d[i + 1] for i in range(len(d) - 1)) and all(x >= 0 for x in d)


def realize_sequence(a: list[int]) -> Graph:
    """Disjoint union of cliques sized by the conjugate of the differences."""
    from .graph import complete_graph, union, empty_graph

    if not is_realizable_sequence(a):
        raise ValueError(f"sequence {a} is not realizable")
    d = _differences(a)
    sizes = [sum(1 for x in d if x >= i) for i in range(1, d[0] + 1)]
    g = empty_graph(0)
    for c in sizes:
        g = union(g, complete_graph(c))
    return g


# ---------------------------------------------------------------------------
# Tool-lemma auditors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaViolation:
    lemma: str
    independent_set: int | None
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class LemmaAuditReport:
    graph_id: str
    k: int | None
    violations: tuple[LemmaViolation, ...]
    not_applicable: tuple[str, ...]

    @property
    def clean(self) -> bool:
        return not self.violations


LEMMA_WC = "lemma_2_1"
COR_BOUND = "cor_2_2"
LEMMA_COMMON = "lemma_2_3"
LEMMA_EDGE = "lemma_2_4"
COR_LEAVES = "cor_2_6"


def _gamma(g: Graph, i_mask: int, v: int) -> int:
    """Vertices outside I whose I-neighborhood is contained in v's."""
    nv = g.adj[v] & i_mask
    out = 0
    for u in bits(g.full_mask & ~i_mask):
        if g.adj[u] & i_mask & ~nv == 0:
            out |= 1 << u
    return out


def _iv_size(g: Graph, i_mask: int, v: int) -> int:
    """|I_v|: maximum independent set within Gamma(v, I) containing v."""
    gamma = _gamma(g, i_mask, v)
    room = gamma & ~g.closed_neighborhood(v)
    if not room:
        return 1
    best = max(s.bit_count() for s in maximal_independent_sets_mask(g, room))
    return 1 + best


def audit_tool_lemmas(g: Graph) -> LemmaAuditReport:
    """Test the well-covered/well-bicovered tool lemmas literally.

    Lemmas whose hypotheses fail are listed as not applicable instead of
    producing violations. The two-leaves check runs unconditionally.
    """
    from .graph import to_graph6

    profile = hue_profile(g)
    wc = profile.well_covered
    wb = profile.well_bicovered
    alpha = profile.maximal_orders[1][0] if wc else None
    if profile.chromatic_number >= 2:
        bip = profile.maximal_orders[2][0] if wb else None
    else:
        bip = g.order
    k = bip - alpha if (wc and wb and bip is not None) else None

    violations: list[LemmaViolation] = []
    na: list[str] = []
    mis = maximal_independent_sets(g)

    if wc:
        for i_mask in mis:
            for v in bits(g.full_mask & ~i_mask):
                deg_i = (g.adj[v] & i_mask).bit_count()
                if deg_i != _iv_size(g, i_mask, v):
                    violations.append(LemmaViolation(LEMMA_WC, i_mask, (v,)))
    else:
        na.append(LEMMA_WC)

    if wc and wb and k is not None:
        for i_mask in mis:
            outside = list(bits(g.full_mask & ~i_mask))
            deg = {v: (g.adj[v] & i_mask).bit_count() for v in outside}
            for v in outside:
                if deg[v] > k:
                    violations.append(LemmaViolation(COR_BOUND, i_mask, (v,)))
            for ai, x in enumerate(outside):
                for y in outside[ai + 1:]:
                    if deg[x] + deg[y] > k and not (g.adj[x] & g.adj[y] & i_mask):
                        violations.append(LemmaViolation(LEMMA_COMMON, i_mask, (x, y)))
                    if ((g.adj[x] | g.adj[y]) & i_mask).bit_count() > k and not g.has_edge(x, y):
                        violations.append(LemmaViolation(LEMMA_EDGE, i_mask, (x, y)))
    else:
        na += [COR_BOUND, LEMMA_COMMON, LEMMA_EDGE]

    leaves = [v for v in range(g.order) if g.degree(v) == 1]
    for w in range(g.order):
        adj_leaves = [v for v in leaves if g.has_edge(w, v)]
        if len(adj_leaves) >= 2:
            violations.append(LemmaViolation(COR_LEAVES, None, (w, adj_leaves[0], adj_leaves[1])))

    return LemmaAuditReport(to_graph6(g), k, tuple(violations), tuple(na))
