"""Exhaustive small-order searches and theorem verification harnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from multiprocessing import Pool
from typing import Iterable, Iterator

from . import __version__ as _version
from .graph import (
    Graph,
    bits,
    canonical_form,
    complement,
    complete_multipartite,
    enumerate_connected_nonisomorphic,
    enumerate_nonisomorphic,
    from_edges,
    from_graph6,
    is_connected,
    to_graph6,
    union,
    join,
)
from .chroma import hue_profile, independence_number
from .cotree import (
    build_cotree,
    homogeneous_children,
    is_cograph,
    uniform_assignment_property,
)
from .families import (
    is_corona_of_complete,
    thm222_predicate,
    thm_2k1_predicate,
    thm_3k_predicate,
)


# ---------------------------------------------------------------------------
# Clique partitions
# ---------------------------------------------------------------------------


def clique_partition_min2(g: Graph) -> list[int] | None:
    """Partition of V into cliques of size >= 2 (as masks), or None.

    Exact cover backtracking: the lowest uncovered vertex is assigned to
    every clique of size >= 2 it can lead.
    """
    if g.order == 0:
        return []

    parts: list[int] = []

    def cliques_at(v: int, pool: int) -> Iterator[int]:
        # cliques of size >= 2 containing v, other members from pool
        def grow(cur: int, cand: int) -> Iterator[int]:
            if cur.bit_count() >= 2:
                yield cur
            for u in bits(cand):
                higher = cand & ~((1 << (u + 1)) - 1)
                yield from grow(cur | (1 << u), higher & g.adj[u])

        yield from grow(1 << v, pool & g.adj[v])

    def rec(remaining: int) -> bool:
        if not remaining:
            return True
        v = (remaining & -remaining).bit_length() - 1
        for cl in cliques_at(v, remaining & ~(1 << v)):
            parts.append(cl)
            if rec(remaining & ~cl):
                return True
            parts.pop()
        return False

    return parts if rec(g.full_mask) else None


# ---------------------------------------------------------------------------
# Search reports
# ---------------------------------------------------------------------------

ROW_FLAGS = (
    "connected",
    "well_covered",
    "well_bicovered",
    "well_hued",
    "well_equi_hued",
    "cograph",
    "complement_well_hued",
    "clique_partition_min2",
    "corona_of_complete",
    "thm222",
    "thm_2k1",
    "thm_3k",
)


@dataclass(frozen=True)
class SearchRow:
    g6: str
    order: int
    size: int
    degree_sequence: tuple[int, ...]
    sequence: tuple[int, ...] | None
    maximal_orders: dict[int, tuple[int, ...]]
    connected: bool
    well_covered: bool
    well_bicovered: bool
    well_hued: bool
    well_equi_hued: bool
    cograph: bool
    complement_well_hued: bool
    clique_partition_min2: bool
    corona_of_complete: bool
    corona_clique_order: int | None
    thm222: bool
    thm_2k1: bool
    thm_3k: bool

    def sort_key(self):
        return (self.order, self.size, self.degree_sequence, self.g6)

    def to_json(self) -> dict:
        return {
            "g6": self.g6,
            "n": self.order,
            "m": self.size,
            "degree_sequence": list(self.degree_sequence),
            "sequence": list(self.sequence) if self.sequence is not None else None,
            "maximal_orders": {str(k): list(v) for k, v in self.maximal_orders.items()},
            **{f: getattr(self, f) for f in ROW_FLAGS},
            "corona_clique_order": self.corona_clique_order,
        }


@dataclass(frozen=True)
class SearchReport:
    universe: str
    rows: tuple[SearchRow, ...]


def compute_row(g: Graph) -> SearchRow:
    profile = hue_profile(g)
    corona_m = is_corona_of_complete(g)
    thm3k = any(
        thm_3k_predicate(g, k) for k in range(2, g.order // 3 + 1)
    ) if g.order >= 6 else False
    g6 = canonical_form(g) if g.order <= 10 else to_graph6(g)
    return SearchRow(
        g6=g6,
        order=g.order,
        size=g.size(),
        degree_sequence=g.degree_sequence(),
        sequence=profile.sequence,
        maximal_orders=profile.maximal_orders,
        connected=is_connected(g),
        well_covered=profile.well_covered,
        well_bicovered=profile.well_bicovered,
        well_hued=profile.well_hued,
        well_equi_hued=profile.well_equi_hued,
        cograph=is_cograph(g),
        complement_well_hued=hue_profile(complement(g)).well_hued
        if g.order >= 1
        else False,
        clique_partition_min2=clique_partition_min2(g) is not None,
        corona_of_complete=corona_m is not None,
        corona_clique_order=corona_m,
        thm222=thm222_predicate(g),
        thm_2k1=thm_2k1_predicate(g),
        thm_3k=thm3k,
    )


def _row_from_g6(g6: str) -> SearchRow:
    return compute_row(from_graph6(g6))


def search(
    universe: Iterable[Graph],
    filters: Iterable[str] = (),
    universe_label: str = "",
    workers: int = 1,
) -> SearchReport:
    """One row per input graph passing every named boolean filter."""
    filters = list(filters)
    for f in filters:
        if f not in ROW_FLAGS:
            raise ValueError(f"unknown filter {f!r}; choose from {ROW_FLAGS}")
    graphs = list(universe)
    if workers > 1:
        with Pool(workers) as pool:
            rows = pool.map(_row_from_g6, [to_graph6(g) for g in graphs])
    else:
        rows = [compute_row(g) for g in graphs]
    kept = {}
    for row in rows:
        if all(getattr(row, f) for f in filters):
            kept[row.g6] = row
    ordered = tuple(sorted(kept.values(), key=SearchRow.sort_key))
    return SearchReport(universe_label, ordered)


TSV_COLUMNS = ("g6", "n", "m", "degree_sequence", "sequence") + ROW_FLAGS


def report_to_tsv(report: SearchReport) -> str:
    lines = [f"# universe={report.universe}\twellhued={_version}"]
    lines.append("\t".join(TSV_COLUMNS))
    for row in report.rows:
        seq = " ".join(map(str, row.sequence)) if row.sequence is not None else "-"
        cells = [
            row.g6,
            str(row.order),
            str(row.size),
            ",".join(map(str, row.degree_sequence)),
            seq,
        ]
        cells += ["1" if getattr(row, f) else "0" for f in ROW_FLAGS]
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def report_to_jsonl(report: SearchReport) -> str:
    lines = [json.dumps({"universe": report.universe, "wellhued": _version})]
    lines += [json.dumps(row.to_json(), sort_keys=True) for row in report.rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Theorem verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    scope: str
    instances: int
    counterexamples: tuple[str, ...]

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "scope": self.scope,
            "instances": self.instances,
            "counterexamples": list(self.counterexamples),
            "verified": self.verified,
        }


THEOREM_IDS = (
    "thm32",
    "thm222",
    "thm2k1",
    "thm3k",
    "cotree_iff",
    "complement_closure",
    "homogeneous",
    "join_union",
)


def spanning_subgraphs(host: Graph) -> Iterator[Graph]:
    """All subsets of the host's edge set on the full vertex set."""
    edges = host.edges()
    for mask in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        yield from_edges(host.order, chosen)


def _connected_universe(max_order: int) -> Iterator[Graph]:
    for n in range(1, max_order + 1):
        yield from enumerate_connected_nonisomorphic(n)


def _all_universe(max_order: int) -> Iterator[Graph]:
    for n in range(1, max_order + 1):
        yield from enumerate_nonisomorphic(n)


def _verify_thm32(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    for g in _connected_universe(max_order):
        count += 1
        p = hue_profile(g)
        lhs = (
            p.well_hued
            and p.sequence is not None
            and len(p.sequence) >= 2
            and p.sequence[1] == p.sequence[0] + 2
            and p.sequence[0] >= 3
        )
        m = is_corona_of_complete(g)
        rhs = m is not None and m >= 3
        if lhs != rhs:
            bad.append(to_graph6(g))
    return VerificationReport("thm32", f"connected graphs n <= {max_order}", count, tuple(bad))


def _verify_thm222(parts: list[int]) -> VerificationReport:
    host = complete_multipartite(parts)
    n = host.order
    target = tuple(2 * i for i in range(1, n // 2 + 1))
    bad = []
    count = 0
    for g in spanning_subgraphs(host):
        if not is_connected(g):
            continue
        count += 1
        p = hue_profile(g)
        lhs = p.well_hued and p.sequence == target
        if lhs != thm222_predicate(g):
            bad.append(to_graph6(g))
    label = "K_{" + ",".join(map(str, parts)) + "} spanning subgraphs (connected)"
    return VerificationReport("thm222", label, count, tuple(bad))


def _verify_thm2k1(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    for n in (5, 7):
        if n > max_order:
            continue
        k = (n - 1) // 2
        target = tuple([2 * i for i in range(1, k + 1)] + [n])
        for g in enumerate_connected_nonisomorphic(n):
            count += 1
            p = hue_profile(g)
            lhs = p.well_hued and p.sequence == target
            if lhs != thm_2k1_predicate(g):
                bad.append(to_graph6(g))
    return VerificationReport("thm2k1", f"connected graphs, n in {{5,7}} within n <= {max_order}", count, tuple(bad))


def _verify_thm3k(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    k = 2
    for n in range(3 * k, max_order + 1):
        target = tuple([2, 4] + list(range(5, n + 1)))
        for g in enumerate_connected_nonisomorphic(n):
            count += 1
            p = hue_profile(g)
            lhs = p.well_hued and p.sequence == target
            if lhs != thm_3k_predicate(g, k):
                bad.append(to_graph6(g))
    return VerificationReport("thm3k", f"connected graphs, k=2, 6 <= n <= {max_order}", count, tuple(bad))


def _cograph_universe(max_order: int) -> Iterator[Graph]:
    for g in _all_universe(max_order):
        if is_cograph(g):
            yield g


def _verify_cotree_iff(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    for g in _cograph_universe(max_order):
        count += 1
        if uniform_assignment_property(build_cotree(g)) != hue_profile(g).well_equi_hued:
            bad.append(to_graph6(g))
    return VerificationReport("cotree_iff", f"cographs n <= {max_order}", count, tuple(bad))


def _verify_complement_closure(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    for g in _cograph_universe(max_order):
        count += 1
        if hue_profile(g).well_equi_hued != hue_profile(complement(g)).well_equi_hued:
            bad.append(to_graph6(g))
    return VerificationReport(
        "complement_closure", f"cographs n <= {max_order}", count, tuple(bad)
    )


def _verify_homogeneous(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    for g in _cograph_universe(max_order):
        if g.order < 2:
            continue
        count += 1
        if hue_profile(g).well_equi_hued and not homogeneous_children(build_cotree(g)):
            bad.append(to_graph6(g))
    return VerificationReport(
        "homogeneous", f"equi-hued cographs 2 <= n <= {max_order}", count, tuple(bad)
    )


def _verify_join_union(max_order: int) -> VerificationReport:
    bad = []
    count = 0
    cographs = list(_cograph_universe(max_order - 1))
    pairs = [
        (g1, g2)
        for g1, g2 in combinations_with_replacement(cographs, 2)
        if g1.order + g2.order <= max_order
    ]
    for g1, g2 in pairs:
        count += 1
        p1 = hue_profile(g1)
        p2 = hue_profile(g2)
        a1 = p1.maximal_orders[1][0] if p1.well_covered else None
        a2 = p2.maximal_orders[1][0] if p2.well_covered else None
        gj = join(g1, g2)
        pj = hue_profile(gj)
        join_expect = (
            p1.well_equi_hued and p2.well_equi_hued and a1 is not None and a1 == a2
        )
        if pj.well_hued != join_expect:
            bad.append(f"join:{to_graph6(g1)}+{to_graph6(g2)}")
        if pj.well_hued:
            if not pj.well_equi_hued:
                bad.append(f"join_equi:{to_graph6(g1)}+{to_graph6(g2)}")
            chi_sum = p1.chromatic_number + p2.chromatic_number
            n_sum = g1.order + g2.order
            assert pj.sequence is not None
            for i, ai in enumerate(pj.sequence, start=1):
                if i * n_sum != ai * chi_sum:
                    bad.append(f"ratio:{to_graph6(g1)}+{to_graph6(g2)}:k={i}")
        gu = union(g1, g2)
        pu = hue_profile(gu)
        union_expect = (
            p1.well_equi_hued
            and p2.well_equi_hued
            and p1.chromatic_number == p2.chromatic_number
        )
        if pu.well_equi_hued != union_expect:
            bad.append(f"union:{to_graph6(g1)}+{to_graph6(g2)}")
    return VerificationReport(
        "join_union", f"cograph pairs, combined n <= {max_order}", count, tuple(bad)
    )


def verify_theorem(theorem: str, max_order: int = 7, parts: list[int] | None = None) -> VerificationReport:
    """Run one equivalence check over its scoped universe."""
    if theorem == "thm32":
        return _verify_thm32(max_order)
    if theorem == "thm222":
        return _verify_thm222(parts or [2, 2, 2])
    if theorem == "thm2k1":
        return _verify_thm2k1(max_order)
    if theorem == "thm3k":
        return _verify_thm3k(max_order)
    if theorem == "cotree_iff":
        return _verify_cotree_iff(max_order)
    if theorem == "complement_closure":
        return _verify_complement_closure(max_order)
    if theorem == "homogeneous":
        return _verify_homogeneous(max_order)
    if theorem == "join_union":
        return _verify_join_union(max_order)
    raise ValueError(f"unknown theorem id {theorem!r}; choose from {THEOREM_IDS}")
