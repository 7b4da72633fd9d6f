"""Isomorph-free exhaustive search over cut-minimal graphs.

Classes are generated level by level in the number of edges: every
cut-minimal graph with m edges loses an edge to a cut-minimal graph with
m - 1 edges, so extending each class representative by every admissible
edge and deduplicating by canonical form reaches every class exactly once.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import InfeasibleSizeError
from .graphs import (
    Graph,
    _search,
    canonical_form,
    count_odd_triangles,
    h_graph,
    is_bipartite,
    is_triangle_free,
    mw_certificate,
    staircase,
    staircase_recognize,
)
from .partitions import (
    Partition,
    blowup,
    cor,
    deficiency,
    format_partition,
    format_rational,
    partitions_up_to,
    pow2_family,
)

MAX_SEARCH_N = 8


@dataclass
class GraphFlags:
    canonical: str
    edges: int
    triangle_free: bool
    bipartite: bool
    staircase: Partition | None

    def to_json(self) -> dict:
        return {
            "canonical": self.canonical,
            "edges": self.edges,
            "triangle_free": self.triangle_free,
            "bipartite": self.bipartite,
            "staircase": None if self.staircase is None else format_partition(self.staircase),
        }


@dataclass
class SearchReport:
    n: int
    h_value: Fraction
    cheeger_graphs: list[Graph]
    flags: list[GraphFlags]
    classes_visited: int
    wall_time: float = field(default=0.0, compare=False)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "h": format_rational(self.h_value),
            "cheeger_graphs": [f.to_json() for f in self.flags],
            "stats": {"isomorphism_classes_visited": self.classes_visited},
        }
        if timing:
            out["stats"]["wall_time"] = round(self.wall_time, 3)
        return out


# --- enumeration ----------------------------------------------------------


class _CutTables:
    """Cuts with vertex 0 on the inside, and which cuts each vertex pair crosses."""

    def __init__(self, n: int):
        self.n = n
        full = (1 << n) - 1
        self.cuts = np.array([s for s in range(1, full) if s & 1], dtype=np.int64)
        sizes = np.bitwise_count(self.cuts).astype(np.int64)
        self.capacity = sizes * (n - sizes)
        self.pairs = list(itertools.combinations(range(n), 2))
        self.cross = np.array(
            [((self.cuts >> u) ^ (self.cuts >> v)) & 1 for u, v in self.pairs], dtype=np.int64
        )

    def addable_pairs(self, adj: tuple[int, ...]) -> list[tuple[int, int]]:
        """Non-edges whose addition keeps a cut-minimal graph cut-minimal."""
        n = self.n
        present = [i for i, (u, v) in enumerate(self.pairs) if adj[u] >> v & 1]
        across = self.cross[present].sum(axis=0) if present else np.zeros(len(self.cuts), np.int64)
        slack = self.capacity - 2 * across
        # adding an edge raises E by 1 and lowers NE by 1 on every cut it crosses
        tight = slack < 2
        limit = (n - 1) // 2
        out = []
        for i, (u, v) in enumerate(self.pairs):
            if adj[u] >> v & 1:
                continue
            if adj[u].bit_count() >= limit or adj[v].bit_count() >= limit:
                continue
            if not (self.cross[i] & tight).any():
                out.append((u, v))
        return out


def _canonical(adj: list[int] | tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    code, order = _search(adj, [list(range(len(adj)))])
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * len(adj)
    for v, row in enumerate(adj):
        m = 0
        while row:
            low = row & -row
            m |= 1 << pos[low.bit_length() - 1]
            row ^= low
        out[pos[v]] = m
    return code, tuple(out)


@lru_cache(maxsize=None)
def _tables(n: int) -> _CutTables:
    return _CutTables(n)


def _expand(n: int, parents: list[tuple[int, ...]]) -> dict[int, tuple[int, ...]]:
    tables = _tables(n)
    children: dict[int, tuple[int, ...]] = {}
    for adj in parents:
        for u, v in tables.addable_pairs(adj):
            child = list(adj)
            child[u] |= 1 << v
            child[v] |= 1 << u
            code, canon = _canonical(child)
            children.setdefault(code, canon)
    return children


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError("search needs n >= 3")
    if n > MAX_SEARCH_N:
        raise InfeasibleSizeError(
            f"exhaustive search is capped at n <= {MAX_SEARCH_N}; n={n} is out of desk scale"
        )


@lru_cache(maxsize=None)
def _levels(n: int, jobs: int = 1) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Canonical adjacency tuples of all cut-minimal classes, grouped by edge count."""
    _check_n(n)
    _, first = _canonical(Graph.from_edges(n, [(0, 1)]).adj)
    levels = [(first,)]
    while True:
        parents = list(levels[-1])
        if jobs > 1 and len(parents) > jobs:
            chunks = [parents[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_expand, [n] * jobs, chunks))
            children: dict[int, tuple[int, ...]] = {}
            for part in parts:
                # representatives are canonical, so the merge does not depend on chunking
                children.update(part)
        else:
            children = _expand(n, parents)
        if not children:
            break
        levels.append(tuple(children[c] for c in sorted(children)))
    return tuple(levels)


def enumerate_cut_minimal(n: int, jobs: int = 1) -> list[Graph]:
    """One canonical representative per class of cut-minimal graphs with >= 1 edge."""
    return [Graph(n, adj) for level in _levels(n, jobs) for adj in level]


def max_cut_minimal_edges(n: int) -> int:
    return len(_levels(n))


# --- Cheeger number -------------------------------------------------------


def _flags(g: Graph) -> GraphFlags:
    return GraphFlags(
        canonical=canonical_form(g).hex(),
        edges=g.edge_count,
        triangle_free=is_triangle_free(g),
        bipartite=is_bipartite(g),
        staircase=staircase_recognize(g),
    )


@lru_cache(maxsize=None)
def _cheeger(n: int, jobs: int) -> SearchReport:
    start = time.perf_counter()
    graphs = enumerate_cut_minimal(n, jobs)
    best: Fraction | None = None
    winners: list[Graph] = []
    for g in graphs:
        h = h_graph(g)
        if best is None or h < best:
            best, winners = h, [g]
        elif h == best:
            winners.append(g)
    assert best is not None
    winners.sort(key=canonical_form)
    return SearchReport(
        n=n,
        h_value=best,
        cheeger_graphs=winners,
        flags=[_flags(g) for g in winners],
        classes_visited=len(graphs),
        wall_time=time.perf_counter() - start,
    )


def cheeger_number(n: int, jobs: int = 1) -> SearchReport:
    """Exact h(n): min of h(G) over cut-minimal graphs with at least one edge."""
    _check_n(n)
    return _cheeger(n, 1 if jobs < 1 else jobs)


def conjecture_report(n: int, jobs: int = 1) -> dict:
    rep = cheeger_number(n, jobs)
    non_staircase = [f.canonical for f in rep.flags if f.staircase is None]
    return {
        "n": n,
        "h": format_rational(rep.h_value),
        "graphs": [f.to_json() for f in rep.flags],
        "all_triangle_free": all(f.triangle_free for f in rep.flags),
        "all_bipartite": all(f.bipartite for f in rep.flags),
        "non_staircase": non_staircase,
    }


def heuristic_upper_bound(n: int, beam: int = 8) -> Fraction:
    """Opt-in beam search over the augmentation tree.

    Keeps only the ``beam`` lowest-h classes per level, so it can miss the
    optimum; it is a cross-check that must never undercut :func:`cheeger_number`.
    """
    _check_n(n)
    _, first = _canonical(Graph.from_edges(n, [(0, 1)]).adj)
    level = [first]
    best = h_graph(Graph(n, first))
    while level:
        children = _expand(n, level)
        scored = sorted((h_graph(Graph(n, adj)), code, adj) for code, adj in children.items())
        if scored:
            best = min(best, scored[0][0])
        level = [adj for _, _, adj in scored[:beam]]
    return best


# --- table of bounds ------------------------------------------------------


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@dataclass(frozen=True)
class TableRow:
    n: int
    lower: Fraction
    upper: Fraction
    exact: Fraction | None
    source: str


def h_table(n_max: int, exact_search_max: int = MAX_SEARCH_N, jobs: int = 1) -> list[TableRow]:
    """Bounds on h(n) for 3 <= n <= n_max.

    Sources: ``exhaustive-search`` (n <= exact_search_max), ``odd-factor-staircase``
    (n has an odd factor >= 3, so h(n) = n/3), ``pow2-staircase`` (upper bound
    from the power-of-two staircase family, n = 2^d >= 16).
    """
    if n_max > 512:
        raise InfeasibleSizeError("h_table supports n_max <= 512")
    rows = []
    for n in range(3, n_max + 1):
        lower = Fraction(n, 3)
        if n <= exact_search_max:
            h = cheeger_number(n, jobs).h_value
            rows.append(TableRow(n, lower, h, h, "exhaustive-search"))
        elif not _is_power_of_two(n):
            rows.append(TableRow(n, lower, lower, lower, "odd-factor-staircase"))
        else:
            upper = lower + deficiency(pow2_family(n // 4))
            rows.append(TableRow(n, lower, upper, None, "pow2-staircase"))
    return rows


def cor_blowup_witness(n: int) -> Graph | None:
    """staircase(n, c*cor(t)) for the largest odd factor 2t+1 >= 3 of n, if any."""
    odd = n
    while odd % 2 == 0:
        odd //= 2
    if odd < 3:
        return None
    t, c = (odd - 1) // 2, n // odd
    return staircase(n, blowup(cor(t), c))


def cycle_union_h_check(n: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """h(G) for every disjoint union of cycles (plus isolated vertices) on n vertices."""
    out = []
    for lam in partitions_up_to(n):
        if lam.parts[-1] < 3:
            continue
        edges, base = [], 0
        for length in lam.parts:
            edges += [(base + i, base + (i + 1) % length) for i in range(length)]
            base += length
        out.append((lam.parts, h_graph(Graph.from_edges(n, edges))))
    return out


def mw_summary(n: int) -> dict:
    """Certificate check over every cut-minimal class on n vertices."""
    graphs = enumerate_cut_minimal(n)
    bad_bound = bad_total = 0
    for g in graphs:
        cert = mw_certificate(g)
        if not cert.holds:
            bad_bound += 1
        if cert.total != 3 * count_odd_triangles(g):
            bad_total += 1
    return {"n": n, "classes": len(graphs), "bound_failures": bad_bound, "total_failures": bad_total}
