"""Labeled simple graphs on vertices 0..n-1 with bitmask adjacency.

Vertex ``v`` is stored as bit ``1 << v``; every vertex set in this module
(cut sides, neighborhoods) is such a bitmask.  Text I/O uses 1-based
vertex labels.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InfeasibleSizeError
from .partitions import Partition, as_partition, box, conjugate

MAX_N = 64
CANONICAL_MAX_N = 10
# Cap on the number of twin-compressed cut states enumerated by check_cut_minimal.
MAX_CUT_STATES = 1 << 20


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        if not 1 <= self.n <= MAX_N:
            raise InfeasibleSizeError(f"graphs support 1 <= n <= {MAX_N}, got {self.n}")
        if len(adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad neighbor word for vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex v as perm[v]."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = mask_of(perm[w] for w in iter_bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int, length: int | None = None) -> Graph:
    """Cycle on vertices 0..length-1, padded with isolated vertices up to n."""
    length = n if length is None else length
    return Graph.from_edges(n, [(i, (i + 1) % length) for i in range(length)])


# --- text format ----------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ValueError("empty graph text")
    n = int(lines[0])
    edges = []
    for line in lines[1:]:
        if not line.strip():
            break
        u, v = (int(x) for x in line.split())
        if not (1 <= u < v <= n):
            raise ValueError(f"bad edge line {line!r}: need 1 <= u < v <= {n}")
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


# --- cuts -----------------------------------------------------------------


@dataclass(frozen=True)
class CutReport:
    cut_set: int
    edges_across: int
    non_edges_across: int

    @property
    def perfect(self) -> bool:
        return self.edges_across == self.non_edges_across

    @property
    def size(self) -> int:
        return self.cut_set.bit_count()

    def vertices(self) -> list[int]:
        return list(iter_bits(self.cut_set))


def edges_across(g: Graph, s: int) -> int:
    rest = g.full_mask & ~s
    return sum((g.adj[v] & rest).bit_count() for v in iter_bits(s))


def non_edges_across(g: Graph, s: int) -> int:
    k = s.bit_count()
    return k * (g.n - k) - edges_across(g, s)


def cut_report(g: Graph, s: int) -> CutReport:
    e = edges_across(g, s)
    k = s.bit_count()
    return CutReport(s, e, k * (g.n - k) - e)


def twin_classes(g: Graph) -> list[list[int]]:
    """Vertices grouped by identical open neighborhood (pairwise non-adjacent)."""
    groups: dict[int, list[int]] = {}
    for v, row in enumerate(g.adj):
        groups.setdefault(row, []).append(v)
    return sorted(groups.values())


def check_cut_minimal(g: Graph, max_states: int = MAX_CUT_STATES) -> CutReport | None:
    """Return ``None`` if g is cut-minimal, else the smallest violating cut.

    A cut's edge count depends only on how many vertices of each twin class
    it takes, so the enumeration runs over count vectors rather than all
    2^n subsets.  The witness is the violating side of minimal size, ties
    broken by the smallest bitmask.
    """
    classes = twin_classes(g)
    r = len(classes)
    sizes = np.array([len(c) for c in classes], dtype=np.int64)
    states = math.prod(int(s) + 1 for s in sizes)
    if states > max_states:
        raise InfeasibleSizeError(
            f"cut enumeration needs {states} states (cap {max_states}); graph too large"
        )
    cls_adj = np.array(
        [[1 if g.adj[a[0]] >> b[0] & 1 else 0 for b in classes] for a in classes], dtype=np.int64
    )
    counts = np.indices(tuple(int(s) + 1 for s in sizes), dtype=np.int64).reshape(r, -1).T
    taken = counts.sum(axis=1)
    across = (counts * ((sizes - counts) @ cls_adj)).sum(axis=1)
    bad = 2 * across > taken * (g.n - taken)
    if not bad.any():
        return None
    rows = counts[bad]
    side = np.minimum(taken[bad], g.n - taken[bad])
    best_size = int(side.min())
    best = None
    for row in rows[side == best_size]:
        for choice in (row, sizes - row):
            if int(choice.sum()) != best_size:
                continue
            s = 0
            for cls, k in zip(classes, choice):
                s |= mask_of(cls[: int(k)])
            if best is None or s < best:
                best = s
    return cut_report(g, best)


def is_cut_minimal(g: Graph) -> bool:
    return check_cut_minimal(g) is None


# --- expansion functional -------------------------------------------------


def _tau_counts(g: Graph) -> tuple[int, int]:
    """(sum over edges of 1-weight vertices, sum over edges of 1/3-weight vertices)."""
    ones = threes = 0
    for u, v in g.edges():
        ones += g.n - (g.adj[u] | g.adj[v]).bit_count()
        threes += (g.adj[u] & g.adj[v]).bit_count()
    return ones, threes


def edge_weights(g: Graph) -> dict[tuple[int, int], Fraction]:
    """t(e) for every edge: one per vertex seeing neither endpoint, a third per common neighbor."""
    out = {}
    for u, v in g.edges():
        ones = g.n - (g.adj[u] | g.adj[v]).bit_count()
        out[(u, v)] = ones + Fraction((g.adj[u] & g.adj[v]).bit_count(), 3)
    return out


def count_odd_triangles(g: Graph) -> int:
    """Number of vertex triples spanning an odd number (1 or 3) of edges."""
    total = 0
    full = g.full_mask
    for a in range(g.n):
        for b in range(a + 1, g.n):
            above = full & ~((1 << (b + 1)) - 1)
            x = g.adj[a] ^ g.adj[b]
            if g.adj[a] >> b & 1:
                total += (above & ~x).bit_count()
            else:
                total += (above & x).bit_count()
    return total


def h_graph(g: Graph) -> Fraction:
    m = g.edge_count
    if m == 0:
        raise ValueError("h(G) is undefined for an edgeless graph")
    ones, threes = _tau_counts(g)
    via_weights = Fraction(3 * ones + threes, 3 * m)
    via_triangles = Fraction(count_odd_triangles(g), m)
    if via_weights != via_triangles:
        raise AssertionError(f"h(G) mismatch: {via_weights} vs {via_triangles}")
    return via_weights


# --- staircase graphs -----------------------------------------------------


def staircase(n: int, lam: Partition | Iterable[int]) -> Graph:
    """Vertices v_1..v_l (0..l-1), then w_1..w_t, then isolated u's."""
    lam = as_partition(lam)
    if n < box(lam):
        raise ValueError(f"n={n} is below box(lam)={box(lam)}")
    width = lam.parts[0]
    edges = [(i - 1, width + j - 1) for j, p in enumerate(lam.parts, start=1) for i in range(1, p + 1)]
    return Graph.from_edges(n, edges)


def components(g: Graph, within: int | None = None) -> list[int]:
    todo = g.full_mask if within is None else within
    out = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= todo & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        todo &= ~comp
    return out


def two_coloring(g: Graph) -> tuple[int, int] | None:
    """A proper 2-coloring (side0, side1) as bitmasks, or None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = mask_of(v for v in range(g.n) if color[v] == 0)
    return side0, g.full_mask & ~side0


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


def staircase_recognize(g: Graph) -> Partition | None:
    """Recover lam with g isomorphic to staircase(n, lam), if any.

    Returns the lexicographically larger of lam and its conjugate.  The
    answer is confirmed by checking the explicit vertex correspondence.
    """
    active = mask_of(v for v in range(g.n) if g.adj[v])
    if not active:
        return None
    comps = components(g, active)
    if len(comps) != 1:
        return None
    coloring = two_coloring(g)
    if coloring is None:
        return None
    xs = sorted(iter_bits(coloring[0] & active), key=lambda v: (-g.degree(v), v))
    ys = sorted(iter_bits(coloring[1] & active), key=lambda v: (-g.degree(v), v))
    for side in (xs, ys):
        for a, b in zip(side, side[1:]):
            if g.adj[b] & ~g.adj[a]:
                return None
    lam = Partition(tuple(g.degree(y) for y in ys))
    # v_i -> xs[i-1], w_j -> ys[j-1]; confirm adjacency is exactly the Ferrers diagram
    for j, y in enumerate(ys, start=1):
        for i, x in enumerate(xs, start=1):
            if g.has_edge(x, y) != (lam.part(j) >= i):
                return None
    mu = conjugate(lam)
    return max(lam, mu, key=lambda p: p.parts)


# --- blowups and certificates ---------------------------------------------


def blowup_graph(g: Graph, c: int) -> Graph:
    """Replace each vertex v by clones v*c .. v*c+c-1; clones of adjacent vertices are adjacent."""
    if c < 1:
        raise ValueError("blowup factor must be >= 1")
    if c * g.n > MAX_N:
        raise InfeasibleSizeError(f"blowup has {c * g.n} vertices, cap is {MAX_N}")
    fiber = (1 << c) - 1
    adj = []
    for v in range(g.n):
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= fiber << (w * c)
        adj.extend([row] * c)
    return Graph(c * g.n, tuple(adj))


@dataclass(frozen=True)
class MWCertificate:
    per_vertex: tuple[int, ...]
    total: int
    sharp: bool
    edge_count: int

    @property
    def holds(self) -> bool:
        """Every per-vertex count is at least |E|."""
        return min(self.per_vertex) >= self.edge_count


def _inner_edges(g: Graph, s: int) -> int:
    return sum((g.adj[v] & s).bit_count() for v in iter_bits(s)) // 2


def mw_certificate(g: Graph) -> MWCertificate:
    counts = []
    sharp = True
    for v in range(g.n):
        a = g.adj[v]
        b = g.full_mask & ~a & ~(1 << v)
        cross = sum((g.adj[x] & b).bit_count() for x in iter_bits(a))
        counts.append(
            _inner_edges(g, a) + _inner_edges(g, b) + a.bit_count() * b.bit_count() - cross
        )
        if a and not cut_report(g, a).perfect:
            sharp = False
    return MWCertificate(tuple(counts), sum(counts), sharp, g.edge_count)


# --- canonical form -------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[key] for key in sorted(groups))
        cells = out
        if not split:
            return cells


def _all_twins(adj: Sequence[int], cell: list[int]) -> bool:
    first = cell[0]
    return all(adj[u] & ~(1 << first) == adj[first] & ~(1 << u) for u in cell[1:])


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def _search(adj: Sequence[int], cells: list[list[int]]) -> tuple[int, list[int]]:
    cells = _refine(adj, cells)
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            break
    else:
        order = [c[0] for c in cells]
        return _leaf_code(adj, order), order
    # swapping twins is an automorphism fixing the partition, so one branch suffices
    choices = cell[:1] if _all_twins(adj, cell) else cell
    best: tuple[int, list[int]] | None = None
    for v in choices:
        rest = [x for x in cell if x != v]
        found = _search(adj, cells[:i] + [[v], rest] + cells[i + 1 :])
        if best is None or found[0] < best[0]:
            best = found
    assert best is not None
    return best


def canonical_labeling(g: Graph, max_n: int = CANONICAL_MAX_N) -> tuple[int, list[int]]:
    """(code, order): order[i] is the vertex placed at canonical position i.

    The code is the upper-triangular adjacency bit string (row-major, as an
    integer) minimized over the leaves of an individualization-refinement
    tree, so equal codes mean isomorphic graphs.
    """
    if g.n > max_n:
        raise InfeasibleSizeError(f"canonical form supports n <= {max_n}, got {g.n}")
    return _search(g.adj, [list(range(g.n))])


def canonical_form(g: Graph, max_n: int = CANONICAL_MAX_N) -> bytes:
    code, _ = canonical_labeling(g, max_n)
    nbits = g.n * (g.n - 1) // 2
    nbytes = (nbits + 7) // 8
    return (code << (8 * nbytes - nbits)).to_bytes(nbytes, "big")


def canonical_graph(g: Graph, max_n: int = CANONICAL_MAX_N) -> Graph:
    """The representative of g's isomorphism class in canonical labeling."""
    _, order = canonical_labeling(g, max_n)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return permute(g, pos)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(int.bit_count, g.adj)) != sorted(map(int.bit_count, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)
