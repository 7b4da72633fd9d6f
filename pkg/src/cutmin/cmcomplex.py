"""The simplicial complex of cut-minimal graphs on n labeled vertices.

Its vertices are the C(n, 2) vertex pairs; a set of pairs is a face iff the
graph it spans is cut-minimal.  Faces are edge bitmasks in the colex pair
order of :mod:`cutmin.cochains`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .cochains import simplices
from .errors import InfeasibleSizeError
from .gf2 import rank

MAX_FACES_N = 7
MAX_BETTI_N = 6


@dataclass
class ComplexSummary:
    n: int
    f_vector: list[int]
    maximal_by_dim: list[int] | None = None
    betti_gf2: list[int] | None = None

    @property
    def dim(self) -> int:
        return len(self.f_vector) - 1

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector))

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "dim": self.dim, "f_vector": self.f_vector}
        if self.maximal_by_dim is not None:
            out["num_maximal_faces_by_dim"] = self.maximal_by_dim
        if self.betti_gf2 is not None:
            out["betti_gf2"] = self.betti_gf2
        return out


def _crossings(n: int) -> tuple[np.ndarray, np.ndarray]:
    """cross[e, i] = 1 iff pair e crosses cut i; capacity[i] = |S| (n - |S|)."""
    full = (1 << n) - 1
    cuts = np.array([s for s in range(1, full) if s & 1], dtype=np.int64)
    sizes = np.bitwise_count(cuts).astype(np.int64)
    cross = np.array([((cuts >> u) ^ (cuts >> v)) & 1 for u, v in simplices(n, 1)], dtype=np.int64)
    return cross, sizes * (n - sizes)


@lru_cache(maxsize=None)
def _layers(n: int) -> tuple[tuple[int, ...], ...]:
    if n > MAX_FACES_N:
        raise InfeasibleSizeError(f"CM(n) face enumeration is capped at n <= {MAX_FACES_N}")
    if n < 2:
        raise ValueError("CM(n) needs n >= 2")
    pairs = comb(n, 2)
    cross, capacity = _crossings(n)
    # a face is stored with its per-cut crossing counts, so each extension costs one vector add
    current = {}
    for e in range(pairs):
        counts = cross[e]
        if np.all(2 * counts <= capacity):
            current[1 << e] = counts
    layers = []
    while current:
        layers.append(tuple(sorted(current)))
        nxt = {}
        for face, counts in current.items():
            top = face.bit_length()
            for e in range(top, pairs):
                bigger = face | 1 << e
                # every facet of the candidate that contains e must already be a face
                if any(bigger & ~(1 << f) not in current for f in _bits(face)):
                    continue
                new_counts = counts + cross[e]
                if np.all(2 * new_counts <= capacity):
                    nxt[bigger] = new_counts
        current = nxt
    return tuple(layers)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_faces(n: int) -> list[list[int]]:
    """Nonempty faces grouped by cardinality (layer d holds faces with d+1 edges)."""
    return [list(layer) for layer in _layers(n)]


def f_vector(n: int) -> ComplexSummary:
    return ComplexSummary(n, [len(layer) for layer in _layers(n)])


def maximal_faces(n: int) -> list[int]:
    layers = _layers(n)
    counts = []
    for d, layer in enumerate(layers):
        above = set(layers[d + 1]) if d + 1 < len(layers) else set()
        pairs = comb(n, 2)
        counts.append(
            sum(
                1
                for face in layer
                if not any(face | 1 << e in above for e in range(pairs) if not face >> e & 1)
            )
        )
    return counts


def boundary_rank(lower: tuple[int, ...], upper: tuple[int, ...]) -> int:
    """GF(2) rank of the boundary map from faces in ``upper`` to ``lower``."""
    index = {face: i for i, face in enumerate(lower)}
    rows = []
    for face in upper:
        vec = 0
        for e in _bits(face):
            vec |= 1 << index[face & ~(1 << e)]
        rows.append(vec)
    return rank(rows)


def betti_gf2(n: int) -> list[int]:
    if n > MAX_BETTI_N:
        raise InfeasibleSizeError(f"GF(2) Betti numbers of CM(n) are capped at n <= {MAX_BETTI_N}")
    layers = _layers(n)
    ranks = [boundary_rank(layers[d - 1], layers[d]) for d in range(1, len(layers))] + [0]
    # b_d = f_d - rank(boundary_d) - rank(boundary_{d+1}); boundary_0 is zero (unreduced)
    out = []
    for d, layer in enumerate(layers):
        rank_in = ranks[d - 1] if d > 0 else 0
        out.append(len(layer) - rank_in - ranks[d])
    return out


def summary(n: int, betti: bool = False, maximal: bool = False) -> ComplexSummary:
    s = f_vector(n)
    if maximal:
        s.maximal_by_dim = maximal_faces(n)
    if betti:
        s.betti_gf2 = betti_gf2(n)
    return s
