"""GF(2) cochains of the full simplex on n vertices, by brute force.

A k-cochain is a set of (k+1)-subsets of {0..n-1}, stored as an int whose
bit i marks the i-th subset in colexicographic order.  For edges this puts
{u < v} at index C(v, 2) + u, which is the indexing used by
:func:`graph_to_cochain`.  Dimension -1 has a single simplex (the empty
set); including it augments the complex.

Everything here is an exhaustive oracle meant for tiny n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .errors import InfeasibleSizeError
from .gf2 import GF2Basis, span
from .graphs import Graph, canonical_form

# 2^MAX_ENUM_BITS cochains is the largest space enumerated outright.
MAX_ENUM_BITS = 24
# numpy int64 holds supports up to this many simplices
_WORD_BITS = 62


@dataclass(frozen=True)
class Cochain:
    n: int
    k: int
    support: int

    def __post_init__(self) -> None:
        if not -1 <= self.k <= self.n - 1:
            raise ValueError(f"dimension {self.k} out of range for n={self.n}")
        if self.support >> comb(self.n, self.k + 1):
            raise ValueError("support has bits beyond the simplex count")

    @property
    def norm(self) -> int:
        return self.support.bit_count()

    @property
    def size(self) -> int:
        return comb(self.n, self.k + 1)

    def simplices(self) -> list[tuple[int, ...]]:
        faces = simplices(self.n, self.k)
        return [faces[i] for i in range(self.size) if self.support >> i & 1]

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("cochains live in different groups")
        return Cochain(self.n, self.k, self.support ^ other.support)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "support": format(self.support, "x")}

    @classmethod
    def from_json(cls, data: dict) -> "Cochain":
        return cls(int(data["n"]), int(data["k"]), int(data["support"], 16))

    @classmethod
    def from_simplices(cls, n: int, k: int, faces) -> "Cochain":
        index = simplex_index(n, k)
        support = 0
        for f in faces:
            support |= 1 << index[tuple(sorted(f))]
        return cls(n, k, support)


@lru_cache(maxsize=None)
def simplices(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """The k-simplices ((k+1)-subsets) in colex order."""
    return tuple(sorted(itertools.combinations(range(n), k + 1), key=lambda s: s[::-1]))


@lru_cache(maxsize=None)
def simplex_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(simplices(n, k))}


@lru_cache(maxsize=None)
def coboundary_columns(n: int, k: int) -> tuple[int, ...]:
    """Image of each k-simplex indicator under the coboundary."""
    if k > n - 2:
        raise ValueError(f"no coboundary out of dimension {k} for n={n}")
    up = simplex_index(n, k + 1)
    cols = []
    for face in simplices(n, k):
        col = 0
        for v in range(n):
            if v not in face:
                col |= 1 << up[tuple(sorted(face + (v,)))]
        cols.append(col)
    return tuple(cols)


def coboundary(c: Cochain) -> Cochain:
    cols = coboundary_columns(c.n, c.k)
    out, s = 0, c.support
    while s:
        low = s & -s
        out ^= cols[low.bit_length() - 1]
        s ^= low
    return Cochain(c.n, c.k + 1, out)


def _lower_columns(n: int, k: int, augment: bool) -> tuple[int, ...]:
    """Columns of the coboundary landing in dimension k."""
    if k == 0 and not augment:
        return ()
    return coboundary_columns(n, k - 1)


def coboundary_basis(n: int, k: int, augment: bool = True) -> GF2Basis:
    basis = GF2Basis()
    for col in _lower_columns(n, k, augment):
        basis.add(col)
    return basis


def is_coboundary(c: Cochain, augment: bool = True) -> bool:
    """Linear solve against the coboundary matrix; works at any size."""
    return coboundary_basis(c.n, c.k, augment).contains(c.support)


def _images(cols: tuple[int, ...]) -> np.ndarray:
    """Image of every cochain 0..2^len(cols)-1, indexed by its support."""
    img = np.zeros(1 << len(cols), dtype=np.int64)
    for i, col in enumerate(cols):
        img[1 << i : 1 << (i + 1)] = img[: 1 << i] ^ col
    return img


def cosystolic_norm(c: Cochain, augment: bool = True) -> tuple[int, Cochain]:
    """min over d of |c + coboundary(d)|, with the smallest minimizing d."""
    if c.k < 0:
        raise ValueError("cosystolic norm needs k >= 0")
    cols = _lower_columns(c.n, c.k, augment)
    if len(cols) > MAX_ENUM_BITS:
        raise InfeasibleSizeError(
            f"cosystolic norm enumerates 2^{len(cols)} lower cochains (cap 2^{MAX_ENUM_BITS})"
        )
    if c.size > _WORD_BITS:
        raise InfeasibleSizeError(f"cochain has {c.size} simplices; brute force needs <= {_WORD_BITS}")
    weights = np.bitwise_count(_images(cols) ^ c.support)
    d = int(np.argmin(weights))
    return int(weights[d]), Cochain(c.n, c.k - 1, d)


def is_cosystole(c: Cochain, augment: bool = True) -> bool:
    return cosystolic_norm(c, augment)[0] == c.norm


def expansion(c: Cochain, augment: bool = True) -> Fraction:
    norm, _ = cosystolic_norm(c, augment)
    if norm == 0:
        raise ValueError("expansion is undefined for a coboundary")
    return Fraction(coboundary(c).norm, norm)


# --- Cheeger constants ----------------------------------------------------


@dataclass(frozen=True)
class CheegerResult:
    n: int
    k: int
    value: Fraction
    minimizers: tuple[Cochain, ...]
    # expansion value -> number of nonzero cosystoles with that expansion
    spectrum: dict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "h": f"{self.value.numerator}/{self.value.denominator}",
            "minimizers": [m.to_json() for m in self.minimizers],
        }


def _check_feasible(n: int, k: int) -> int:
    if not 0 <= k <= n - 2:
        raise ValueError(f"Cheeger constants need 0 <= k <= n-2, got n={n}, k={k}")
    size = comb(n, k + 1)
    if size > MAX_ENUM_BITS:
        raise InfeasibleSizeError(
            f"h_{k} of the {n}-vertex simplex enumerates 2^{size} cochains (cap 2^{MAX_ENUM_BITS})"
        )
    return size


@lru_cache(maxsize=None)
def cheeger_constant(n: int, k: int, augment: bool = True) -> CheegerResult:
    """h_k of the simplex on n vertices by enumerating every k-cochain.

    The minimum is taken over cosystoles that are not coboundaries; all
    minimizers are returned (for k = 1, one per graph isomorphism class).
    """
    size = _check_feasible(n, k)
    if comb(n, k + 2) > _WORD_BITS:
        raise InfeasibleSizeError(f"coboundary space too large for brute force at n={n}, k={k}")
    every = np.arange(1 << size, dtype=np.int64)
    up_norm = np.bitwise_count(_images(coboundary_columns(n, k))).astype(np.int64)
    norms = np.bitwise_count(every).astype(np.int64)
    csy = norms.copy()
    for b in span(_lower_columns(n, k, augment)):
        if b:
            np.minimum(csy, np.bitwise_count(every ^ b).astype(np.int64), out=csy)
    cosystole = (csy == norms) & (csy > 0)
    idx = np.flatnonzero(cosystole)
    best: Fraction | None = None
    spectrum: dict[Fraction, int] = {}
    for s in np.unique(csy[idx]):
        sel = idx[csy[idx] == s]
        values, counts = np.unique(up_norm[sel], return_counts=True)
        for a, cnt in zip(values, counts):
            f = Fraction(int(a), int(s))
            spectrum[f] = spectrum.get(f, 0) + int(cnt)
        f = Fraction(int(values[0]), int(s))
        if best is None or f < best:
            best = f
    assert best is not None
    hits = idx[up_norm[idx] * best.denominator == csy[idx] * best.numerator]
    minimizers = [Cochain(n, k, int(c)) for c in hits]
    if k == 1 and n <= 10:
        seen: dict[bytes, Cochain] = {}
        for m in minimizers:
            seen.setdefault(canonical_form(cochain_to_graph(m)), m)
        minimizers = [seen[key] for key in sorted(seen)]
    return CheegerResult(n, k, best, tuple(minimizers), dict(sorted(spectrum.items())))


def h0_both_conventions(n: int) -> dict:
    """h_0 with and without the augmentation, for reporting side by side."""
    return {
        "augmented": cheeger_constant(n, 0, True).value,
        "unaugmented": cheeger_constant(n, 0, False).value,
    }


# --- bridge to graphs -----------------------------------------------------


def edge_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return comb(v, 2) + u


def graph_to_cochain(g: Graph) -> Cochain:
    support = 0
    for u, v in g.edges():
        support |= 1 << edge_index(u, v)
    return Cochain(g.n, 1, support)


def cochain_to_graph(c: Cochain) -> Graph:
    if c.k != 1:
        raise ValueError(f"only 1-cochains are graphs, got dimension {c.k}")
    pairs = simplices(c.n, 1)
    return Graph.from_edges(c.n, [pairs[i] for i in range(c.size) if c.support >> i & 1])


def vertex_set_cochain(n: int, s: int) -> Cochain:
    """The 0-cochain of a vertex bitmask (colex order of singletons is vertex order)."""
    return Cochain(n, 0, s)
