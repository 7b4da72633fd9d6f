"""Partition calculus for staircase graphs.

Partitions are stored as weakly decreasing tuples of positive integers.
Row and column indices are 1-based throughout this module, matching the
usual Ferrers-diagram conventions; ``part(q)`` reads 0 for ``q > t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("empty partition is not a valid operand")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, q: int) -> int:
        """The q-th part (1-based); 0 past the end."""
        if q < 1:
            raise IndexError(q)
        return self.parts[q - 1] if q <= len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


def as_partition(lam: Partition | Iterable[int]) -> Partition:
    if isinstance(lam, Partition):
        return lam
    return Partition(tuple(lam))


_POWER = re.compile(r"^\s*(\d+)\s*(?:\^\s*\(?\s*(\d+)\s*\)?)?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``3,3,1`` or power syntax ``3^2,1`` (also ``3^(2)``)."""
    parts: list[int] = []
    for chunk in text.split(","):
        m = _POWER.match(chunk)
        if m is None:
            raise ValueError(f"cannot parse partition component {chunk!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        parts.extend([value] * mult)
    return Partition(tuple(parts))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts)


def format_rational(x: Fraction | int) -> str:
    """Always ``p/q``, never a float; integers become ``p/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


# --- basic shape data -------------------------------------------------------


def conjugate(lam: Partition) -> Partition:
    lam = as_partition(lam)
    t = len(lam.parts)
    mu = []
    for k in range(1, lam.parts[0] + 1):
        i = t
        while lam.parts[i - 1] < k:
            i -= 1
        mu.append(i)
    return Partition(tuple(mu))


def box(lam: Partition) -> int:
    lam = as_partition(lam)
    return lam.parts[0] + len(lam.parts)


def weight(lam: Partition) -> int:
    return sum(as_partition(lam).parts)


def sq_weight(lam: Partition) -> int:
    lam = as_partition(lam)
    total = sum(p * p for p in lam.parts) + sum(m * m for m in conjugate(lam).parts)
    # sum of squares of parts has the parity of |lam| on both sides
    assert total % 2 == 0
    return total // 2


def depth(lam: Partition) -> int:
    """Minimal number of rows plus columns covering the diagram."""
    lam = as_partition(lam)
    return min(k + lam.part(k + 1) for k in range(len(lam.parts) + 1))


def depth_by_embedding(lam: Partition) -> int:
    """Largest d such that the staircase (d, d-1, ..., 1) fits inside lam."""
    lam = as_partition(lam)
    d = 0
    while all(lam.part(i) >= d + 1 - i + 1 for i in range(1, d + 2)):
        d += 1
    return d


def cor(t: int) -> Partition:
    if t < 1:
        raise ValueError("cor(t) requires t >= 1")
    return Partition(tuple(range(t, 0, -1)))


def blowup(lam: Partition, c: int) -> Partition:
    lam = as_partition(lam)
    if c < 1:
        raise ValueError("blowup factor must be >= 1")
    return Partition(tuple(c * p for p in lam.parts for _ in range(c)))


# --- cuts and legality ------------------------------------------------------


def b_cut(lam: Partition, rows: Iterable[int], cols: Iterable[int]) -> int:
    """Boxes lying in a chosen row or a chosen column, but not in both."""
    lam = as_partition(lam)
    rows, cols = set(rows), set(cols)
    t, width = len(lam.parts), lam.parts[0]
    if any(not 1 <= i <= t for i in rows):
        raise ValueError(f"row index out of range 1..{t}: {sorted(rows)}")
    if any(not 1 <= j <= width for j in cols):
        raise ValueError(f"column index out of range 1..{width}: {sorted(cols)}")
    mu = conjugate(lam)
    both = sum(1 for i in rows for j in cols if lam.part(i) >= j)
    return sum(lam.part(i) for i in rows) + sum(mu.part(j) for j in cols) - 2 * both


def _check_n(lam: Partition, n: int) -> None:
    if n < box(lam):
        raise ValueError(f"n={n} is below box(lam)={box(lam)}")


def _prefix_ok(parts: tuple[int, ...], n: int) -> bool:
    s = 0
    for k, p in enumerate(parts, start=1):
        s += p
        if 2 * s > k * (n - k):
            return False
    return True


def is_legal(lam: Partition, n: int) -> bool:
    lam = as_partition(lam)
    _check_n(lam, n)
    d = depth(lam)
    return (
        _prefix_ok(lam.parts, n)
        and _prefix_ok(conjugate(lam).parts, n)
        and 2 * weight(lam) <= d * (n - d)
    )


def is_strongly_legal(lam: Partition, n: int) -> bool:
    """Diagnostic only: the per-row strengthening of the depth condition.

    Checks |lam| - k*lam_{k+1} <= (k + lam_{k+1})(n - k - lam_{k+1})/2 for
    k = 1..t-1. Not used by :func:`is_legal` or :func:`n_min`.
    """
    lam = as_partition(lam)
    _check_n(lam, n)
    w = weight(lam)
    for k in range(1, len(lam.parts)):
        r = lam.part(k + 1)
        if 2 * (w - k * r) > (k + r) * (n - k - r):
            return False
    return True


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def n_r(lam: Partition) -> int:
    lam = as_partition(lam)
    best, s = 0, 0
    for k, p in enumerate(lam.parts, start=1):
        s += p
        best = max(best, k + _ceil_div(2 * s, k))
    return best


def n_d(lam: Partition) -> int:
    lam = as_partition(lam)
    d = depth(lam)
    return d + _ceil_div(2 * weight(lam), d)


def n_min(lam: Partition) -> int:
    """Smallest n for which lam is legal."""
    lam = as_partition(lam)
    return max(n_r(lam), n_r(conjugate(lam)), n_d(lam))


def h_partition(lam: Partition) -> Fraction:
    lam = as_partition(lam)
    return n_min(lam) - Fraction(2 * sq_weight(lam), weight(lam))


def deficiency(lam: Partition) -> Fraction:
    lam = as_partition(lam)
    return h_partition(lam) - Fraction(n_min(lam), 3)


def pow2_family(t: int) -> Partition:
    """((2t-1)^2, (2t-3)^2, ..., 3^2, 1); staircase-legal exactly at n = 4t."""
    if t < 2:
        raise ValueError("pow2_family requires t >= 2")
    parts: list[int] = []
    for odd in range(2 * t - 1, 1, -2):
        parts += [odd, odd]
    parts.append(1)
    return Partition(tuple(parts))


def info(lam: Partition) -> dict:
    """JSON-ready summary record used by the CLI."""
    lam = as_partition(lam)
    mu = conjugate(lam)
    return {
        "parts": list(lam.parts),
        "conjugate": list(mu.parts),
        "box": box(lam),
        "depth": depth(lam),
        "weight": weight(lam),
        "sq_weight": sq_weight(lam),
        "n_r": n_r(lam),
        "n_r_conj": n_r(mu),
        "n_d": n_d(lam),
        "n_min": n_min(lam),
        "h": format_rational(h_partition(lam)),
        "deficiency": format_rational(deficiency(lam)),
    }


def partitions_of(total: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in reverse lexicographic order."""
    if total < 1:
        return
    if max_part is None:
        max_part = total

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(total, max_part):
        yield Partition(parts)


def partitions_up_to(max_total: int) -> Iterator[Partition]:
    for w in range(1, max_total + 1):
        yield from partitions_of(w)
