"""Ground-set combinatorics: k-subsets of [n], packets, monotone bijections.

Subsets are plain sorted tuples of positive integers.  The ground set size
``n`` is always carried by whatever object holds the subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

Subset = tuple[int, ...]


def make_subset(elements: Iterable[int], n: int | None = None) -> Subset:
    """Normalise ``elements`` into a canonical subset, optionally checking ``[n]``."""
    s = tuple(sorted(elements))
    if len(set(s)) != len(s):
        raise ValueError(f"duplicate elements in {s}")
    if s and s[0] < 1:
        raise ValueError(f"subset elements must be positive: {s}")
    if n is not None and s and s[-1] > n:
        raise ValueError(f"subset {s} is not contained in [{n}]")
    return s


def k_subsets(n: int, k: int) -> list[Subset]:
    """All k-subsets of [n] in lexicographic order (empty when k > n)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return list(combinations(range(1, n + 1), k))


@dataclass(frozen=True)
class Packet:
    """The packet of ``source``: drop the largest element first, the smallest last.

    ``members[t]`` is ``source`` with its ``(len(source) - t)``-th smallest element
    removed, so the members are in increasing lexicographic order.
    """

    source: Subset
    members: tuple[Subset, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def position(self, member: Subset) -> int:
        return self.members.index(member)

    def positions(self, chosen) -> tuple[int, ...]:
        """0-based positions of the members lying in ``chosen``."""
        return tuple(t for t, m in enumerate(self.members) if m in chosen)


def packet(s: Iterable[int]) -> Packet:
    s = tuple(s)
    if not s:
        raise ValueError("packet of the empty set is undefined")
    members = tuple(s[:i] + s[i + 1:] for i in reversed(range(len(s))))
    return Packet(s, members)


def is_interval_end(positions: Iterable[int], length: int) -> bool:
    """True iff ``positions`` is a prefix or a suffix of ``range(length)``."""
    pos = sorted(positions)
    k = len(pos)
    return pos == list(range(k)) or pos == list(range(length - k, length))


class MonotoneBijection(Mapping[int, int]):
    """The unique order-preserving bijection between two finite integer sets."""

    def __init__(self, src: Iterable[int], dst: Iterable[int]):
        src = sorted(src)
        dst = sorted(dst)
        if len(src) != len(dst):
            raise ValueError(f"size mismatch: |src|={len(src)}, |dst|={len(dst)}")
        if len(set(src)) != len(src) or len(set(dst)) != len(dst):
            raise ValueError("monotone bijection needs sets without repeats")
        self.src = tuple(src)
        self.dst = tuple(dst)
        self._fwd = dict(zip(src, dst))
        self._inv = dict(zip(dst, src))

    def __getitem__(self, x: int) -> int:
        return self._fwd[x]

    def __iter__(self):
        return iter(self.src)

    def __len__(self) -> int:
        return len(self.src)

    def inverse(self) -> MonotoneBijection:
        return MonotoneBijection(self.dst, self.src)

    def image(self, s: Iterable[int]) -> Subset:
        return tuple(sorted(self._fwd[x] for x in s))

    def preimage(self, s: Iterable[int]) -> Subset:
        return tuple(sorted(self._inv[x] for x in s))

    def __repr__(self) -> str:
        return f"MonotoneBijection({list(self.src)} -> {list(self.dst)})"


def monotone_bijection(src: Iterable[int], dst: Iterable[int]) -> MonotoneBijection:
    return MonotoneBijection(src, dst)
