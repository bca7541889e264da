"""Labeled posets and the brute-force oracle for linear-extension statistics.

Everything here is computed by exhaustive enumeration and is deliberately
independent of the hook-length machinery in :mod:`mobilehook.formulas`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterator, Sequence

from . import kernels
from .qseries import IntPoly

DEFAULT_CAP = 16


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class LabeledPoset:
    """Poset on elements 0..n-1 given by cover pairs ``(lower, upper)``.

    ``labels[x]`` is omega(x); together the labels are a bijection onto 1..n.
    ``names`` optionally attach a readable identifier to each element.
    """

    n: int
    covers: tuple[tuple[int, int], ...]
    labels: tuple[int, ...]
    names: tuple[Hashable, ...] = field(default=(), compare=False)

    def __post_init__(self):
        covers = tuple(sorted({(int(a), int(b)) for a, b in self.covers}))
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if sorted(self.labels) != list(range(1, self.n + 1)):
            raise ValueError(f"labels must be a bijection onto 1..{self.n}: {self.labels}")
        for a, b in covers:
            if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
                raise ValueError(f"bad cover {(a, b)}")
        if self.names and len(self.names) != self.n:
            raise ValueError("names must have one entry per element")
        self.topological_order()  # raises on cycles

    @classmethod
    def unlabeled(cls, n: int, covers, names=()) -> "LabeledPoset":
        return cls(n, tuple(covers), tuple(range(1, n + 1)), tuple(names))

    def with_labels(self, labels: Sequence[int]) -> "LabeledPoset":
        return LabeledPoset(self.n, self.covers, tuple(labels), self.names)

    def lower_covers(self) -> list[list[int]]:
        low = [[] for _ in range(self.n)]
        for a, b in self.covers:
            low[b].append(a)
        return low

    def upper_covers(self) -> list[list[int]]:
        up = [[] for _ in range(self.n)]
        for a, b in self.covers:
            up[a].append(b)
        return up

    def below_masks(self) -> list[int]:
        masks = [0] * self.n
        for a, b in self.covers:
            masks[b] |= 1 << a
        return masks

    def topological_order(self) -> list[int]:
        """Elements listed bottom-up (each after everything it covers)."""
        indeg = [0] * self.n
        up = self.upper_covers()
        for a, b in self.covers:
            indeg[b] += 1
        ready = [x for x in range(self.n) if indeg[x] == 0]
        out = []
        while ready:
            x = ready.pop()
            out.append(x)
            for y in up[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        if len(out) != self.n:
            raise ValueError("cover relation has a cycle")
        return out

    def strictly_below(self) -> list[int]:
        """Bitmask of all elements strictly below each element."""
        low = self.lower_covers()
        masks = [0] * self.n
        for x in self.topological_order():
            m = 0
            for y in low[x]:
                m |= (1 << y) | masks[y]
            masks[x] = m
        return masks

    def less(self, x: int, y: int) -> bool:
        return bool(self.strictly_below()[y] >> x & 1)

    def maximal(self) -> list[int]:
        up = self.upper_covers()
        return [x for x in range(self.n) if not up[x]]

    def minimal(self) -> list[int]:
        low = self.lower_covers()
        return [x for x in range(self.n) if not low[x]]

    def is_natural(self) -> bool:
        return all(self.labels[a] < self.labels[b] for a, b in self.covers)

    def element(self, name: Hashable) -> int:
        return self.names.index(name)

    def restrict(self, elements: Sequence[int]) -> "LabeledPoset":
        """Induced subposet on ``elements`` with standardized labels."""
        keep = sorted(elements)
        index = {x: k for k, x in enumerate(keep)}
        below = self.strictly_below()
        sub_covers = []
        for x in keep:
            for y in keep:
                if x != y and below[y] >> x & 1:
                    # cover in the induced order: nothing of keep strictly between
                    if not any(z != x and z != y and below[y] >> z & 1 and below[z] >> x & 1
                               for z in keep):
                        sub_covers.append((index[x], index[y]))
        ranks = sorted(keep, key=lambda x: self.labels[x])
        labels = [0] * len(keep)
        for r, x in enumerate(ranks, 1):
            labels[index[x]] = r
        names = tuple(self.names[x] for x in keep) if self.names else ()
        return LabeledPoset(len(keep), tuple(sub_covers), tuple(labels), names)

    def to_json(self) -> dict:
        return {"n": self.n,
                "covers": [[a + 1, b + 1] for a, b in self.covers],
                "omega": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict) -> "LabeledPoset":
        n = int(data["n"])
        covers = [(int(a) - 1, int(b) - 1) for a, b in data.get("covers", [])]
        omega = data.get("omega") or list(range(1, n + 1))
        return cls(n, tuple(covers), tuple(int(x) for x in omega))


def disjoint_union(P: LabeledPoset, Q: LabeledPoset, labels: Sequence[int] | None = None) -> LabeledPoset:
    """P + Q with Q's elements numbered after P's.

    Without ``labels`` every label of Q is shifted above every label of P.
    """
    covers = list(P.covers) + [(a + P.n, b + P.n) for a, b in Q.covers]
    if labels is None:
        labels = list(P.labels) + [x + P.n for x in Q.labels]
    names = ()
    if P.names and Q.names:
        names = tuple(("P", x) for x in P.names) + tuple(("Q", x) for x in Q.names)
    return LabeledPoset(P.n + Q.n, tuple(covers), tuple(labels), names)


def chain(n: int) -> LabeledPoset:
    return LabeledPoset.unlabeled(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> LabeledPoset:
    return LabeledPoset.unlabeled(n, [])


# -- permutation statistics -------------------------------------------------

def descents(sigma: Sequence[int]) -> set[int]:
    return {i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i]}


def maj(sigma: Sequence[int]) -> int:
    return sum(descents(sigma))


def inv(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(sigma)
    for pos, v in enumerate(sigma, 1):
        out[v - 1] = pos
    return tuple(out)


def foata(sigma: Sequence[int]) -> tuple[int, ...]:
    """Foata's bijection: maj(sigma) == inv(foata(sigma))."""
    if not sigma:
        return ()
    gamma = [sigma[0]]
    for x in sigma[1:]:
        greater = gamma[-1] > x
        blocks, cur = [], []
        for letter in gamma:
            cur.append(letter)
            if (letter > x) == greater:
                blocks.append(cur)
                cur = []
        # gamma's last letter always closes a block, so cur is empty here
        gamma = [b[-1:] + b[:-1] for b in blocks]
        gamma = [letter for b in gamma for letter in b] + [x]
    return tuple(gamma)


# -- linear extensions ------------------------------------------------------

def _check_cap(P: LabeledPoset, cap: int) -> None:
    if P.n > cap:
        raise CapExceeded(f"poset has {P.n} elements; oracle cap is {cap}")


def enumerate_extensions(P: LabeledPoset, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every word omega(f^-1(1)) ... omega(f^-1(n)) exactly once."""
    _check_cap(P, cap)
    below = P.below_masks()
    n = P.n
    full = (1 << n) - 1
    word: list[int] = []

    def rec(placed):
        if placed == full:
            yield tuple(word)
            return
        for x in range(n):
            if not placed >> x & 1 and below[x] & placed == below[x]:
                word.append(P.labels[x])
                yield from rec(placed | 1 << x)
                word.pop()

    yield from rec(0)


def _histograms(P: LabeledPoset, last: int, cap: int):
    _check_cap(P, cap)
    return kernels.extension_histograms(P.below_masks(), list(P.labels), last)


def count_extensions(P: LabeledPoset, cap: int = DEFAULT_CAP) -> int:
    return _histograms(P, -1, cap)[0]


def eq_stat(P: LabeledPoset, stat: str = "maj", cap: int = DEFAULT_CAP) -> IntPoly:
    """sum over linear extensions of q^stat."""
    _, maj_h, inv_h = _histograms(P, -1, cap)
    if stat == "maj":
        return IntPoly(maj_h)
    if stat == "inv":
        return IntPoly(inv_h)
    raise ValueError(f"unknown statistic {stat!r}")


def eq_both(P: LabeledPoset, cap: int = DEFAULT_CAP) -> tuple[int, IntPoly, IntPoly]:
    count, maj_h, inv_h = _histograms(P, -1, cap)
    return count, IntPoly(maj_h), IntPoly(inv_h)


def eq_stat_ending_at(P: LabeledPoset, s: int, stat: str = "maj", cap: int = DEFAULT_CAP) -> IntPoly:
    """Like :func:`eq_stat` but only over extensions whose last element is s."""
    _, maj_h, inv_h = _histograms(P, s, cap)
    return IntPoly(maj_h if stat == "maj" else inv_h)


# -- P-partitions -----------------------------------------------------------

def _top_down(P: LabeledPoset) -> list[int]:
    return list(reversed(P.topological_order()))


def ppartition_series(P: LabeledPoset, N: int, cap: int = 40) -> IntPoly:
    """Number of (P, omega)-partitions of m for m = 0..N, as a polynomial."""
    if N > cap:
        raise CapExceeded(f"truncation {N} exceeds cap {cap}")
    return IntPoly(kernels.ppartition_counts(_top_down(P), P.upper_covers(), list(P.labels), N, -1))


def ppartition_series_restricted(P: LabeledPoset, s: int, N: int, cap: int = 40) -> IntPoly:
    """Same for (P, omega; s)-partitions: f(s) is a minimum, ties need omega(s) larger."""
    if N > cap:
        raise CapExceeded(f"truncation {N} exceeds cap {cap}")
    return IntPoly(kernels.ppartition_counts(_top_down(P), P.upper_covers(), list(P.labels), N, s))


def ppartition_series_bruteforce(P: LabeledPoset, N: int, s: int = -1) -> IntPoly:
    """Direct check of the defining conditions over all maps into 0..N."""
    from itertools import product

    below = P.strictly_below()
    pairs = [(x, y) for y in range(P.n) for x in range(P.n) if below[y] >> x & 1]
    counts = [0] * (N + 1)
    for f in product(range(N + 1), repeat=P.n):
        total = sum(f)
        if total > N:
            continue
        ok = all(f[x] >= f[y] and (P.labels[x] < P.labels[y] or f[x] > f[y]) for x, y in pairs)
        if ok and s >= 0:
            ok = all(f[s] <= f[t] and (f[s] != f[t] or P.labels[s] > P.labels[t])
                     for t in range(P.n) if t != s)
        if ok:
            counts[total] += 1
    return IntPoly(counts)
