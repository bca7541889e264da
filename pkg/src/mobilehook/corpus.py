"""Deterministic test corpora: small mobiles, bare strips and small posets."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .mobile import HangingPoset, MobilePoset
from .poset import LabeledPoset
from .shapes import (Partition, SkewShape, border_strips_in_box, partitions_in_box,
                     skew_shapes_in_box)

DEFAULT_SEED = 20240611

HANGING_MENU: dict[str, HangingPoset] = {
    "chain2": HangingPoset.chain(2),
    "chain3": HangingPoset.chain(3),
    "star2": HangingPoset.star(2),
    "shape22": HangingPoset.straight([2, 2]),
}
TREE_MENU = ("chain2", "chain3", "star2")


def bare_strips(rows: int = 4, cols: int = 4) -> list[SkewShape]:
    """Every normalized border strip inside a rows x cols box."""
    return border_strips_in_box(rows, cols)


def all_mobiles(trees_only: bool = False, max_n: int = 11, box: int = 4) -> list[MobilePoset]:
    """All mobiles on strips in the box with menu hangings on at most two distinct cells."""
    menu = TREE_MENU if trees_only else tuple(HANGING_MENU)
    out = []
    for s in bare_strips(box, box):
        cells = s.cells()
        out.append(MobilePoset(s, ()))
        for k in (1, 2):
            for where in combinations(cells, k):
                base = s.size
                for names in _choices(menu, k):
                    n = base + sum(HANGING_MENU[x].size for x in names)
                    if n > max_n:
                        continue
                    out.append(MobilePoset(s, tuple((c, HANGING_MENU[x]) for c, x in zip(where, names))))
    return out


def _choices(menu, k):
    if k == 1:
        return [(a,) for a in menu]
    return [(a, b) for a in menu for b in menu]


def mobile_corpus(size: int = 240, seed: int = DEFAULT_SEED, trees_only: bool = False,
                  max_n: int = 11) -> list[MobilePoset]:
    """A seeded sample of all_mobiles; the same seed always gives the same list."""
    pool = all_mobiles(trees_only, max_n)
    if size >= len(pool):
        return pool
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(len(pool)), size))
    return [pool[i] for i in picks]


# -- posets up to isomorphism ------------------------------------------------

def _graph(n: int, covers) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(covers)
    return g


def _antichains(n: int, below: list[int]):
    """All antichains of a poset given strict-below masks (including the empty one)."""
    out = [()]
    for r in range(1, n + 1):
        found = False
        for combo in combinations(range(n), r):
            if all(not (below[b] >> a & 1 or below[a] >> b & 1) for a, b in combinations(combo, 2)):
                out.append(combo)
                found = True
        if not found:
            break
    return out


@lru_cache(maxsize=None)
def posets_up_to_iso(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Cover relations of one representative per isomorphism class of n-element posets.

    Built by adding a new maximal element above an antichain of a smaller poset.
    """
    if n == 0:
        return ((),)
    found: dict[str, list[nx.DiGraph]] = {}
    reps = []
    for covers in posets_up_to_iso(n - 1):
        P = LabeledPoset.unlabeled(n - 1, covers)
        below = P.strictly_below()
        for anti in _antichains(n - 1, below):
            new = tuple(sorted(covers + tuple((a, n - 1) for a in anti)))
            g = _graph(n, new)
            key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
            bucket = found.setdefault(key, [])
            if any(nx.is_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            reps.append(new)
    return tuple(reps)


def natural_poset(n: int, covers) -> LabeledPoset:
    """The poset with a natural labeling derived from a topological order."""
    P = LabeledPoset.unlabeled(n, covers)
    labels = [0] * n
    for r, x in enumerate(P.topological_order(), 1):
        labels[x] = r
    return P.with_labels(labels)


def small_posets(max_n: int = 7, seed: int = DEFAULT_SEED) -> list[LabeledPoset]:
    """Each isomorphism class up to max_n elements, with a seeded random labeling."""
    rng = random.Random(seed)
    out = []
    for n in range(1, max_n + 1):
        for covers in posets_up_to_iso(n):
            labels = list(range(1, n + 1))
            rng.shuffle(labels)
            out.append(LabeledPoset(n, covers, tuple(labels)))
    return out


def random_poset(rng: random.Random, n: int, density: float = 0.3) -> LabeledPoset:
    """Random poset: relations i < j drawn for i < j in a hidden order, random labeling."""
    perm = list(range(n))
    rng.shuffle(perm)
    covers = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    P = LabeledPoset(n, tuple(covers), tuple(labels))
    # drop redundant relations so covers are really covers
    return P.restrict(range(n)).with_labels(P.labels)


# -- shapes and hanging posets ----------------------------------------------

def partitions_up_to(max_size: int) -> list[Partition]:
    """Every nonempty partition of size at most max_size."""
    return [lam for lam in partitions_in_box(max_size, max_size) if 0 < lam.size <= max_size]


def skew_shapes(box: int = 4, max_size: int = 7) -> list[SkewShape]:
    """Skew shapes with outer shape in a box x box square and 1..max_size cells."""
    return [s for s in skew_shapes_in_box(box, box) if 0 < s.size <= max_size]


def _canonical_tree(children: dict[int, list[int]], v: int) -> str:
    return "(" + "".join(sorted(_canonical_tree(children, c) for c in children[v])) + ")"


@lru_cache(maxsize=None)
def rooted_trees(n: int) -> tuple[HangingPoset, ...]:
    """One rooted tree per isomorphism class on n nodes (parents given as node indices, root -1)."""
    if n == 1:
        return (HangingPoset.tree([-1]),)
    seen: set[str] = set()
    out = []
    for smaller in rooted_trees(n - 1):
        base = list(smaller.parents)
        for attach in range(n - 1):
            parents = base + [attach]
            children: dict[int, list[int]] = {v: [] for v in range(n)}
            for v, p in enumerate(parents):
                if p >= 0:
                    children[p].append(v)
            key = _canonical_tree(children, 0)
            if key not in seen:
                seen.add(key)
                out.append(HangingPoset.tree(parents))
    return tuple(out)


def small_hangings(max_size: int = 8) -> list[HangingPoset]:
    """All rooted trees and straight shapes with at most max_size elements."""
    out = [t for n in range(1, max_size + 1) for t in rooted_trees(n)]
    out += [HangingPoset.straight(lam.parts) for lam in partitions_up_to(max_size)]
    return out
