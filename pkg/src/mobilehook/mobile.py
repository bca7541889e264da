"""Mobile posets: a border strip with d-complete posets hanging below its cells.

Orientation: in the strip, moving down or right goes down in the poset, so
the inner corners of the strip are its maximal elements.  Each hanging
poset has a unique maximal element, which is covered by the strip cell it
hangs from.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .poset import LabeledPoset
from .shapes import Cell, Partition, SkewShape, content


class InvalidMobile(ValueError):
    pass


@dataclass(frozen=True)
class HangingPoset:
    """A rooted tree (``kind == "tree"``) or a straight shape (``kind == "shape"``).

    Trees are stored as a parent array, ``parents[k] == -1`` for the root.
    The root, resp. cell (1,1) of the shape, is the unique maximal element.
    """

    kind: str
    parents: tuple[int, ...] = ()
    shape: Partition = Partition()

    def __post_init__(self):
        if self.kind == "tree":
            parents = tuple(int(p) for p in self.parents)
            object.__setattr__(self, "parents", parents)
            roots = [k for k, p in enumerate(parents) if p == -1]
            if len(roots) != 1:
                raise InvalidMobile(f"tree needs exactly one root, got {len(roots)}")
            for k, p in enumerate(parents):
                if p != -1 and not 0 <= p < len(parents):
                    raise InvalidMobile(f"node {k} has invalid parent {p}")
            for k in range(len(parents)):
                seen, x = set(), k
                while x != -1:
                    if x in seen:
                        raise InvalidMobile("tree parent array has a cycle")
                    seen.add(x)
                    x = parents[x]
        elif self.kind == "shape":
            if not isinstance(self.shape, Partition):
                object.__setattr__(self, "shape", Partition(tuple(self.shape)))
            if self.shape.size == 0:
                raise InvalidMobile("hanging shape must be nonempty")
        else:
            raise InvalidMobile(f"unknown hanging kind {self.kind!r}")

    @classmethod
    def tree(cls, parents: Sequence[int]) -> "HangingPoset":
        return cls("tree", tuple(parents))

    @classmethod
    def chain(cls, k: int) -> "HangingPoset":
        """k-element chain, node 0 on top."""
        return cls.tree([-1] + list(range(k - 1)))

    @classmethod
    def star(cls, leaves: int) -> "HangingPoset":
        """Root covering ``leaves`` minimal elements."""
        return cls.tree([-1] + [0] * leaves)

    @classmethod
    def straight(cls, parts: Sequence[int]) -> "HangingPoset":
        return cls("shape", shape=Partition(tuple(parts)))

    @property
    def size(self) -> int:
        return len(self.parents) if self.kind == "tree" else self.shape.size

    def nodes(self) -> list:
        if self.kind == "tree":
            return list(range(len(self.parents)))
        return self.shape.cells()

    def top(self):
        if self.kind == "tree":
            return self.parents.index(-1)
        return (1, 1)

    def covers(self) -> list[tuple]:
        """Pairs (lower, upper) of node identifiers."""
        if self.kind == "tree":
            return [(k, p) for k, p in enumerate(self.parents) if p != -1]
        cells = set(self.shape.cells())
        out = []
        for (i, j) in cells:
            if (i + 1, j) in cells:
                out.append(((i + 1, j), (i, j)))
            if (i, j + 1) in cells:
                out.append(((i, j + 1), (i, j)))
        return out

    def hooks(self) -> dict:
        """Hook length of each node: subtree size for trees, classic hook for shapes."""
        if self.kind == "shape":
            return self.shape.hooks()
        size = {k: 1 for k in range(len(self.parents))}
        for k in self._bottom_up():
            p = self.parents[k]
            if p != -1:
                size[p] += size[k]
        return size

    def _bottom_up(self) -> list:
        depth = {}
        for k in range(len(self.parents)):
            d, x = 0, k
            while self.parents[x] != -1:
                x = self.parents[x]
                d += 1
            depth[k] = d
        return sorted(depth, key=lambda k: -depth[k])

    def _postorder(self) -> list[int]:
        children: dict[int, list[int]] = {k: [] for k in range(len(self.parents))}
        for k, p in enumerate(self.parents):
            if p != -1:
                children[p].append(k)
        out: list[int] = []
        stack = [(self.top(), False)]
        while stack:
            k, done = stack.pop()
            if done:
                out.append(k)
                continue
            stack.append((k, True))
            stack.extend((c, False) for c in reversed(children[k]))
        return out

    def natural_order(self) -> list:
        """Nodes bottom-up; assigning increasing labels in this order is natural.

        Trees use postorder, so every subtree also receives a consecutive
        block of labels (a recursive labeling).
        """
        if self.kind == "tree":
            return self._postorder()
        return sorted(self.shape.cells(), key=lambda u: (-(u[0] + u[1]), u))

    def to_json(self) -> dict:
        if self.kind == "tree":
            return {"kind": "tree", "parents": [p + 1 for p in self.parents]}
        return {"kind": "shape", "shape": list(self.shape.parts)}

    @classmethod
    def from_json(cls, data: dict) -> "HangingPoset":
        kind = data.get("kind")
        if kind == "tree":
            # parent entries are 1-based node numbers, 0 marks the root
            return cls.tree([int(p) - 1 for p in data["parents"]])
        if kind == "shape":
            return cls.straight(data["shape"])
        raise InvalidMobile(f"unknown hanging kind {kind!r}")


@dataclass(frozen=True)
class MobilePoset:
    """Border strip ``strip`` plus ``hangings``: pairs (strip cell, HangingPoset)."""

    strip: SkewShape
    hangings: tuple[tuple[Cell, HangingPoset], ...] = ()

    def __post_init__(self):
        hangings = tuple((tuple(c), h) for c, h in self.hangings)
        object.__setattr__(self, "hangings", hangings)
        if not self.strip.is_border_strip():
            raise InvalidMobile(f"{self.strip} is not a border strip")
        if not self.strip.is_normalized():
            raise InvalidMobile(f"{self.strip} must meet every row and column of its outer shape")
        for c, _ in hangings:
            if c not in self.strip:
                raise InvalidMobile(f"hanging position {c} is not a strip cell")

    @classmethod
    def of(cls, lam: Sequence[int], mu: Sequence[int] = (),
           hangings: Iterable[tuple[Cell, HangingPoset]] = ()) -> "MobilePoset":
        return cls(SkewShape.of(lam, mu), tuple(hangings))

    @property
    def lam(self) -> Partition:
        return self.strip.outer

    @property
    def mu(self) -> Partition:
        return self.strip.inner

    @property
    def strip_size(self) -> int:
        return self.strip.size

    @property
    def n(self) -> int:
        return self.strip.size + sum(h.size for _, h in self.hangings)

    def is_tree_mobile(self) -> bool:
        return all(h.kind == "tree" for _, h in self.hangings)

    def hanging_sizes(self) -> dict[Cell, int]:
        """p_{a,b}: total size of the posets hanging at each strip cell."""
        sizes: dict[Cell, int] = {}
        for c, h in self.hangings:
            sizes[c] = sizes.get(c, 0) + h.size
        return sizes

    def column_sizes(self) -> dict[int, int]:
        cols: dict[int, int] = {}
        for (a, b), p in self.hanging_sizes().items():
            cols[b] = cols.get(b, 0) + p
        return cols

    def hook(self, u: Cell) -> int:
        return self.lam.hook(u)

    def modified_hook(self, u: Cell) -> int:
        """Hook of u in lambda plus the hanging sizes at strip cells weakly southeast of u."""
        i, j = u
        extra = sum(p for (a, b), p in self.hanging_sizes().items() if a >= i and b >= j)
        return self.lam.hook(u) + extra

    def modified_hooks(self) -> dict[Cell, int]:
        return {u: self.modified_hook(u) for u in self.lam.cells()}

    def hangings_hook_multiset(self) -> Counter:
        out: Counter = Counter()
        for _, h in self.hangings:
            out.update(h.hooks().values())
        return out

    def H_p(self) -> int:
        return prod(self.hangings_hook_multiset().elements())

    # -- the underlying poset ----------------------------------------------

    def _element_order(self) -> list[tuple]:
        """Element names in label order 1..n.

        Columns are visited right to left.  Within a column, first every
        hanging attached to a cell of that column (cells top to bottom, each
        hanging bottom-up), then the strip cells top to bottom.  On the
        strip alone this is the reversed Schur order.
        """
        order = []
        by_cell: dict[Cell, list[int]] = {}
        for k, (c, _) in enumerate(self.hangings):
            by_cell.setdefault(c, []).append(k)
        cells = self.strip.cells()
        for col in range(self.lam[1], 0, -1):
            column = sorted(u for u in cells if u[1] == col)
            for u in column:
                for k in by_cell.get(u, []):
                    h = self.hangings[k][1]
                    order.extend(("h", k, node) for node in h.natural_order())
            order.extend(("s", u) for u in column)
        return order

    def _names_and_covers(self) -> tuple[list[tuple], list[tuple]]:
        names = self._element_order()
        cells = self.strip.cell_set()
        covers = []
        for (i, j) in cells:
            if (i + 1, j) in cells:
                covers.append((("s", (i + 1, j)), ("s", (i, j))))
            if (i, j + 1) in cells:
                covers.append((("s", (i, j + 1)), ("s", (i, j))))
        for k, (c, h) in enumerate(self.hangings):
            covers.extend((("h", k, a), ("h", k, b)) for a, b in h.covers())
            covers.append((("h", k, h.top()), ("s", c)))
        return names, covers

    def to_poset(self) -> LabeledPoset:
        """The underlying poset, labeled by :meth:`reversed_schur_labeling`."""
        names, covers = self._names_and_covers()
        index = {name: x for x, name in enumerate(names)}
        return LabeledPoset(len(names), tuple((index[a], index[b]) for a, b in covers),
                            tuple(range(1, len(names) + 1)), tuple(names))

    def reversed_schur_labeling(self) -> LabeledPoset:
        """Strip labels decrease from (lambda'_1, 1) to (1, lambda_1); hangings natural."""
        return self.to_poset()

    def omega_inv_labeling(self) -> LabeledPoset:
        """Block labeling for the inversion statistic; mobile trees only.

        A strip cell x receives its reversed-Schur strip label plus the total
        hanging size in columns >= x_2.
        """
        if not self.is_tree_mobile():
            raise InvalidMobile("omega_inv labeling needs rooted-tree hangings")
        return self.to_poset()

    def strip_element(self, P: LabeledPoset, u: Cell) -> int:
        return P.element(("s", u))

    # -- recursion helpers --------------------------------------------------

    def split_at(self, u: Cell) -> tuple["MobilePoset | None", "MobilePoset | None", list[HangingPoset]]:
        """Remove inner corner u.

        Returns the left piece (content < c(u)) and right piece as free-standing
        mobiles translated to row/column 1 (None when empty), and the hangings
        that were attached to u.
        """
        _, left, right = self.strip.remove_inner_corner(u)
        t_nu = [h for c, h in self.hangings if c == u]
        return self._piece(left), self._piece(right), t_nu

    def _piece(self, piece: SkewShape) -> "MobilePoset | None":
        if piece.is_empty():
            return None
        shape, (dr, dc) = piece.normalized()
        cells = piece.cell_set()
        hangings = tuple(((a - dr, b - dc), h) for (a, b), h in self.hangings if (a, b) in cells)
        return MobilePoset(shape, hangings)

    def split_elements(self, P: LabeledPoset, u: Cell) -> tuple[list[int], list[int], list[int]]:
        """Elements of P (from to_poset) in the left piece, right piece and T_nu of split_at(u)."""
        cu = content(u)
        left, right, t_nu = [], [], []
        for x, name in enumerate(P.names):
            cell = name[1] if name[0] == "s" else self.hangings[name[1]][0]
            c = content(cell)
            if c < cu:
                left.append(x)
            elif c > cu:
                right.append(x)
            elif name[0] == "h":
                t_nu.append(x)
        return left, right, t_nu

    def to_json(self) -> dict:
        return {"lambda": list(self.lam.parts), "mu": list(self.mu.parts),
                "hangings": [dict(at=list(c), **h.to_json()) for c, h in self.hangings]}

    @classmethod
    def from_json(cls, data: dict) -> "MobilePoset":
        try:
            strip = SkewShape.of(data["lambda"], data.get("mu", []))
        except KeyError as exc:
            raise InvalidMobile(f"missing field {exc}") from None
        hangings = []
        for h in data.get("hangings", []):
            at = h.get("at")
            if not isinstance(at, (list, tuple)) or len(at) != 2:
                raise InvalidMobile(f"hanging needs an 'at' cell: {h}")
            hangings.append(((int(at[0]), int(at[1])), HangingPoset.from_json(h)))
        return cls(strip, tuple(hangings))


def shape_poset(s: SkewShape) -> LabeledPoset:
    """Poset of a skew diagram with the reversed Schur (row reading) labeling.

    Cells are read row by row from the top, right to left within a row, and
    labeled 1, 2, ... in that order.
    """
    cells = s.cells()
    order = sorted(cells, key=lambda u: (u[0], -u[1]))
    index = {u: x for x, u in enumerate(order)}
    cset = set(cells)
    covers = []
    for (i, j) in cells:
        if (i + 1, j) in cset:
            covers.append((index[(i + 1, j)], index[(i, j)]))
        if (i, j + 1) in cset:
            covers.append((index[(i, j + 1)], index[(i, j)]))
    return LabeledPoset(len(order), tuple(covers), tuple(range(1, len(order) + 1)),
                        tuple(("s", u) for u in order))


def hanging_poset(h: HangingPoset, labels: Sequence[int] | None = None) -> LabeledPoset:
    """A hanging poset on its own, naturally labeled unless labels are given."""
    order = h.natural_order()
    index = {node: x for x, node in enumerate(order)}
    covers = tuple((index[a], index[b]) for a, b in h.covers())
    if labels is None:
        labels = range(1, len(order) + 1)
    return LabeledPoset(len(order), covers, tuple(labels), tuple(order))


def tree_poset_hooks(h: HangingPoset, P: LabeledPoset) -> list[int]:
    """Hook of each element of ``hanging_poset(h)`` in element order."""
    hooks = h.hooks()
    return [hooks[name] for name in P.names]
