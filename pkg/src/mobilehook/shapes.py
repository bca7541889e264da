"""Partitions, skew shapes and border strips in English (matrix) convention.

Cells are ``(i, j)`` tuples with row ``i`` and column ``j`` both starting
at 1; row 1 is at the top.  The content of a cell is ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Cell = tuple[int, int]


def content(u: Cell) -> int:
    return u[1] - u[0]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access, zero past the end."""
        if i < 1:
            raise IndexError("partition rows start at 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j)
                               for j in range(1, self.parts[0] + 1)))

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, u) -> bool:
        i, j = u
        return i >= 1 and j >= 1 and j <= self[i]

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(other[i] <= self[i] for i in range(1, len(other) + 1))

    def hook(self, u: Cell) -> int:
        if u not in self:
            raise ValueError(f"cell {u} is not in {self.parts}")
        i, j = u
        return self[i] + self.conjugate()[j] - i - j + 1

    def hooks(self) -> dict[Cell, int]:
        conj = self.conjugate()
        return {(i, j): self[i] + conj[j] - i - j + 1 for (i, j) in self.cells()}

    def b(self) -> int:
        """sum_i (i - 1) lambda_i."""
        return sum((i - 1) * p for i, p in enumerate(self.parts, 1))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def hook(lam: Partition, u: Cell) -> int:
    return lam.hook(u)


def b(lam: Partition) -> int:
    return lam.b()


def _as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(tuple(x))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", _as_partition(self.outer))
        object.__setattr__(self, "inner", _as_partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} is not contained in outer {self.outer}")

    @classmethod
    def of(cls, lam: Sequence[int], mu: Sequence[int] = ()) -> "SkewShape":
        return cls(Partition(tuple(lam)), Partition(tuple(mu)))

    def cells(self) -> list[Cell]:
        """Cells of [lambda/mu], sorted row by row."""
        return [(i, j) for i in range(1, len(self.outer) + 1)
                for j in range(self.inner[i] + 1, self.outer[i] + 1)]

    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells())

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __contains__(self, u) -> bool:
        i, j = u
        return i >= 1 and self.inner[i] < j <= self.outer[i]

    def is_empty(self) -> bool:
        return self.size == 0

    def components(self) -> list[list[Cell]]:
        """Edge-connected components, each sorted, ordered by decreasing content."""
        cells = self.cell_set()
        seen: set[Cell] = set()
        comps = []
        for start in self.cells():
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                i, j = stack.pop()
                comp.append((i, j))
                for v in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if v in cells and v not in seen:
                        seen.add(v)
                        stack.append(v)
            comps.append(sorted(comp))
        comps.sort(key=lambda c: -max(content(u) for u in c))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def has_2x2_block(self) -> bool:
        cells = self.cell_set()
        return any((i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
                   for (i, j) in cells)

    def is_border_strip(self) -> bool:
        return not self.is_empty() and self.is_connected() and not self.has_2x2_block()

    def is_normalized(self) -> bool:
        """Every row 1..l(lambda) and column 1..lambda_1 meets the shape."""
        lam_c, mu_c = self.outer.conjugate(), self.inner.conjugate()
        rows_ok = all(self.inner[i] < self.outer[i] for i in range(1, len(self.outer) + 1))
        cols_ok = all(mu_c[j] < lam_c[j] for j in range(1, len(lam_c) + 1))
        return rows_ok and cols_ok

    def normalized(self) -> tuple["SkewShape", Cell]:
        """Translate so the shape touches row 1 and column 1.

        Returns the translated shape and the offset ``(dr, dc)`` such that a
        cell ``(i, j)`` of ``self`` becomes ``(i - dr, j - dc)``.
        """
        cells = self.cells()
        if not cells:
            return SkewShape(Partition(), Partition()), (0, 0)
        dr = min(i for i, _ in cells) - 1
        dc = min(j for _, j in cells) - 1
        rows = range(dr + 1, max(i for i, _ in cells) + 1)
        lam = [self.outer[i] - dc for i in rows]
        mu = [max(self.inner[i] - dc, 0) for i in rows]
        return SkewShape(Partition(tuple(lam)), Partition(tuple(mu))), (dr, dc)

    def inner_corners(self) -> list[Cell]:
        """Cells with no shape cell directly above or to the left, by decreasing content."""
        cells = self.cell_set()
        corners = [(i, j) for (i, j) in cells if (i - 1, j) not in cells and (i, j - 1) not in cells]
        return sorted(corners, key=lambda u: -content(u))

    def remove_inner_corner(self, u: Cell) -> tuple[Partition, "SkewShape", "SkewShape"]:
        """Adjoin the inner corner u to mu.

        Returns ``(nu, left, right)`` where ``left`` and ``right`` are the
        pieces of lambda/nu with content below and above ``c(u)``, each
        written as lambda/nu' with nu' = nu plus the other piece.
        """
        if not self.is_border_strip():
            raise ValueError("remove_inner_corner needs a border strip")
        if u not in self.inner_corners():
            raise ValueError(f"{u} is not an inner corner of {self}")
        i0, j0 = u
        nu_parts = list(self.inner.parts) + [0] * (len(self.outer) - len(self.inner))
        nu_parts[i0 - 1] += 1
        nu = Partition(tuple(nu_parts))
        cu = content(u)
        rest = [v for v in self.cells() if v != u]
        left_cells = [v for v in rest if content(v) < cu]
        right_cells = [v for v in rest if content(v) > cu]
        return nu, self._fill(nu, right_cells), self._fill(nu, left_cells)

    def _fill(self, nu: Partition, extra: list[Cell]) -> "SkewShape":
        parts = [nu[i] for i in range(1, len(self.outer) + 1)]
        for (i, j) in extra:
            parts[i - 1] = max(parts[i - 1], j)
        return SkewShape(self.outer, Partition(tuple(parts)))

    def contents_sum(self) -> int:
        return sum(content(u) for u in self.cells())

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def con(s: SkewShape) -> int:
    return s.contents_sum()


def is_border_strip(s: SkewShape) -> bool:
    return s.is_border_strip()


def inner_corners(s: SkewShape) -> list[Cell]:
    return s.inner_corners()


def remove_inner_corner(s: SkewShape, u: Cell):
    return s.remove_inner_corner(u)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting inside a rows x cols rectangle."""
    out = []

    def rec(prefix, max_part):
        out.append(Partition(tuple(prefix)))
        if len(prefix) == rows:
            return
        for p in range(1, max_part + 1):
            prefix.append(p)
            rec(prefix, p)
            prefix.pop()

    rec([], cols)
    return out


def skew_shapes_in_box(rows: int, cols: int) -> list[SkewShape]:
    parts = partitions_in_box(rows, cols)
    return [SkewShape(lam, mu) for lam in parts for mu in parts if lam.contains(mu)]


def border_strips_in_box(rows: int, cols: int) -> list[SkewShape]:
    """Normalized border strips whose outer shape fits in the box."""
    return [s for s in skew_shapes_in_box(rows, cols)
            if s.is_border_strip() and s.is_normalized()]


def zigzag_strip(k: int) -> SkewShape:
    """Up-down border strip with 2k cells and k - 1 down steps."""
    if k < 1:
        raise ValueError("zigzag needs k >= 1")
    lam = tuple(k + 2 - i for i in range(1, k + 1))
    mu = tuple(k - i for i in range(1, k + 1))
    return SkewShape(Partition(lam), Partition(mu))
