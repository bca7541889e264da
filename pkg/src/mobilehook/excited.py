"""Excited diagrams of a skew shape and their broken diagonals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Mapping

from .shapes import Cell, Partition, SkewShape


class InvalidMove(ValueError):
    pass


@dataclass(frozen=True)
class ExcitedDiagram:
    outer: Partition
    cells: frozenset[Cell]
    broken: frozenset[Cell]

    def key(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def complement(self) -> list[Cell]:
        """Cells of [lambda] not in the diagram."""
        return [u for u in self.outer.cells() if u not in self.cells]


def initial_broken(s: SkewShape) -> frozenset[Cell]:
    """Broken diagonals of [mu]: the cells of lambda/mu with content mu_t - t."""
    diagonals = {s.inner[t] - t for t in range(1, len(s.outer) + 1)}
    return frozenset(u for u in s.cells() if u[1] - u[0] in diagonals)


def initial_diagram(s: SkewShape) -> ExcitedDiagram:
    return ExcitedDiagram(s.outer, frozenset(s.inner.cells()), initial_broken(s))


def is_active(D: ExcitedDiagram, u: Cell) -> bool:
    i, j = u
    if u not in D.cells or (i + 1, j + 1) not in D.outer:
        return False
    return not ({(i + 1, j), (i, j + 1), (i + 1, j + 1)} & D.cells)


def active_cells(D: ExcitedDiagram) -> list[Cell]:
    return sorted(u for u in D.cells if is_active(D, u))


def excited_move(D: ExcitedDiagram, u: Cell) -> ExcitedDiagram:
    if not is_active(D, u):
        raise InvalidMove(f"cell {u} is not active")
    i, j = u
    cells = (D.cells - {u}) | {(i + 1, j + 1)}
    broken = (D.broken - {(i + 1, j + 1)}) | {(i + 1, j)}
    return ExcitedDiagram(D.outer, frozenset(cells), frozenset(broken))


def enumerate_diagrams(s: SkewShape) -> list[ExcitedDiagram]:
    """All excited diagrams of s, sorted lexicographically by cell set."""
    start = initial_diagram(s)
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        D = queue.popleft()
        for u in active_cells(D):
            E = excited_move(D, u)
            k = E.key()
            if k in seen:
                if seen[k].broken != E.broken:
                    raise RuntimeError(f"inconsistent broken diagonals for diagram {k}")
                continue
            seen[k] = E
            queue.append(E)
    return [seen[k] for k in sorted(seen)]


# longer alias; a bare ``enumerate`` would shadow the builtin
enumerate_excited = enumerate_diagrams


def w_stat(D: ExcitedDiagram, hookfn: Callable[[Cell], int]) -> int:
    """Sum of hookfn over the broken diagonals of D."""
    return sum(hookfn(u) for u in D.broken)


def displacements(s: SkewShape, D: ExcitedDiagram) -> list[tuple[Cell, int]]:
    """Each cell of [mu] with the number of excited moves it made to reach D.

    Moves keep cells on their diagonal and never reorder them, so the k-th
    cell of [mu] on a diagonal ends as the k-th cell of D on that diagonal.
    """
    start: dict[int, list[Cell]] = {}
    end: dict[int, list[Cell]] = {}
    for u in s.inner.cells():
        start.setdefault(u[1] - u[0], []).append(u)
    for u in D.cells:
        end.setdefault(u[1] - u[0], []).append(u)
    out = []
    for c, cells in start.items():
        for u, v in zip(sorted(cells), sorted(end.get(c, []))):
            out.append((u, v[0] - u[0]))
    return sorted(out)


def p_D(s: SkewShape, D: ExcitedDiagram, column_sizes: Mapping[int, int]) -> int:
    """Hanging size summed over the source column of every excited move from [mu] to D.

    A move (i, j) -> (i+1, j+1) contributes ``column_sizes[j]``, the total
    size of posets hanging in column j.  When no cell moves twice this is
    the sum over the vacated cells of [mu] of the sizes in their columns.
    """
    return sum(column_sizes.get(b, 0)
               for (i, j), t in displacements(s, D) for b in range(j, j + t))


def p_D_vacated(s: SkewShape, D: ExcitedDiagram, column_sizes: Mapping[int, int]) -> int:
    """Sum over the vacated cells of [mu] of the hanging size in their column."""
    return sum(column_sizes.get(j, 0) for (i, j) in s.inner.cells() if (i, j) not in D.cells)


def lattice_path_count(lam: Partition) -> int:
    """Up/right paths from (lambda'_1, 1) to (1, lambda_1) staying inside [lambda]."""
    if not lam.parts:
        return 0
    rows = len(lam)
    ways: dict[Cell, int] = {}
    for i in range(rows, 0, -1):
        for j in range(1, lam[i] + 1):
            if (i, j) == (rows, 1):
                ways[(i, j)] = 1
            else:
                ways[(i, j)] = ways.get((i + 1, j), 0) + ways.get((i, j - 1), 0)
    return ways[(1, lam[1])]
