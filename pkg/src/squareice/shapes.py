"""Partitions, semistandard tableaux, strict Gelfand-Tsetlin patterns and staircases.

A strict GT pattern with top row ``top_row(lam)`` and a staircase whose
rightmost column misses ``top_row(lam)`` carry the same data: column ``j+1`` of
the staircase is the complement in ``{1..lam_1+n}`` of GT row ``n+1-j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts; ``n = len(parts)`` is significant."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ShapeError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"parts not weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Sequence[int], n: int | None = None) -> "Partition":
        """Pad ``parts`` with zeros up to ``n`` parts."""
        parts = tuple(parts)
        if n is None:
            return cls(parts)
        if len(parts) > n:
            raise ShapeError(f"{parts} has more than {n} parts")
        return cls(parts + (0,) * (n - len(parts)))

    @property
    def n(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rho(self) -> Tuple[int, ...]:
        return tuple(range(self.n - 1, -1, -1))

    @property
    def delta(self) -> Tuple[int, ...]:
        return tuple(range(self.n))

    def plus_rho(self) -> "Partition":
        return Partition(tuple(p + r for p, r in zip(self.parts, self.rho)))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Cells (i, j), 1-based, row by row."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """``other`` is a subdiagram of ``self`` (trailing zeros ignored)."""
        a = [p for p in self.parts if p]
        b = [p for p in other.parts if p]
        return len(b) <= len(a) and all(q <= p for p, q in zip(a, b))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram; has ``lam_1`` parts."""
    return Partition(tuple(sum(1 for p in lam.parts if p >= k) for k in range(1, lam.first + 1)))


def top_row(lam: Partition) -> Tuple[int, ...]:
    """Columns ``lam_i + n + 1 - i`` in increasing order."""
    n = lam.n
    return tuple(sorted(lam.parts[i - 1] + n + 1 - i for i in range(1, n + 1)))


def partitions_in_box(n: int, k: int) -> List[Partition]:
    """All partitions with ``n`` parts (zeros allowed) and ``lam_1 <= k``, lex order."""
    out = []
    for parts in itertools.product(range(k + 1), repeat=n):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(Partition(parts))
    return out


def partitions_up_to(n: int, d: int) -> List[Partition]:
    """Partitions with at most ``n`` nonzero parts and size ``<= d``, by size then lex."""
    found = [p for p in partitions_in_box(n, d) if p.size <= d]
    return sorted(found, key=lambda p: (p.size, p.parts))


# -- Gelfand-Tsetlin patterns ---------------------------------------------------


@dataclass(frozen=True)
class GTPattern:
    """Strict GT pattern; row i (0-based here) has ``n - i`` entries."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(t) for t in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n - i:
                raise ShapeError(f"row {i + 1} has {len(row)} entries, expected {n - i}")
            if any(t < 1 for t in row):
                raise ShapeError(f"nonpositive entry in row {i + 1}")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ShapeError(f"row {i + 1} not strictly increasing: {row}")
        for i in range(n - 1):
            upper, lower = rows[i], rows[i + 1]
            for j, t in enumerate(lower):
                if not upper[j] <= t <= upper[j + 1]:
                    raise ShapeError(f"interlacing fails at row {i + 2}, entry {j + 1}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def k(self, i: int) -> int:
        """Rightmost entry of row ``i`` (1-based)."""
        return self.rows[i - 1][-1]

    def flat(self) -> Tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.rows))


def _next_rows(row: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    ranges = [range(row[j], row[j + 1] + 1) for j in range(len(row) - 1)]
    for cand in itertools.product(*ranges):
        if all(a < b for a, b in zip(cand, cand[1:])):
            yield cand


def enumerate_gt(lam: Partition) -> List[GTPattern]:
    """All strict GT patterns with first row ``top_row(lam)``, lex on flattened rows."""
    out = []

    def extend(rows):
        if len(rows[-1]) <= 1:
            out.append(GTPattern(tuple(rows)))
            return
        for nxt in _next_rows(rows[-1]):
            extend(rows + [nxt])

    if lam.n == 0:
        return []
    extend([top_row(lam)])
    return out


# -- staircases -------------------------------------------------------------------


@dataclass(frozen=True)
class Staircase:
    """Columns (left to right) stored as increasing tuples, read bottom to top.

    Column ``c`` (1-based) of ``n+1`` columns holds ``m + 1 - c`` values from
    ``{1..m}``.  In French notation rows weakly increase to the right, columns
    strictly increase upwards and south-east diagonals weakly decrease.
    """

    columns: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(sorted(int(v) for v in c)) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if not cols:
            raise ShapeError("staircase needs at least one column")
        m = len(cols[0])
        for c, col in enumerate(cols):
            if len(col) != m - c:
                raise ShapeError(f"column {c + 1} has {len(col)} entries, expected {m - c}")
            if len(set(col)) != len(col):
                raise ShapeError(f"column {c + 1} repeats an entry")
            if col and (col[0] < 1 or col[-1] > m):
                raise ShapeError(f"column {c + 1} has entries outside 1..{m}")
        for c in range(len(cols) - 1):
            left, right = cols[c], cols[c + 1]
            for r, v in enumerate(right):
                if left[r] > v:
                    raise ShapeError(f"row {r + 1} decreases between columns {c + 1} and {c + 2}")
                if v > left[r + 1]:
                    raise ShapeError(f"diagonal increases at column {c + 2}, row {r + 1}")

    @property
    def n(self) -> int:
        return len(self.columns) - 1

    @property
    def m(self) -> int:
        return len(self.columns[0])

    def missing(self) -> Tuple[int, ...]:
        """Values of ``1..m`` absent from the rightmost column."""
        last = set(self.columns[-1])
        return tuple(v for v in range(1, self.m + 1) if v not in last)

    def rows(self) -> List[List[int]]:
        """French rows, bottom first."""
        return [[col[r] for col in self.columns if r < len(col)] for r in range(self.m)]


def _complement(values, m: int) -> Tuple[int, ...]:
    s = set(values)
    return tuple(v for v in range(1, m + 1) if v not in s)


def gt_to_staircase(g: GTPattern, m: int | None = None) -> Staircase:
    n = g.n
    if m is None:
        m = g.rows[0][-1]
    if any(t > m for t in g.flat()):
        raise ShapeError(f"GT entries exceed {m}")
    columns = [tuple(range(1, m + 1))]
    for j in range(1, n + 1):
        columns.append(_complement(g.rows[n - j], m))
    return Staircase(tuple(columns))


def staircase_to_gt(s: Staircase) -> GTPattern:
    n, m = s.n, s.m
    if s.columns[0] != tuple(range(1, m + 1)):
        raise ShapeError("first column must hold every value")
    rows = [None] * n
    for j in range(1, n + 1):
        rows[n - j] = _complement(s.columns[j], m)
    return GTPattern(tuple(rows))


def enumerate_staircases(lam: Partition) -> List[Staircase]:
    """Staircases whose rightmost column misses ``top_row(lam)``.

    Built column by column from the left by choosing subsets, independent of
    the GT enumeration.
    """
    n = lam.n
    m = lam.first + n
    last = _complement(top_row(lam), m)
    out = []

    def fits(left, right):
        return all(left[r] <= v <= left[r + 1] for r, v in enumerate(right))

    def extend(cols):
        c = len(cols)
        if c == n:
            if fits(cols[-1], last):
                out.append(Staircase(tuple(cols) + (last,)))
            return
        for cand in itertools.combinations(range(1, m + 1), m - c):
            if fits(cols[-1], cand):
                extend(cols + [cand])

    extend([tuple(range(1, m + 1))])
    return out


# -- semistandard tableaux --------------------------------------------------------


@dataclass(frozen=True)
class SSYT:
    """Semistandard tableau in English notation; ``rows[i][j]`` is T(i+1, j+1)."""

    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        lengths = tuple(len(r) for r in self.rows)
        if lengths != tuple(p for p in self.shape.parts if p):
            raise ShapeError(f"row lengths {lengths} do not match {self.shape}")
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise ShapeError("rows must weakly increase")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ShapeError("columns must strictly increase")

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """(i, j, T(i,j)) with 1-based cell coordinates."""
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                yield i, j, v


def content(i: int, j: int) -> int:
    return j - i


def enumerate_ssyt(lam: Partition, n: int) -> List[SSYT]:
    """All SSYT of shape ``lam`` with entries in ``1..n``, lex on the row reading."""
    shape = [p for p in lam.parts if p]
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    grid = [[0] * p for p in shape]
    out = []

    def fill(k):
        if k == len(cells):
            out.append(SSYT(lam, tuple(tuple(r) for r in grid)))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, n + 1):
            grid[i][j] = v
            fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return out


# -- rendering and serialisation --------------------------------------------------


def render_gt(g: GTPattern) -> str:
    """Triangular layout, top row first, entries centred between their neighbours."""
    width = max(len(str(t)) for t in g.flat()) + 1
    lines = []
    for i, row in enumerate(g.rows):
        pad = " " * (width * i)
        lines.append((pad + "".join(str(t).rjust(width) + " " * width for t in row)).rstrip())
    return "\n".join(lines)


def render_staircase(s: Staircase) -> str:
    """French notation: the bottom row of the tableau is printed last."""
    width = len(str(s.m))
    lines = [" ".join(str(v).rjust(width) for v in row) for row in s.rows()]
    return "\n".join(reversed(lines))


def render_ssyt(t: SSYT) -> str:
    if not t.rows:
        return "(empty)"
    return "\n".join(" ".join(map(str, r)) for r in t.rows)


def gt_to_json(g: GTPattern) -> list:
    return [list(r) for r in g.rows]


def gt_from_json(obj) -> GTPattern:
    return GTPattern(tuple(tuple(r) for r in obj))


def staircase_to_json(s: Staircase) -> list:
    return [list(c) for c in s.columns]


def staircase_from_json(obj) -> Staircase:
    return Staircase(tuple(tuple(c) for c in obj))


def ssyt_to_json(t: SSYT) -> list:
    return [list(r) for r in t.rows]


def ssyt_from_json(obj, shape: Partition | None = None) -> SSYT:
    rows = tuple(tuple(r) for r in obj)
    if shape is None:
        shape = Partition(tuple(len(r) for r in rows))
    return SSYT(shape, rows)
