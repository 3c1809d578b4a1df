"""Square ice on an n x m grid under the lambda-boundary condition.

Each oxygen (vertex) is bonded to exactly two of the four hydrogens around it.
A vertex is stored by the set of directions of its bonded hydrogens.  Row 1 is
the top row, column 1 the leftmost column.  Boundary hydrogens sit on the
whole left and right edges and on the top edge except at the columns
``top_row(lam)``; the bottom edge carries none.  Boundary hydrogens bond to
their adjacent oxygen.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Mapping, Tuple

from .ring import LaurentPoly, VarSpace, permute_x, transposition
from .shapes import GTPattern, Partition, ShapeError, enumerate_gt, top_row


class IceError(ValueError):
    pass


class Vertex(enum.Enum):
    """The six admissible bondings, named by their bonded directions."""

    NS = "NS"
    NE = "NE"
    NW = "NW"
    SE = "SE"
    SW = "SW"
    EW = "EW"

    @property
    def bonds(self) -> FrozenSet[str]:
        return frozenset(self.value)

    @classmethod
    def from_bonds(cls, north: bool, south: bool, east: bool, west: bool) -> "Vertex":
        key = "N" * north + "S" * south + "E" * east + "W" * west
        try:
            return cls(key)
        except ValueError:
            raise IceError(f"oxygen bonded to {key or 'nothing'}: need exactly two hydrogens") from None

    @property
    def N(self):
        return "N" in self.value

    @property
    def S(self):
        return "S" in self.value

    @property
    def E(self):
        return "E" in self.value

    @property
    def W(self):
        return "W" in self.value


WeightRule = Callable[[VarSpace, int, int], LaurentPoly]
WeightTable = Mapping[Vertex, WeightRule]


def _vertical(space: VarSpace, i: int, j: int) -> LaurentPoly:
    return space.x(i) * space.a(j, -1)


def _north_west(space: VarSpace, i: int, j: int) -> LaurentPoly:
    return space.x(i) * space.a(j, -1) - 1


def _unit(space: VarSpace, i: int, j: int) -> LaurentPoly:
    return space.one()


ICE_WEIGHTS: Dict[Vertex, WeightRule] = {
    Vertex.NS: _vertical,
    Vertex.NW: _north_west,
    Vertex.NE: _unit,
    Vertex.SE: _unit,
    Vertex.SW: _unit,
    Vertex.EW: _unit,
}


def _shifted(rule, space, i, j):
    return rule(space, i, j) + 1


def mutate_table(table: Mapping, key) -> dict:
    """Copy of ``table`` with entry ``key`` replaced by (entry + 1); for negative controls."""
    out = dict(table)
    out[key] = functools.partial(_shifted, table[key])
    return out


def vertex_weight(c: Vertex, i: int, j: int, space: VarSpace, weights: WeightTable | None = None) -> LaurentPoly:
    return (weights or ICE_WEIGHTS)[c](space, i, j)


@dataclass(frozen=True)
class BoundarySpec:
    n: int
    m: int
    top_gaps: FrozenSet[int]

    def __post_init__(self):
        if len(self.top_gaps) != self.n or not all(1 <= j <= self.m for j in self.top_gaps):
            raise IceError(f"need {self.n} top gaps within 1..{self.m}, got {sorted(self.top_gaps)}")

    @classmethod
    def for_partition(cls, lam: Partition, m: int | None = None) -> "BoundarySpec":
        if m is None:
            m = lam.first + lam.n
        if m < lam.first + lam.n:
            raise IceError(f"{m} columns cannot hold the boundary of {lam}")
        return cls(lam.n, m, frozenset(top_row(lam)))


@dataclass(frozen=True)
class IceState:
    grid: Tuple[Tuple[Vertex, ...], ...]

    def __post_init__(self):
        grid = tuple(tuple(Vertex(v) if not isinstance(v, Vertex) else v for v in row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        if not grid or not grid[0] or len({len(r) for r in grid}) != 1:
            raise IceError("grid must be a nonempty rectangle")
        n, m = len(grid), len(grid[0])
        for i in range(n):
            if not grid[i][0].W or not grid[i][m - 1].E:
                raise IceError(f"row {i + 1}: side hydrogens must bond to the end oxygens")
            for j in range(m - 1):
                if grid[i][j].E == grid[i][j + 1].W:
                    raise IceError(f"horizontal edge ({i + 1},{j + 1})-({i + 1},{j + 2}) not singly bonded")
        for i in range(n - 1):
            for j in range(m):
                if grid[i][j].S == grid[i + 1][j].N:
                    raise IceError(f"vertical edge below ({i + 1},{j + 1}) not singly bonded")
        if any(v.S for v in grid[-1]):
            raise IceError("bottom boundary carries no hydrogen")

    @property
    def n(self) -> int:
        return len(self.grid)

    @property
    def m(self) -> int:
        return len(self.grid[0])

    def top_gaps(self) -> Tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.grid[0], start=1) if not v.N)

    def satisfies(self, boundary: BoundarySpec) -> bool:
        return (self.n, self.m) == (boundary.n, boundary.m) and set(self.top_gaps()) == boundary.top_gaps


# -- bijection with GT patterns -------------------------------------------------


def state_to_gt(s: IceState) -> GTPattern:
    """Row 1 = top gaps; row i = columns whose vertical hydrogen between rows
    i-1 and i is bonded to the oxygen above."""
    rows = [s.top_gaps()]
    for i in range(1, s.n):
        rows.append(tuple(j for j, v in enumerate(s.grid[i - 1], start=1) if v.S))
    try:
        return GTPattern(tuple(rows))
    except ShapeError as exc:
        raise IceError(f"state does not give a strict GT pattern: {exc}") from exc


def gt_to_state(g: GTPattern, lam: Partition, m: int | None = None) -> IceState:
    boundary = BoundarySpec.for_partition(lam, m)
    if set(g.rows[0]) != boundary.top_gaps:
        raise IceError(f"GT top row {g.rows[0]} differs from {top_row(lam)}")
    n, m = boundary.n, boundary.m
    # up[k]: columns where the hydrogen between rows k and k+1 bonds upward
    up = [set(r) for r in g.rows] + [set()]
    grid = []
    for i in range(1, n + 1):
        row = []
        west = True
        for j in range(1, m + 1):
            north = j not in up[i - 1]
            south = j in up[i]
            east = 2 - north - south - west
            if east not in (0, 1):
                raise IceError(f"cannot bond oxygen ({i},{j})")
            row.append(Vertex.from_bonds(north, south, bool(east), west))
            west = not east
        if west:
            raise IceError(f"row {i}: right boundary hydrogen left unbonded")
        grid.append(tuple(row))
    return IceState(tuple(grid))


# -- enumeration --------------------------------------------------------------------


def _states_via_gt(lam: Partition, m: int | None) -> List[IceState]:
    return [gt_to_state(g, lam, m) for g in enumerate_gt(lam)]


def _states_backtrack(lam: Partition, m: int | None) -> List[IceState]:
    boundary = BoundarySpec.for_partition(lam, m)
    n, m = boundary.n, boundary.m
    grid: List[List[Vertex]] = [[None] * m for _ in range(n)]
    out = []

    def place(pos):
        if pos == n * m:
            out.append(IceState(tuple(tuple(r) for r in grid)))
            return
        i, j = divmod(pos, m)
        north = (j + 1) not in boundary.top_gaps if i == 0 else not grid[i - 1][j].S
        west = True if j == 0 else not grid[i][j - 1].E
        for south in ((False,) if i == n - 1 else (False, True)):
            for east in ((True,) if j == m - 1 else (False, True)):
                if north + south + east + west != 2:
                    continue
                grid[i][j] = Vertex.from_bonds(north, south, east, west)
                place(pos + 1)
        grid[i][j] = None

    place(0)
    return out


def enumerate_states(lam: Partition, strategy: str = "via_gt", m: int | None = None) -> List[IceState]:
    """All ice states with the lambda-boundary condition.

    ``via_gt`` maps the GT enumeration through :func:`gt_to_state`;
    ``backtrack`` fills the grid cell by cell and never looks at GT patterns.
    """
    if strategy in ("via_gt", "gt"):
        return _states_via_gt(lam, m)
    if strategy == "backtrack":
        return _states_backtrack(lam, m)
    raise ValueError(f"unknown strategy {strategy!r}")


# -- weights and the partition function -----------------------------------------------


def state_weight(s: IceState, weights: WeightTable | None = None) -> LaurentPoly:
    space = VarSpace(s.n, s.m)
    total = space.one()
    for i, row in enumerate(s.grid, start=1):
        for j, v in enumerate(row, start=1):
            w = vertex_weight(v, i, j, space, weights)
            if w != 1:
                total = total * w
    return total


@functools.lru_cache(maxsize=None)
def _cached_z(lam: Partition, m: int | None, strategy: str) -> LaurentPoly:
    return _sum_weights(enumerate_states(lam, strategy, m), lam, m, None)


def _sum_weights(states, lam, m, weights) -> LaurentPoly:
    space = VarSpace(lam.n, m if m is not None else lam.first + lam.n)
    total = space.zero()
    for s in states:
        total = total + state_weight(s, weights)
    return total


def partition_function(
    lam: Partition, m: int | None = None, strategy: str = "via_gt", weights: WeightTable | None = None
) -> LaurentPoly:
    """Z_lam(x|a) as a Laurent polynomial in x_1..x_n, a_1..a_m."""
    if weights is None:
        return _cached_z(lam, m, strategy)
    return _sum_weights(enumerate_states(lam, strategy, m), lam, m, weights)


def x_delta(space: VarSpace) -> LaurentPoly:
    """x^delta = x_2 x_3^2 ... x_n^(n-1)."""
    return space.monomial(ex=tuple(range(space.n_x)))


def is_x_symmetric(p: LaurentPoly) -> bool:
    n = p.space.n_x
    return all(permute_x(p, transposition(n, i, i + 1)) == p for i in range(1, n))


def exchange_identity_holds(z: LaurentPoly, i: int) -> bool:
    """(1/x_{i+1}) Z(.., x_i, x_{i+1}, ..) == (1/x_i) Z(.., x_{i+1}, x_i, ..)."""
    space = z.space
    swapped = permute_x(z, transposition(space.n_x, i, i + 1))
    return z * space.x(i + 1, -1) == swapped * space.x(i, -1)


# -- rendering and serialisation --------------------------------------------------------


def render_state(s: IceState) -> str:
    """ASCII drawing: ``O`` oxygens, ``*`` hydrogens placed next to their bonded oxygen.

    Between horizontally adjacent oxygens ``*--`` means the hydrogen bonds to
    the left one and ``--*`` to the right one.  Between rows, the line under an
    oxygen shows ``*`` when it holds the vertical hydrogen, ``|`` otherwise.
    """
    lines = []

    def col_line(chars):
        return "".join(" " + c + "  " for c in chars).rstrip()

    lines.append(col_line(["*" if v.N else " " for v in s.grid[0]]))
    for i, row in enumerate(s.grid):
        text = "*" if row[0].W else " "
        for j, v in enumerate(row):
            text += "O"
            if j + 1 < len(row):
                text += "*--" if v.E else "--*"
        text += "*" if row[-1].E else " "
        lines.append(text)
        if i + 1 < len(s.grid):
            lines.append(col_line(["*" if v.S else "|" for v in row]))
            lines.append(col_line(["*" if v.N else "|" for v in s.grid[i + 1]]))
    return "\n".join(lines)


def state_to_json(s: IceState) -> dict:
    return {"n": s.n, "m": s.m, "grid": [[v.value for v in row] for row in s.grid]}


def state_from_json(obj: Mapping) -> IceState:
    state = IceState(tuple(tuple(Vertex(v) for v in row) for row in obj["grid"]))
    if (state.n, state.m) != (obj["n"], obj["m"]):
        raise IceError("grid dimensions disagree with n, m")
    return state
