"""Star-triangle check for the diagonal crossing weights.

Both sides of the identity are small ice networks: one crossing of the strings
i and j next to two rectilinear oxygens on a single column.  String i runs
from the lower-left boundary (alpha) to the right boundary delta, string j
from the upper-left boundary (beta) to epsilon.  On the left-hand diagram the
crossing sits left of the column, on the right-hand diagram right of it.

Both sides are evaluated by the same engine, :func:`network_sum`, which
places one hydrogen on every internal edge bonded to either endpoint and keeps
assignments where every oxygen holds exactly two hydrogens.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .lattice import ICE_WEIGHTS, Vertex, WeightTable
from .ring import LaurentPoly, VarSpace, render_canonical

BOUNDARY_LABELS = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")

# Both sides live in x_1 = x_i, x_2 = x_j and a single column variable a_1.
STAR_SPACE = VarSpace(2, 1)
STRING_I, STRING_J = 1, 2


class Crossing(enum.Enum):
    """Bondings of a diagonal oxygen by the half-edges holding its hydrogens.

    The six weight pictures, left to right, are SW+NE, NW+SE, NW+NE, SW+SE,
    SE+NE and SW+NW (disk positions relative to the oxygen).
    """

    SW_NE = frozenset({"SW", "NE"})
    NW_SE = frozenset({"NW", "SE"})
    NW_NE = frozenset({"NW", "NE"})
    SW_SE = frozenset({"SW", "SE"})
    SE_NE = frozenset({"SE", "NE"})
    SW_NW = frozenset({"SW", "NW"})


def _inv_xi(space, i, j):
    return space.x(i, -1)


def _inv_xj(space, i, j):
    return space.x(j, -1)


def _inv_diff(space, i, j):
    return space.x(i, -1) - space.x(j, -1)


def _zero(space, i, j):
    return space.zero()


CROSSING_WEIGHTS = {
    Crossing.SW_NE: _inv_xi,
    Crossing.NW_SE: _inv_xj,
    Crossing.NW_NE: _inv_diff,
    Crossing.SW_SE: _zero,
    Crossing.SE_NE: _inv_xi,
    Crossing.SW_NW: _inv_xj,
}


def crossing_weight(c: Crossing, i: int, j: int, space: VarSpace = STAR_SPACE, weights=None) -> LaurentPoly:
    """Weight of a crossing where string ``i`` runs SW->NE and string ``j`` NW->SE."""
    return (weights or CROSSING_WEIGHTS)[c](space, i, j)


# -- generic network engine ------------------------------------------------------------


@dataclass(frozen=True)
class Site:
    """An oxygen in a network.

    ``ports`` maps a direction (N/S/E/W or SW/NW/NE/SE) to an edge name.
    Rectilinear sites carry the row variable of their string and the column
    index; crossings carry the pair of strings (SW->NE string, NW->SE string).
    """

    name: str
    kind: str
    ports: Tuple[Tuple[str, str], ...]
    string: int = 0
    column: int = 1
    strings: Tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class Network:
    sites: Tuple[Site, ...]
    boundary: Tuple[Tuple[str, str], ...]  # (boundary label, edge name)

    def edges(self) -> Dict[str, List[Tuple[str, str]]]:
        """edge name -> list of (site name, direction) endpoints."""
        out: Dict[str, List[Tuple[str, str]]] = {}
        for site in self.sites:
            for direction, edge in site.ports:
                out.setdefault(edge, []).append((site.name, direction))
        return out


@dataclass(frozen=True)
class Completion:
    bonds: Tuple[Tuple[str, FrozenSet[str]], ...]  # site name -> bonded directions
    weight: LaurentPoly


def _site_weight(site: Site, bonded: FrozenSet[str], space, rect_weights, cross_weights) -> LaurentPoly:
    if site.kind == "cross":
        i, j = site.strings
        return crossing_weight(Crossing(bonded), i, j, space, cross_weights)
    vertex = Vertex.from_bonds(*(d in bonded for d in "NSEW"))
    return (rect_weights or ICE_WEIGHTS)[vertex](space, site.string, site.column)


def network_completions(
    net: Network,
    present: FrozenSet[str],
    space: VarSpace = STAR_SPACE,
    rect_weights: WeightTable | None = None,
    cross_weights=None,
) -> List[Completion]:
    """All ways to finish the network given which boundary hydrogens are present."""
    edges = net.edges()
    boundary_edges = {edge: label for label, edge in net.boundary}
    internal = sorted(e for e, ends in edges.items() if len(ends) == 2)
    base: Dict[str, set] = {s.name: set() for s in net.sites}
    for edge, label in boundary_edges.items():
        (site, direction), = edges[edge]
        if label in present:
            base[site].add(direction)

    out = []
    for choice in itertools.product((0, 1), repeat=len(internal)):
        bonds = {k: set(v) for k, v in base.items()}
        for edge, side in zip(internal, choice):
            site, direction = edges[edge][side]
            bonds[site].add(direction)
        if any(len(b) != 2 for b in bonds.values()):
            continue
        weight = space.one()
        for site in net.sites:
            weight = weight * _site_weight(site, frozenset(bonds[site.name]), space, rect_weights, cross_weights)
        out.append(Completion(tuple((s.name, frozenset(bonds[s.name])) for s in net.sites), weight))
    return out


def network_sum(net: Network, present: FrozenSet[str], **kwargs) -> LaurentPoly:
    space = kwargs.get("space", STAR_SPACE)
    total = space.zero()
    for c in network_completions(net, present, **kwargs):
        total = total + c.weight
    return total


# Left diagram: crossing C, then the column with T (on string i) above B (on string j).
LEFT_DIAGRAM = Network(
    sites=(
        Site("C", "cross", (("SW", "alpha"), ("NW", "beta"), ("NE", "C-T"), ("SE", "C-B")), strings=(STRING_I, STRING_J)),
        Site("T", "rect", (("W", "C-T"), ("N", "gamma"), ("E", "delta"), ("S", "T-B")), string=STRING_I),
        Site("B", "rect", (("W", "C-B"), ("N", "T-B"), ("E", "epsilon"), ("S", "zeta")), string=STRING_J),
    ),
    boundary=tuple((label, label) for label in BOUNDARY_LABELS),
)

# Right diagram: the column first, T (on string j) above B (on string i), then the crossing.
RIGHT_DIAGRAM = Network(
    sites=(
        Site("T", "rect", (("W", "beta"), ("N", "gamma"), ("E", "T-C"), ("S", "T-B")), string=STRING_J),
        Site("B", "rect", (("W", "alpha"), ("N", "T-B"), ("E", "B-C"), ("S", "zeta")), string=STRING_I),
        Site("C", "cross", (("NW", "T-C"), ("SW", "B-C"), ("NE", "delta"), ("SE", "epsilon")), strings=(STRING_I, STRING_J)),
    ),
    boundary=tuple((label, label) for label in BOUNDARY_LABELS),
)


@dataclass(frozen=True)
class BoundarySextuple:
    present: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "present", frozenset(self.present))
        if not self.present <= set(BOUNDARY_LABELS) or len(self.present) != 3:
            raise ValueError(f"need exactly three of {BOUNDARY_LABELS}, got {sorted(self.present)}")

    @property
    def mask(self) -> int:
        """Bit k set when the k-th label of alpha..zeta carries a hydrogen."""
        return sum(1 << k for k, lab in enumerate(BOUNDARY_LABELS) if lab in self.present)

    @classmethod
    def from_mask(cls, mask: int) -> "BoundarySextuple":
        return cls(frozenset(lab for k, lab in enumerate(BOUNDARY_LABELS) if mask >> k & 1))

    def label(self) -> str:
        return ",".join(lab for lab in BOUNDARY_LABELS if lab in self.present)


def all_sextuples() -> List[BoundarySextuple]:
    return [BoundarySextuple(frozenset(c)) for c in itertools.combinations(BOUNDARY_LABELS, 3)]


def star_triangle_sides(b: BoundarySextuple, rect_weights=None, cross_weights=None) -> Tuple[LaurentPoly, LaurentPoly]:
    kw = dict(rect_weights=rect_weights, cross_weights=cross_weights)
    return network_sum(LEFT_DIAGRAM, b.present, **kw), network_sum(RIGHT_DIAGRAM, b.present, **kw)


@dataclass(frozen=True)
class CaseResult:
    sextuple: BoundarySextuple
    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "case": self.sextuple.mask,
            "boundary": self.sextuple.label(),
            "lhs": render_canonical(self.lhs),
            "rhs": render_canonical(self.rhs),
            "verdict": "PASS" if self.passed else "FAIL",
        }


def verify_star_triangle(cases: Sequence[BoundarySextuple] | None = None, rect_weights=None, cross_weights=None) -> List[CaseResult]:
    results = []
    for b in cases if cases is not None else all_sextuples():
        lhs, rhs = star_triangle_sides(b, rect_weights, cross_weights)
        results.append(CaseResult(b, lhs, rhs))
    return results
