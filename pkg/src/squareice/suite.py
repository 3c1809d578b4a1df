"""Batch verification driver: every identity over a box of partitions."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import fschur, lattice, shapes, yangbaxter
from .ring import render_canonical
from .shapes import Partition

WORKERS_ENV = "SQUAREICE_WORKERS"

Mutation = Optional[Tuple[str, str]]  # ("rect", "NW") or ("cross", "SW_SE")


def weight_tables(mutation: Mutation = None):
    """(rectilinear table, crossing table), with at most one entry shifted by +1."""
    rect, cross = dict(lattice.ICE_WEIGHTS), dict(yangbaxter.CROSSING_WEIGHTS)
    if mutation is None:
        return None, None
    kind, key = mutation
    if kind == "rect":
        return lattice.mutate_table(rect, lattice.Vertex[key]), None
    if kind == "cross":
        return None, lattice.mutate_table(cross, yangbaxter.Crossing[key])
    raise ValueError(f"unknown weight table {kind!r}")


def all_mutations() -> List[Tuple[str, str]]:
    return [("rect", v.name) for v in lattice.Vertex] + [("cross", c.name) for c in yangbaxter.Crossing]


@dataclass
class CheckRecord:
    name: str
    inputs: Dict
    passed: bool
    values: Dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        out = asdict(self)
        out["verdict"] = "PASS" if self.passed else "FAIL"
        return out


@dataclass
class Report:
    suite: str
    records: List[CheckRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def json_lines(self) -> List[str]:
        lines = [json.dumps(r.to_json(), sort_keys=True) for r in self.records]
        lines.append(json.dumps({"suite": self.suite, "overall": "PASS" if self.passed else "FAIL",
                                 "checks": len(self.records), "failed": [r.name for r in self.failures()]}))
        return lines


def _timed(fn: Callable[[], Tuple[bool, Dict]], name: str, inputs: Dict) -> CheckRecord:
    start = time.perf_counter()
    passed, values = fn()
    return CheckRecord(name, inputs, bool(passed), values, time.perf_counter() - start)


# -- individual checks (module level so they can cross process boundaries) ----------


def check_bijection(lam: Partition) -> CheckRecord:
    def run():
        gts = shapes.enumerate_gt(lam)
        stairs = shapes.enumerate_staircases(lam)
        via_gt = lattice.enumerate_states(lam, "via_gt")
        back = lattice.enumerate_states(lam, "backtrack")
        counts = {"gt": len(gts), "staircase": len(stairs), "via_gt": len(via_gt), "backtrack": len(back)}
        ok = len(set(counts.values())) == 1
        ok &= set(via_gt) == set(back)
        ok &= all(shapes.staircase_to_gt(shapes.gt_to_staircase(g)) == g for g in gts)
        ok &= {shapes.gt_to_staircase(g) for g in gts} == set(stairs)
        ok &= all(shapes.gt_to_staircase(shapes.staircase_to_gt(s)) == s for s in stairs)
        ok &= all(lattice.gt_to_state(lattice.state_to_gt(s), lam) == s for s in back)
        ok &= all(lattice.state_to_gt(lattice.gt_to_state(g, lam)) == g for g in gts)
        return ok, counts

    return _timed(run, f"bijection{lam}", {"lambda": list(lam.parts)})


def check_main(lam: Partition, mutation: Mutation = None) -> CheckRecord:
    rect, _ = weight_tables(mutation)

    def run():
        res = fschur.verify_main_theorem(lam, weights=rect)
        return res.passed, {"lhs": render_canonical(res.lhs), "rhs": render_canonical(res.rhs)}

    return _timed(run, f"main{lam}", {"lambda": list(lam.parts)})


def check_symmetry(lam: Partition, mutation: Mutation = None) -> CheckRecord:
    rect, _ = weight_tables(mutation)

    def run():
        z = lattice.partition_function(lam, weights=rect)
        reduced = z * lattice.x_delta(z.space) ** -1
        sym = lattice.is_x_symmetric(reduced)
        exchange = all(lattice.exchange_identity_holds(z, i) for i in range(1, lam.n))
        poly = (reduced * fschur.prefactor_a(lam, z.space)).is_polynomial()
        return sym and exchange and poly, {"symmetric": sym, "exchange": exchange, "polynomial": poly}

    return _timed(run, f"symmetry{lam}", {"lambda": list(lam.parts)})


def check_degree(lam: Partition) -> CheckRecord:
    def run():
        deg = lattice.partition_function(lam).x_degree()
        bound = lam.size + lam.n * (lam.n - 1) // 2
        return deg <= bound, {"degree": deg, "bound": bound}

    return _timed(run, f"degree{lam}", {"lambda": list(lam.parts)})


def check_yang_baxter(mutation: Mutation = None) -> CheckRecord:
    rect, cross = weight_tables(mutation)

    def run():
        results = yangbaxter.verify_star_triangle(rect_weights=rect, cross_weights=cross)
        failed = [r.sextuple.label() for r in results if not r.passed]
        return not failed, {"cases": len(results), "failed": failed}

    return _timed(run, "yang-baxter", {})


def check_vanishing(n: int, k: int, target: str) -> CheckRecord:
    def run():
        box = shapes.partitions_in_box(n, k)
        failed = []
        for lam in box:
            for mu in box:
                v = fschur.vanishing_check(lam, mu, target, m=n + k)
                if not v.passed:
                    failed.append(f"{lam}@{mu}")
        return not failed, {"pairs": len(box) ** 2, "failed": failed}

    return _timed(run, f"vanishing[{target}]", {"n": n, "box": k})


def expected_leading_coefficient(lam: Partition, avals: Sequence) -> Fraction:
    """1 / a^{(lam+rho)'} at numeric a."""
    denom = 1
    for k, e in enumerate(shapes.conjugate(lam.plus_rho()).parts, start=1):
        denom *= avals[k - 1] ** e
    return Fraction(1, 1) / denom


def check_interpolation(lam: Partition) -> CheckRecord:
    def run():
        z = lattice.partition_function(lam)
        f = z * lattice.x_delta(z.space) ** -1
        avals = fschur.interpolation_a_values(max(lam.n + lam.size, z.space.n_a))
        res = fschur.expand_in_factorial_basis(f, lam.n, lam.size, avals)
        want = {lam: expected_leading_coefficient(lam, avals)}
        got = res.nonzero()
        return got == want and res.reconstructs, {
            "coefficients": {str(mu): str(c) for mu, c in got.items()},
            "expected": {str(mu): str(c) for mu, c in want.items()},
        }

    return _timed(run, f"interpolation{lam}", {"lambda": list(lam.parts)})


def _run_task(task):
    fn, args = task
    return fn(*args)


def plan(n_max: int = 3, lam_max: int = 3, mutation: Mutation = None) -> List[Tuple[Callable, tuple]]:
    """Ordered list of (check, args)."""
    tasks: List[Tuple[Callable, tuple]] = []
    for n in range(1, n_max + 1):
        for lam in shapes.partitions_in_box(n, lam_max):
            tasks += [
                (check_bijection, (lam,)),
                (check_main, (lam, mutation)),
                (check_symmetry, (lam, mutation)),
                (check_degree, (lam,)),
            ]
    tasks.append((check_yang_baxter, (mutation,)))
    tasks += [(check_vanishing, (n_max, lam_max, t)) for t in ("z", "schur")]
    for n in range(1, min(n_max, 3) + 1):
        for lam in shapes.partitions_in_box(n, lam_max):
            tasks.append((check_interpolation, (lam,)))
    return tasks


def verify_all(n_max: int = 3, lam_max: int = 3, mutation: Mutation = None, workers: int | None = None) -> Report:
    """Run the whole suite; record order is the plan order regardless of workers."""
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    tasks = plan(n_max, lam_max, mutation)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_task, tasks))
    else:
        records = [_run_task(t) for t in tasks]
    name = f"all(n<={n_max}, lambda_1<={lam_max})" + (f" mutated {mutation[0]}:{mutation[1]}" if mutation else "")
    return Report(name, records)


def acceptance_partitions() -> List[Partition]:
    """n=1 with lambda_1<=5, n=2 with lambda_1<=4, n=3 with lambda_1<=3."""
    return [lam for n, k in ((1, 5), (2, 4), (3, 3)) for lam in shapes.partitions_in_box(n, k)]
