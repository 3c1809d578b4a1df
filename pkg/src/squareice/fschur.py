"""Factorial Schur functions, the a_mu specialisation, vanishing checks,
interpolation in the factorial Schur basis and the Z_lam = monomial * s_lam check."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .lattice import is_x_symmetric, partition_function, x_delta
from .ring import LaurentPoly, Monomial, VarSpace, render_canonical, substitute
from .shapes import Partition, content, conjugate, enumerate_ssyt, partitions_up_to


class SchurError(ValueError):
    pass


def _exact(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


@functools.lru_cache(maxsize=None)
def factorial_schur(lam: Partition, n: int | None = None, m: int | None = None) -> LaurentPoly:
    """s_lam(x|a) = sum over SSYT T of prod over cells (x_T - a_{T + content})."""
    n = lam.n if n is None else n
    m = n + lam.first if m is None else m
    if m < n + lam.first:
        raise SchurError(f"need at least {n + lam.first} a-variables, got {m}")
    space = VarSpace(n, m)
    total = space.zero()
    for t in enumerate_ssyt(lam, n):
        term = space.one()
        for i, j, v in t.cells():
            term = term * (space.x(v) - space.a(v + content(i, j)))
        total = total + term
    return total


def factorial_schur_value(lam: Partition, xs: Sequence, avals: Sequence) -> Fraction:
    """Numeric s_lam at x = xs, a = avals, straight from the tableau sum."""
    return _schur_value(lam, tuple(xs), tuple(avals))


@functools.lru_cache(maxsize=None)
def _tableau_indices(lam, n):
    """Per tableau, the (x-index, a-index) pair of every cell factor."""
    return tuple(
        tuple((v, v + content(i, j)) for i, j, v in t.cells()) for t in enumerate_ssyt(lam, n)
    )


@functools.lru_cache(maxsize=None)
def _schur_value(lam, xs, avals):
    total = 0
    for cells in _tableau_indices(lam, len(xs)):
        term = 1
        for xi, aj in cells:
            term *= xs[xi - 1] - avals[aj - 1]
        total += term
    return total


@dataclass(frozen=True)
class SpecializationPoint:
    mu: Partition
    n: int
    m: int

    def __post_init__(self):
        if self.mu.n > self.n:
            raise SchurError(f"{self.mu} has more than {self.n} parts")
        if self.n + self.mu.first > self.m:
            raise SchurError(f"a_mu for {self.mu} needs {self.n + self.mu.first} a-variables, have {self.m}")

    @property
    def indices(self) -> Tuple[int, ...]:
        """a-indices n + 1 - i + mu_i for i = 1..n."""
        mu = Partition.of(self.mu.parts, self.n)
        return tuple(self.n + 1 - i + mu[i - 1] for i in range(1, self.n + 1))

    def bindings(self) -> Dict:
        space = VarSpace(self.n, self.m)
        out = {}
        for i, idx in enumerate(self.indices, start=1):
            ea = [0] * self.m
            ea[idx - 1] = 1
            out[("x", i)] = Monomial(1, (0,) * space.n_x, tuple(ea))
        return out

    def numeric(self, avals: Sequence) -> Tuple:
        return tuple(avals[idx - 1] for idx in self.indices)


def a_mu(mu: Partition, n: int | None = None, m: int | None = None) -> SpecializationPoint:
    n = mu.n if n is None else n
    m = n + mu.first if m is None else m
    return SpecializationPoint(mu, n, m)


def prefactor_a(lam: Partition, space: VarSpace) -> LaurentPoly:
    """a^{(lam+rho)'}: a_k raised to the k-th part of the conjugate of lam + rho."""
    return space.monomial(ea=conjugate(lam.plus_rho()).parts)


def _diagonal_factors(lam: Partition, space: VarSpace):
    n = lam.n
    conj = conjugate(lam)
    for i, j in lam.cells():
        yield space.a(n + 1 - i + lam[i - 1]), space.a(n - conj[j - 1] + j)


def schur_diagonal(lam: Partition, space: VarSpace) -> LaurentPoly:
    """prod over cells (a_{n+1-i+lam_i} - a_{n-lam'_j+j})."""
    out = space.one()
    for hi, lo in _diagonal_factors(lam, space):
        out = out * (hi - lo)
    return out


def z_diagonal(lam: Partition, space: VarSpace) -> LaurentPoly:
    """prod over cells (a_{n+1-i+lam_i} / a_{n-lam'_j+j} - 1)."""
    out = space.one()
    for hi, lo in _diagonal_factors(lam, space):
        out = out * (hi * lo**-1 - 1)
    return out


@dataclass(frozen=True)
class VanishingVerdict:
    lam: Partition
    mu: Partition
    target: str
    value: LaurentPoly
    contained: bool
    expected: Optional[LaurentPoly]

    @property
    def vanishes(self) -> bool:
        return self.value.is_zero()

    @property
    def passed(self) -> bool:
        if not self.contained:
            return self.vanishes
        if self.expected is not None:
            return self.value == self.expected
        return True


def vanishing_check(lam: Partition, mu: Partition, target: str = "z", m: int | None = None, weights=None) -> VanishingVerdict:
    """Evaluate s_lam or Z_lam at x = a_mu.

    Expected: zero unless lam is contained in mu; the diagonal product when
    lam == mu; no claim otherwise.
    """
    n = max(lam.n, mu.n)
    lam, mu = Partition.of(lam.parts, n), Partition.of(mu.parts, n)
    if m is None:
        m = n + max(lam.first, mu.first)
    space = VarSpace(n, m)
    if target == "z":
        poly = partition_function(lam, m=m, weights=weights)
        diag = z_diagonal
    elif target == "schur":
        poly = factorial_schur(lam, n, m)
        diag = schur_diagonal
    else:
        raise ValueError(f"unknown target {target!r}")
    value = substitute(poly, a_mu(mu, n, m).bindings())
    expected = diag(lam, space) if lam == mu else None
    return VanishingVerdict(lam, mu, target, value, mu.contains(lam), expected)


@dataclass
class ExpansionResult:
    coeffs: Dict[Partition, Fraction]
    a_values: Tuple[Fraction, ...]
    reconstructs: bool = field(default=True)

    def nonzero(self) -> Dict[Partition, Fraction]:
        return {mu: c for mu, c in self.coeffs.items() if c}


def expand_in_factorial_basis(f: LaurentPoly, n: int, d: int, a_values: Sequence) -> ExpansionResult:
    """Coefficients c_mu with f = sum c_mu s_mu(x|a) at the numeric a = a_values.

    Solved by interpolation at the points x = a_mu in order of increasing
    |mu|: c_mu = (f(a_mu) - sum_{nu solved} c_nu s_nu(a_mu|a)) / s_mu(a_mu|a).
    """
    avals = tuple(_exact(v) for v in a_values)
    if len(set(avals)) != len(avals):
        raise SchurError("a-values must be distinct")
    if f.space.n_x != n:
        raise SchurError(f"f has {f.space.n_x} x-variables, expected {n}")
    if len(avals) < max(n + d, f.space.n_a):
        raise SchurError(f"need at least {max(n + d, f.space.n_a)} a-values, got {len(avals)}")
    if not is_x_symmetric(f):
        raise SchurError("f is not symmetric in x")
    if not f.is_x_polynomial():
        raise SchurError("f has negative x-exponents")
    if f.x_degree() > d:
        raise SchurError(f"f has x-degree {f.x_degree()} > {d}")

    a_bind = {("a", j): avals[j - 1] for j in range(1, f.space.n_a + 1)}
    f_num = substitute(f, a_bind)

    @functools.lru_cache(maxsize=None)
    def f_at(point):
        bind = dict(a_bind)
        bind.update({("x", i): v for i, v in enumerate(point, start=1)})
        return Fraction(substitute(f_num, bind))

    mus = partitions_up_to(n, d)
    coeffs: Dict[Partition, Fraction] = {}
    for mu in mus:
        point = a_mu(mu, n, len(avals)).numeric(avals)
        rest = sum((c * factorial_schur_value(nu, point, avals) for nu, c in coeffs.items()), Fraction(0))
        diag = factorial_schur_value(mu, point, avals)
        if diag == 0:
            raise SchurError(f"s_{mu}(a_{mu}) vanishes; a-values unsuitable")
        coeffs[mu] = (f_at(point) - rest) / diag

    ok = all(
        f_at(pt) == sum((c * factorial_schur_value(nu, pt, avals) for nu, c in coeffs.items()), Fraction(0))
        for pt in (a_mu(mu, n, len(avals)).numeric(avals) for mu in mus)
    )
    return ExpansionResult(coeffs, avals, ok)


def interpolation_a_values(k: int) -> List[int]:
    """1, 2, 5, 11, 23, 47, ...: 1, then 2, then a -> 2a + 1."""
    out = [1, 2]
    while len(out) < k:
        out.append(2 * out[-1] + 1)
    return out[:k]


@dataclass(frozen=True)
class MainTheoremResult:
    lam: Partition
    lhs: LaurentPoly  # Z_lam * a^{(lam+rho)'}
    rhs: LaurentPoly  # x^delta * s_lam(x|a)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def certificate(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "lhs": render_canonical(self.lhs),
            "rhs": render_canonical(self.rhs),
            "verdict": "PASS" if self.passed else "FAIL",
        }


def verify_main_theorem(lam: Partition, strategy: str = "via_gt", weights=None) -> MainTheoremResult:
    z = partition_function(lam, strategy=strategy, weights=weights)
    space = z.space
    lhs = z * prefactor_a(lam, space)
    rhs = x_delta(space) * factorial_schur(lam, lam.n, space.n_a)
    return MainTheoremResult(lam, lhs, rhs)
