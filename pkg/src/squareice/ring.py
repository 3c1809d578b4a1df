"""Exact multivariate Laurent polynomials in two alphabets x_1..x_n, a_1..a_m.

Polynomials are immutable and sparse: a dict from exponent pairs ``(ex, ea)``
to nonzero coefficients.  Coefficients are Python ints; substituting rational
values may introduce ``fractions.Fraction`` coefficients, which are normalised
back to ints whenever the denominator is 1.

Variables are addressed as ``("x", i)`` or ``("a", j)`` with 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Key = Tuple[Exponents, Exponents]
Coef = Union[int, Fraction]
Var = Tuple[str, int]


class SpaceMismatchError(ValueError):
    """Arithmetic between polynomials living in different variable spaces."""


class SubstitutionError(ValueError):
    """Invalid variable binding (unknown variable, or zero raised to a negative power)."""


def _norm(c) -> Coef:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an exact rational, got {c!r}")
    return c if isinstance(c, (int, Fraction)) else Fraction(c)


def _pow(c: Coef, e: int) -> Coef:
    if e >= 0:
        return c**e
    if c == 0:
        raise SubstitutionError("zero raised to a negative power")
    return _norm(Fraction(1) / Fraction(c) ** (-e))


@dataclass(frozen=True)
class VarSpace:
    """Sizes of the row alphabet (x) and the column alphabet (a)."""

    n_x: int
    n_a: int

    def __post_init__(self):
        if self.n_x < 1 or self.n_a < 1:
            raise ValueError(f"variable counts must be positive, got {self}")

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def const(self, c: Coef) -> "LaurentPoly":
        return LaurentPoly(self, {self._unit_key(): c})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def x(self, i: int, power: int = 1) -> "LaurentPoly":
        self._check("x", i)
        ex = [0] * self.n_x
        ex[i - 1] = power
        return LaurentPoly(self, {(tuple(ex), (0,) * self.n_a): 1})

    def a(self, j: int, power: int = 1) -> "LaurentPoly":
        self._check("a", j)
        ea = [0] * self.n_a
        ea[j - 1] = power
        return LaurentPoly(self, {((0,) * self.n_x, tuple(ea)): 1})

    def monomial(self, ex: Sequence[int] = (), ea: Sequence[int] = (), coef: Coef = 1) -> "LaurentPoly":
        """Monomial with exponent vectors zero-padded to the space dimensions."""
        ex = tuple(ex) + (0,) * (self.n_x - len(ex))
        ea = tuple(ea) + (0,) * (self.n_a - len(ea))
        if len(ex) != self.n_x or len(ea) != self.n_a:
            raise ValueError("exponent vector longer than the variable space")
        return LaurentPoly(self, {(ex, ea): coef})

    def _unit_key(self) -> Key:
        return ((0,) * self.n_x, (0,) * self.n_a)

    def _check(self, kind: str, idx: int) -> None:
        bound = {"x": self.n_x, "a": self.n_a}.get(kind)
        if bound is None or not 1 <= idx <= bound:
            raise SubstitutionError(f"unknown variable {kind}{idx} in {self}")


@dataclass(frozen=True)
class Monomial:
    coef: Coef
    ex: Exponents
    ea: Exponents

    def __post_init__(self):
        if self.coef == 0:
            raise ValueError("monomial coefficient must be nonzero")


def _order_key(key: Key):
    ex, ea = key
    return (sum(ex) + sum(ea), ex + ea)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over a fixed :class:`VarSpace`."""

    __slots__ = ("space", "_terms", "_hash")

    def __init__(self, space: VarSpace, terms: Mapping[Key, Coef]):
        clean = {}
        for (ex, ea), c in terms.items():
            if len(ex) != space.n_x or len(ea) != space.n_a:
                raise ValueError(f"exponent lengths {len(ex)},{len(ea)} do not match {space}")
            c = _norm(c)
            if c:
                clean[(tuple(ex), tuple(ea))] = c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[Monomial]:
        """Terms in canonical order: total degree, then lex on (ex, ea)."""
        for key in sorted(self._terms, key=_order_key):
            yield Monomial(self._terms[key], key[0], key[1])

    def items(self):
        return self._terms.items()

    def coefficient(self, ex: Sequence[int], ea: Sequence[int]) -> Coef:
        return self._terms.get((tuple(ex), tuple(ea)), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(k == self.space._unit_key() for k in self._terms)

    def constant_value(self) -> Coef:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms.get(self.space._unit_key(), 0)

    def is_polynomial(self) -> bool:
        """True when no exponent (x or a) is negative."""
        return all(min(ex + ea, default=0) >= 0 for ex, ea in self._terms)

    def is_x_polynomial(self) -> bool:
        return all(min(ex, default=0) >= 0 for ex, _ in self._terms)

    def x_degree(self) -> int:
        """Largest total x-degree of a term; -1 for the zero polynomial."""
        return max((sum(ex) for ex, _ in self._terms), default=-1)

    def single_term(self) -> Monomial:
        if len(self._terms) != 1:
            raise ValueError(f"expected a single term, got {len(self._terms)}")
        (ex, ea), c = next(iter(self._terms.items()))
        return Monomial(c, ex, ea)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.space != self.space:
                raise SpaceMismatchError(f"{self.space} vs {other.space}")
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.space.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.space, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (ex1, ea1), c1 in self._terms.items():
            for (ex2, ea2), c2 in other._terms.items():
                key = (
                    tuple(u + v for u, v in zip(ex1, ex2)),
                    tuple(u + v for u, v in zip(ea1, ea2)),
                )
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(self.space, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            m = self.single_term()
            return LaurentPoly(
                self.space,
                {(tuple(u * e for u in m.ex), tuple(u * e for u in m.ea)): _pow(m.coef, e)},
            )
        result = self.space.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        """Division by a monomial or a nonzero rational scalar only."""
        if isinstance(other, LaurentPoly):
            return self * other**-1
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self * _pow(_norm(other), -1)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.space == other.space and self._terms == other._terms
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.space, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({render_canonical(self)!r})"

    def __str__(self):
        return render_canonical(self)


def arith(op: str, p: LaurentPoly, q: LaurentPoly | None = None) -> LaurentPoly:
    """Functional front end for ``add``, ``sub``, ``mul`` and ``neg``."""
    if op == "neg":
        return -p
    if q is None:
        raise ValueError(f"{op} needs two operands")
    if p.space != q.space:
        raise SpaceMismatchError(f"{p.space} vs {q.space}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def _as_binding(value):
    if isinstance(value, LaurentPoly):
        value = value.single_term()
    if isinstance(value, Monomial):
        if value.coef == 0:
            raise SubstitutionError("monomial binding with zero coefficient")
        return value
    if isinstance(value, Rational) and not isinstance(value, bool):
        return _norm(value)
    raise SubstitutionError(f"cannot bind a variable to {value!r}")


def substitute(p: LaurentPoly, bind: Mapping[Var, object]):
    """Substitute monomials or exact rationals for variables.

    Monomial bindings (given as :class:`Monomial` or single-term
    :class:`LaurentPoly`) must live in ``p.space``.  When every variable of the
    space is bound to a rational the result is a rational number, otherwise a
    :class:`LaurentPoly` in the same space.
    """
    space = p.space
    xb: dict = {}
    ab: dict = {}
    for (kind, idx), value in bind.items():
        space._check(kind, idx)
        b = _as_binding(value)
        if isinstance(b, Monomial) and (len(b.ex), len(b.ea)) != (space.n_x, space.n_a):
            raise SubstitutionError("monomial binding from a different variable space")
        (xb if kind == "x" else ab)[idx - 1] = b

    out: dict = {}
    for (ex, ea), c in p.items():
        new_ex = list(ex)
        new_ea = list(ea)
        for orig, vec, table in ((ex, new_ex, xb), (ea, new_ea, ab)):
            for pos, b in table.items():
                # bindings are simultaneous: read exponents from the original term
                e = orig[pos]
                if e == 0:
                    continue
                vec[pos] -= e
                if isinstance(b, Monomial):
                    c = c * _pow(b.coef, e)
                    for k, f in enumerate(b.ex):
                        new_ex[k] += f * e
                    for k, f in enumerate(b.ea):
                        new_ea[k] += f * e
                else:
                    c = c * _pow(b, e)
        key = (tuple(new_ex), tuple(new_ea))
        out[key] = out.get(key, 0) + c
    result = LaurentPoly(space, out)

    fully_numeric = (
        len(xb) == space.n_x
        and len(ab) == space.n_a
        and not any(isinstance(b, Monomial) for b in (*xb.values(), *ab.values()))
    )
    return result.constant_value() if fully_numeric else result


def permute_x(p: LaurentPoly, sigma: Sequence[int]) -> LaurentPoly:
    """Relabel x_i -> x_{sigma[i-1]} (sigma is a 1-based permutation list)."""
    n = p.space.n_x
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{list(sigma)} is not a permutation of 1..{n}")
    out = {}
    for (ex, ea), c in p.items():
        new_ex = [0] * n
        for i, e in enumerate(ex):
            new_ex[sigma[i] - 1] = e
        out[(tuple(new_ex), ea)] = c
    return LaurentPoly(p.space, out)


def transposition(n: int, i: int, j: int) -> list:
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[j - 1] = j, i
    return sigma


def embed(p: LaurentPoly, space: VarSpace) -> LaurentPoly:
    """View ``p`` in a larger space by zero-padding exponent vectors."""
    if space.n_x < p.space.n_x or space.n_a < p.space.n_a:
        raise SpaceMismatchError(f"cannot embed {p.space} into {space}")
    px = space.n_x - p.space.n_x
    pa = space.n_a - p.space.n_a
    return LaurentPoly(space, {(ex + (0,) * px, ea + (0,) * pa): c for (ex, ea), c in p.items()})


def product(factors: Iterable[LaurentPoly], space: VarSpace) -> LaurentPoly:
    out = space.one()
    for f in factors:
        out = out * f
    return out


def _render_term(m: Monomial) -> str:
    factors = []
    for name, vec in (("x", m.ex), ("a", m.ea)):
        for k, e in enumerate(vec, start=1):
            if e == 1:
                factors.append(f"{name}{k}")
            elif e:
                factors.append(f"{name}{k}^{e}")
    if not factors:
        return str(m.coef)
    body = "*".join(factors)
    return body if m.coef == 1 else f"{m.coef}*{body}"


def render_canonical(p: LaurentPoly) -> str:
    """Deterministic text form, e.g. ``-1 + x1*a1^-1``; equal polys render equally."""
    if p.is_zero():
        return "0"
    return " + ".join(_render_term(m) for m in p.terms())


def to_json(p: LaurentPoly) -> dict:
    return {
        "nx": p.space.n_x,
        "na": p.space.n_a,
        "terms": [{"c": str(m.coef), "x": list(m.ex), "a": list(m.ea)} for m in p.terms()],
    }


def from_json(obj: Mapping) -> LaurentPoly:
    space = VarSpace(int(obj["nx"]), int(obj["na"]))
    terms: dict = {}
    for t in obj["terms"]:
        key = (tuple(int(e) for e in t["x"]), tuple(int(e) for e in t["a"]))
        if key in terms:
            raise ValueError(f"duplicate term {key}")
        terms[key] = _norm(Fraction(t["c"]))
    return LaurentPoly(space, terms)
