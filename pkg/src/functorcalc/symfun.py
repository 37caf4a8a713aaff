"""Power-sum symmetric functions, plethysm, and generating functions.

A ``PSPoly`` is a polynomial in power sums p_m over any number of labelled
alphabets, with Laurent-polynomial coefficients in the grading variable.
Characters of symmetric groups pass to symmetric functions by the usual
transform chi -> sum_mu chi(mu) p_mu / z_mu and back by reading off p_mu
coefficients.  Plethysm substitutes one symmetric function into another;
its graded (signed) variant twists the inner function by
p_j -> p_{jm}, t -> (-1)^(m-1) t^m when substituted into p_m, which is the
rule matching sign-respecting permutation actions on tensor powers.
``RationalSeries`` holds truncated exponential generating functions and
composes them, the counting shadow of the composition product.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .characters import GradedCharacter
from .exactpoly import Scalar, TPoly
from .partitions import Partition, centralizer_order, partitions_of

Var = tuple[int, int]  # (alphabet, power-sum index)
Monomial = tuple[Var, ...]  # sorted, with repetition


def _mono_weight(mono: Monomial) -> int:
    return sum(m for _, m in mono)


class PSPoly:
    """Polynomial in power sums over labelled alphabets, {monomial: coefficient}."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[Monomial, TPoly] | None = None):
        self.c: dict[Monomial, TPoly] = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def zero(cls) -> "PSPoly":
        return cls()

    @classmethod
    def one(cls) -> "PSPoly":
        return cls({(): TPoly.one()})

    @classmethod
    def var(cls, m: int, alphabet: int = 0) -> "PSPoly":
        return cls({((alphabet, m),): TPoly.one()})

    @classmethod
    def power_sum(cls, mu: Partition, alphabet: int = 0) -> "PSPoly":
        return cls({tuple((alphabet, m) for m in mu): TPoly.one()})

    @classmethod
    def from_character(cls, chi: GradedCharacter, alphabet: int = 0) -> "PSPoly":
        """Characteristic transform: sum_mu chi(mu) p_mu / z_mu."""
        out: dict[Monomial, TPoly] = {}
        for mu, val in chi.values.items():
            if val:
                mono = tuple((alphabet, m) for m in mu)
                out[mono] = val.scale(Fraction(1, centralizer_order(mu)))
        return cls(out)

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        if not isinstance(other, PSPoly):
            return NotImplemented
        return self.c == other.c

    def __add__(self, other: "PSPoly") -> "PSPoly":
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, TPoly.zero()) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        res = PSPoly.__new__(PSPoly)
        res.c = out
        return res

    def __sub__(self, other: "PSPoly") -> "PSPoly":
        return self + other.scale(-1)

    def scale(self, a: Scalar | TPoly) -> "PSPoly":
        if isinstance(a, TPoly):
            return PSPoly({k: v * a for k, v in self.c.items()})
        return PSPoly({k: v.scale(a) for k, v in self.c.items()})

    def mul(self, other: "PSPoly", max_weight: int | None = None) -> "PSPoly":
        out: dict[Monomial, TPoly] = {}
        for m1, v1 in self.c.items():
            w1 = _mono_weight(m1)
            for m2, v2 in other.c.items():
                if max_weight is not None and w1 + _mono_weight(m2) > max_weight:
                    continue
                mono = tuple(sorted(m1 + m2))
                w = out.get(mono, TPoly.zero()) + v1 * v2
                if w:
                    out[mono] = w
                else:
                    out.pop(mono, None)
        res = PSPoly.__new__(PSPoly)
        res.c = out
        return res

    def __mul__(self, other: "PSPoly") -> "PSPoly":
        return self.mul(other)

    def twist(self, m: int, signed: bool) -> "PSPoly":
        """p_j -> p_{jm} on every alphabet; coefficients t -> (+-) t^m."""
        if m == 1:
            return self
        out: dict[Monomial, TPoly] = {}
        for mono, v in self.c.items():
            key = tuple(sorted((a, j * m) for a, j in mono))
            w = out.get(key, TPoly.zero()) + v.twist(m, signed)
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return PSPoly(out)

    def substitute(self, image, max_weight: int | None = None) -> "PSPoly":
        """Ring homomorphism sending each power-sum variable to image(var)."""
        out = PSPoly.zero()
        for mono, coeff in self.c.items():
            term = PSPoly({(): coeff})
            for v in mono:
                term = term.mul(image(v), max_weight)
                if term.is_zero():
                    break
            out = out + term
        return out

    def truncate_weight(self, max_weight: int) -> "PSPoly":
        return PSPoly({k: v for k, v in self.c.items() if _mono_weight(k) <= max_weight})

    def homogeneous_part(self, n: int) -> "PSPoly":
        return PSPoly({k: v for k, v in self.c.items() if _mono_weight(k) == n})

    def to_character(self, n: int, alphabet: int = 0) -> GradedCharacter:
        """Inverse characteristic transform on the weight-n single-alphabet part."""
        vals: dict[Partition, TPoly] = {}
        for mu in partitions_of(n):
            mono = tuple((alphabet, m) for m in mu)
            coeff = self.c.get(mono)
            if coeff:
                vals[mu] = coeff.scale(centralizer_order(mu))
        return GradedCharacter(n, vals)

    def coeff(self, mono: Monomial) -> TPoly:
        return self.c.get(tuple(sorted(mono)), TPoly.zero())

    def __repr__(self) -> str:
        return f"PSPoly({self.c!r})"


def plethysm(outer: PSPoly, inner: PSPoly, signed: bool = False, max_weight: int | None = None) -> PSPoly:
    """outer[inner]: substitute the inner function into every power sum of the outer.

    Alphabets of the outer function are all substituted the same way; the
    inner function keeps its own alphabets.  With a weight bound, monomials
    above the bound are dropped throughout — consistent because the inner
    function must have no constant term, so weights never decrease.
    """
    if () in inner.c:
        raise ValueError("inner function of a plethysm must have zero constant term")
    cache: dict[int, PSPoly] = {}

    def image(v: Var) -> PSPoly:
        _, m = v
        if m not in cache:
            tw = inner.twist(m, signed)
            cache[m] = tw.truncate_weight(max_weight) if max_weight is not None else tw
        return cache[m]

    return outer.substitute(image, max_weight)


class RationalSeries:
    """Truncated exponential generating function sum_n a_n x^n / n!.

    Coefficients a_n are Laurent polynomials in the grading variable; the
    truncation order is len(coeffs) - 1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[TPoly]):
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"RationalSeries({self.coeffs!r})"


def egf_compose(outer: RationalSeries, inner: RationalSeries) -> RationalSeries:
    """Composite series outer(inner(x)), requiring inner(0) = 0.

    Computed through ordinary coefficients: with I_j = inner_j / j! and
    powers of the inner series truncated at the common order, the n-th
    composite coefficient is n! * sum_k outer_k / k! * [x^n] inner(x)^k.
    """
    if inner.coeffs and inner.coeffs[0]:
        raise ValueError("inner series must have zero constant term")
    order = min(outer.order, inner.order)
    ordinary = [c.scale(Fraction(1, math.factorial(j))) for j, c in enumerate(inner.coeffs[: order + 1])]

    # powers[k][n] = [x^n] inner(x)^k
    powers: list[list[TPoly]] = [[TPoly.one()] + [TPoly.zero()] * order]
    for _ in range(order):
        prev = powers[-1]
        nxt = [TPoly.zero()] * (order + 1)
        for a in range(order + 1):
            if not prev[a]:
                continue
            for b in range(1, order + 1 - a):
                if ordinary[b]:
                    nxt[a + b] = nxt[a + b] + prev[a] * ordinary[b]
        powers.append(nxt)

    out = []
    for n in range(order + 1):
        acc = TPoly.zero()
        for k in range(0, n + 1 if n else 1):
            if k <= outer.order and outer.coeffs[k]:
                acc = acc + (outer.coeffs[k] * powers[k][n]).scale(Fraction(1, math.factorial(k)))
        out.append(acc.scale(math.factorial(n)))
    return RationalSeries(out)
