"""Symmetric group characters, exact and graded.

Irreducible characters are computed by border-strip recursion on beta
numbers; dimensions are independently available through hook products.
A ``GradedCharacter`` records, for one symmetric group, the graded trace
of each conjugacy class as a Laurent polynomial in t, and supports the
inner products, inductions and restrictions the composition product and
the derivative extraction are built from.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exactpoly import TPoly
from .partitions import (
    Partition,
    block_structure,
    centralizer_order,
    concat,
    partitions_of,
    sub_multisets,
    weight,
)


def _beta_set(lam: Partition) -> frozenset[int]:
    """First-column hook lengths of the partition, as a canonical beta set."""
    dec = tuple(sorted(lam, reverse=True))
    k = len(dec)
    beta = frozenset(part + (k - 1 - i) for i, part in enumerate(dec))
    return _unpad(beta)


def _unpad(beta: frozenset[int]) -> frozenset[int]:
    while 0 in beta:
        beta = frozenset(b - 1 for b in beta if b != 0)
    return beta


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: Partition) -> int:
    """Border-strip recursion: strips of length r are moves b -> b - r."""
    if not mu:
        return 1
    r = mu[-1]
    rest = mu[:-1]
    total = 0
    for b in beta:
        if b >= r and (b - r) not in beta:
            crossings = sum(1 for b2 in beta if b - r < b2 < b)
            term = _mn(_unpad(frozenset(beta - {b}) | {b - r}), rest)
            total += -term if crossings % 2 else term
    return total


def irreducible_character_value(lam: Partition, mu: Partition) -> int:
    """Character of the irreducible labelled by lam at the class of cycle type mu."""
    if weight(lam) != weight(mu):
        raise ValueError(f"weights differ: {lam} vs {mu}")
    return _mn(_beta_set(lam), mu)


def hook_dimension(lam: Partition) -> int:
    """Dimension of the irreducible via the hook product (independent of the recursion)."""
    dec = tuple(sorted(lam, reverse=True))
    n = weight(lam)
    cols = [0] * (dec[0] if dec else 0)
    for row in dec:
        for j in range(row):
            cols[j] += 1
    hooks = 1
    for i, row in enumerate(dec):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    return math.factorial(n) // hooks


def cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation given in one-line notation on 0..n-1."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parts.append(length)
    return tuple(sorted(parts))


class GradedCharacter:
    """Graded trace function on the conjugacy classes of one symmetric group.

    values[mu] is the trace of any permutation of cycle type mu, as a
    Laurent polynomial in the grading variable.  The zero group (n == 0)
    has a single class, the empty partition.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict[Partition, TPoly]):
        self.n = n
        self.values = {mu: values.get(mu, TPoly.zero()) for mu in partitions_of(n)}

    @classmethod
    def zero(cls, n: int) -> "GradedCharacter":
        return cls(n, {})

    @classmethod
    def trivial(cls, n: int, degree: int = 0) -> "GradedCharacter":
        one = TPoly.term(degree)
        return cls(n, {mu: one for mu in partitions_of(n)})

    @classmethod
    def sign(cls, n: int, degree: int = 0) -> "GradedCharacter":
        vals = {}
        for mu in partitions_of(n):
            s = (-1) ** (weight(mu) - len(mu))
            vals[mu] = TPoly.term(degree, s)
        return cls(n, vals)

    @classmethod
    def irreducible(cls, lam: Partition, degree: int = 0) -> "GradedCharacter":
        n = weight(lam)
        return cls(
            n,
            {mu: TPoly.term(degree, irreducible_character_value(lam, mu)) for mu in partitions_of(n)},
        )

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        self._check(other)
        return GradedCharacter(self.n, {mu: self.values[mu] + other.values[mu] for mu in self.values})

    def __sub__(self, other: "GradedCharacter") -> "GradedCharacter":
        self._check(other)
        return GradedCharacter(self.n, {mu: self.values[mu] - other.values[mu] for mu in self.values})

    def tensor(self, other: "GradedCharacter") -> "GradedCharacter":
        self._check(other)
        return GradedCharacter(self.n, {mu: self.values[mu] * other.values[mu] for mu in self.values})

    def scale(self, a) -> "GradedCharacter":
        if isinstance(a, TPoly):
            return GradedCharacter(self.n, {mu: self.values[mu] * a for mu in self.values})
        return GradedCharacter(self.n, {mu: self.values[mu].scale(a) for mu in self.values})

    def _check(self, other: "GradedCharacter") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched group sizes {self.n} and {other.n}")

    def dim_poly(self) -> TPoly:
        return self.values[(1,) * self.n] if self.n else self.values[()]

    def inner(self, other: "GradedCharacter") -> TPoly:
        """<chi, psi> = sum_mu chi(mu) psi(mu) / z_mu (characters here are rational)."""
        self._check(other)
        out = TPoly.zero()
        for mu in self.values:
            prod = self.values[mu] * other.values[mu]
            out = out + prod.scale(Fraction(1, centralizer_order(mu)))
        return out

    def multiplicity(self, lam: Partition) -> TPoly:
        return self.inner(GradedCharacter.irreducible(lam))

    def schur_decomposition(self) -> dict[Partition, TPoly]:
        """Multiplicity polynomial of every irreducible; complete for class functions."""
        return {lam: self.multiplicity(lam) for lam in partitions_of(self.n)}

    def is_genuine(self) -> bool:
        """True when every irreducible occurs with nonnegative integer graded multiplicity."""
        return all(m.is_nonneg_integral() or not m for m in self.schur_decomposition().values())

    def invariants_poly(self) -> TPoly:
        return self.inner(GradedCharacter.trivial(self.n))

    def value_on_parts(self, *parts_lists: Partition) -> TPoly:
        """Restriction to a product of smaller symmetric groups: trace at a block permutation."""
        return self.values[concat((), tuple(p for ps in parts_lists for p in ps))]

    def __repr__(self) -> str:
        return f"GradedCharacter(n={self.n}, values={self.values!r})"


def induce_young(chi1: GradedCharacter, chi2: GradedCharacter) -> GradedCharacter:
    """Induction of an outer tensor product along a two-block parabolic subgroup.

    (Ind chi1 x chi2)(rho) = sum over splittings rho = alpha + beta (as
    multisets) of z_rho / (z_alpha z_beta) * chi1(alpha) * chi2(beta).
    """
    a, b = chi1.n, chi2.n
    n = a + b
    vals: dict[Partition, TPoly] = {}
    for rho in partitions_of(n):
        z_rho = centralizer_order(rho)
        acc = TPoly.zero()
        for alpha, beta in sub_multisets(rho, a):
            coeff = Fraction(z_rho, centralizer_order(alpha) * centralizer_order(beta))
            acc = acc + (chi1.values[alpha] * chi2.values[beta]).scale(coeff)
        vals[rho] = acc
    return GradedCharacter(n, vals)


def induce_young_many(chis: list[GradedCharacter]) -> GradedCharacter:
    out = GradedCharacter(0, {(): TPoly.one()})
    for chi in chis:
        out = induce_young(out, chi)
    return out


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    return {
        (lam, mu): irreducible_character_value(lam, mu)
        for lam in partitions_of(n)
        for mu in partitions_of(n)
    }
