"""Equivariant graded traces of composite evaluations.

The semantic route to derivatives: evaluate a functor on a sum of marked
lines, let a permutation act, and read characters off the marker
monomial where every line appears exactly once.

For a graded space W with an operator h, the whole trace calculus only
needs the family pow_m(W, h) = twisted trace of h^m (the twist sends a
degree-d piece to degree m*d, with a sign (-1)^((m-1)d) in Koszul mode):
the trace of a permutation with cycle type mu acting on W^(tensor n)
intertwined with h per slot is the product of pow over the parts of mu.
Evaluations of a sequence then have traces

    trace = sum_k sum_{mu of k} chi_k(mu)/z_mu * prod_i pow_{mu_i},

and the same shape computes pow_m of an evaluation from pow of the
inputs, with the entry characters twisted — no induced matrices are ever
formed.  Marker bookkeeping uses square-free masks; dropping repeated
markers is exact for the extracted coefficients because a monomial with
a repeated marker can never multiply back into a square-free one.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .characters import GradedCharacter
from .exactpoly import MaskPoly, TPoly
from .partitions import Partition, centralizer_order, concat, partitions_of
from .symseq import SymSeq


class LinesPow:
    """Marked zero-degree lines permuted by a permutation of cycle type nu.

    pow_m is a sum over the m-cycles of the product of their markers: a
    line contributes to h^m only when its cycle length divides m, and any
    shorter cycle would repeat a marker.
    """

    def __init__(self, nu: Partition, first_marker: int = 0):
        self.by_length: dict[int, list[int]] = {}
        j = first_marker
        for part in nu:
            mask = 0
            for _ in range(part):
                mask |= 1 << j
                j += 1
            self.by_length.setdefault(part, []).append(mask)

    def pow(self, m: int) -> MaskPoly:
        return MaskPoly({(mask, 0): 1 for mask in self.by_length.get(m, [])})


class SpacePow:
    """A fixed graded space with the identity operator."""

    def __init__(self, X: TPoly, signed: bool):
        self.X = X
        self.signed = signed

    def pow(self, m: int) -> MaskPoly:
        return MaskPoly.from_tpoly(self.X.twist(m, self.signed))


class SumPow:
    """Direct sum: traces add."""

    def __init__(self, *parts):
        self.parts = parts

    def pow(self, m: int) -> MaskPoly:
        out = MaskPoly.zero()
        for p in self.parts:
            out = out + p.pow(m)
        return out


class InducedPow:
    """Evaluation of a sequence on an inner family, as a new pow family.

    pow_m(G(W)) = sum_k sum_{mu of k} chi_{G_k}(mu) twisted by m, over
    z_mu, times prod_i pow_{m * mu_i}(W): powers of an induced operator
    are induced from powers, so the recursion never leaves trace data.
    """

    def __init__(self, G: SymSeq, inner, signed: bool):
        if not G.complete:
            raise ValueError("trace recursion needs a complete sequence")
        self.G = G
        self.inner = inner
        self.signed = signed
        self._cache: dict[int, MaskPoly] = {}

    def pow(self, m: int) -> MaskPoly:
        if m not in self._cache:
            total = MaskPoly.zero()
            for k, chi in self.G.entries.items():
                for mu in partitions_of(k):
                    val = chi.values[mu]
                    if not val:
                        continue
                    term = MaskPoly.from_tpoly(
                        val.twist(m, self.signed).scale(Fraction(1, centralizer_order(mu)))
                    )
                    for part in mu:
                        term = term * self.inner.pow(m * part)
                        if not term:
                            break
                    total = total + term
            self._cache[m] = total
        return self._cache[m]


def trace_of(F: SymSeq, fam, signed: bool) -> MaskPoly:
    """Trace of the induced operator on the evaluation of F at the family."""
    if not F.complete:
        raise ValueError("trace evaluation needs a complete sequence")
    total = MaskPoly.zero()
    for k, chi in F.entries.items():
        for mu in partitions_of(k):
            val = chi.values[mu]
            if not val:
                continue
            term = MaskPoly.from_tpoly(val.scale(Fraction(1, centralizer_order(mu))))
            for part in mu:
                term = term * fam.pow(part)
                if not term:
                    break
            total = total + term
    return total


def multi_trace(F: SymSeq, slots: list[tuple[object, int]], signed: bool) -> MaskPoly:
    """Trace on the multilinear part of F with slot groups filled by families.

    slots = [(family_1, k_1), ..., (family_r, k_r)]: the entry of F on
    k = k_1 + ... + k_r letters is restricted to the product of symmetric
    groups permuting equal slots, slot group i is filled with k_i copies
    of family i, and coinvariants are taken by averaging over classes.
    """
    if not F.complete:
        raise ValueError("trace evaluation needs a complete sequence")
    k = sum(ki for _, ki in slots)
    chi = F.entry(k)
    if chi.is_zero():
        return MaskPoly.zero()
    total = MaskPoly.zero()
    for mus in iproduct(*[partitions_of(ki) for _, ki in slots]):
        val = chi.values[concat((), tuple(m for mu in mus for m in mu))]
        if not val:
            continue
        z = 1
        for mu in mus:
            z *= centralizer_order(mu)
        term = MaskPoly.from_tpoly(val.scale(Fraction(1, z)))
        for (fam, _), mu in zip(slots, mus):
            for part in mu:
                term = term * fam.pow(part)
                if not term:
                    break
            if not term:
                break
        total = total + term
    return total


def extract_value(tr: MaskPoly, nu: Partition) -> TPoly:
    """Character value at nu from the all-markers coefficient of a trace.

    With one marker per line, the coefficient of the square-free product
    of all markers in the trace of a permutation of cycle type nu equals
    the character value divided by the product of the parts (each cycle's
    marker product can be matched to a part in one cyclic order per part).
    """
    scale = 1
    for part in nu:
        scale *= part
    n = sum(nu)
    return tr.coeff_mask((1 << n) - 1).scale(scale)


def composite_derivatives(
    F: SymSeq,
    G: SymSeq,
    nmax: int,
    signed: bool = False,
    base: TPoly | None = None,
) -> SymSeq:
    """Derivative sequence of V -> F(G(base + V)), read off twisted traces.

    Entirely independent of the composition product: the composite is
    never expanded, only traced.
    """
    entries: dict[int, GradedCharacter] = {}
    for n in range(nmax + 1):
        vals: dict[Partition, TPoly] = {}
        for nu in partitions_of(n):
            fam = LinesPow(nu)
            if base is not None and base:
                fam = SumPow(SpacePow(base, signed), fam)
            tr = trace_of(F, InducedPow(G, fam, signed), signed)
            vals[nu] = extract_value(tr, nu)
        entries[n] = GradedCharacter(n, vals)
    return SymSeq(entries, bound=nmax)


def sequence_derivatives(
    A: SymSeq,
    nmax: int,
    signed: bool = False,
    base: TPoly | None = None,
) -> SymSeq:
    """Derivatives of the functor of a single sequence around a base point.

    With base 0 this inverts evaluation exactly and must return A itself;
    with a base space it computes the same thing as the combinatorial
    base-change formula, through traces instead.
    """
    entries: dict[int, GradedCharacter] = {}
    for n in range(nmax + 1):
        vals: dict[Partition, TPoly] = {}
        for nu in partitions_of(n):
            fam = LinesPow(nu)
            if base is not None and base:
                fam = SumPow(SpacePow(base, signed), fam)
            vals[nu] = extract_value(trace_of(A, fam, signed), nu)
        entries[n] = GradedCharacter(n, vals)
    return SymSeq(entries, bound=nmax)
