"""Verification battery: every checkable identity, run two ways.

Each check pits independently implemented routes against each other on
seeded random instances and compares exactly — rational arithmetic end
to end, no tolerances.  A check record carries a stable name, a one-line
claim, the instance count, and a list of failures; failures embed the
generating cells and a reproduction command.  Reports contain no floats
and no timestamps, so a fixed ``RunConfig`` produces a byte-identical
report; wall-clock times are returned separately for console display
only.

The ``mutate`` flag is a self-test of the harness: it feeds a corrupted
composition product (a spurious two-letter summand) to every check that
compares the product against an independently computed reference.
Exactly those checks must then fail; checks that only relate the product
to itself (associativity, truncation identities) keep the honest product
and keep passing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from time import perf_counter

from .characters import GradedCharacter, induce_young
from .exactpoly import TPoly, dims_poly
from .functor import (
    co_cross_effect_eval,
    cross_effect_eval,
    dn_product_value,
    fgl_derivatives,
    layer_value_via_summands,
    pn_limit_value,
    tower_stage_square_value,
    truncation_value,
)
from .generate import (
    random_cells,
    random_homogeneous_cells,
    random_space,
    random_trivial_cells,
)
from .holim import Cell, cells_sequence, cells_to_json, t_n_oracle
from .partitions import bell_number, partitions_of, set_partition_count_check
from .symfun import RationalSeries, egf_compose
from .symseq import (
    SymSeq,
    TruncationError,
    compose,
    compose_plethysm,
    composition_summand,
    evaluate,
    shift_base,
    unit_seq,
)
from .trace import composite_derivatives

#: Bell numbers B_0..B_12; the classical values the counting identities hit.
BELL_FROZEN = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597)


@dataclass(frozen=True)
class RunConfig:
    """Knobs of a battery run.

    seed drives every generator; bound is the comparison window of the
    main chain-rule check (other checks pin the windows their claims
    state); sign_mode selects plain or Koszul-signed symmetry (or both);
    pairs scales instance counts; budget caps the approximation oracle.
    """

    seed: int = 2026
    bound: int = 6
    sign_mode: str = "both"
    pairs: int = 100
    budget: int = 200000

    def __post_init__(self):
        if self.sign_mode not in ("unsigned", "signed", "both"):
            raise ValueError("sign_mode must be 'unsigned', 'signed' or 'both'")
        if self.bound < 2:
            raise ValueError("bound must be at least 2")
        if self.pairs < 1 or self.budget < 1 or self.seed < 0:
            raise ValueError("seed, pairs and budget must be positive")

    def mode_counts(self, count: int) -> list[tuple[bool, int]]:
        """(signed?, instances) blocks: the full count in the primary mode
        plus a quarter-sized block in the other when running both."""
        if self.sign_mode == "unsigned":
            return [(False, count)]
        if self.sign_mode == "signed":
            return [(True, count)]
        return [(False, count), (True, max(count // 4, 5))]

    def alternate(self, i: int) -> bool:
        """Per-instance mode for checks that interleave the two."""
        if self.sign_mode == "unsigned":
            return False
        if self.sign_mode == "signed":
            return True
        return i % 2 == 1

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "bound": self.bound,
            "sign_mode": self.sign_mode,
            "pairs": self.pairs,
            "budget": self.budget,
        }


class Tally:
    """Running count of characters certified genuine across checks."""

    def __init__(self):
        self.count = 0
        self.violations: list[dict] = []

    def add_seq(self, seq: SymSeq, upto: int, check: str, failures: list, cfg: "RunConfig"):
        for n in range(upto + 1):
            try:
                chi = seq.entry(n)
            except TruncationError:  # narrower windows contribute what they know
                break
            self.count += 1
            if not chi.is_genuine():
                item = {
                    "check": check,
                    "detail": f"entry {n} has a negative or fractional Schur multiplicity",
                    "repro": _repro(cfg, check),
                }
                self.violations.append(item)
                failures.append(item)


def _rng(cfg: RunConfig, name: str) -> random.Random:
    # string seeding hashes via sha512, stable across processes
    return random.Random(f"{cfg.seed}:{name}")


def _repro(cfg: RunConfig, name: str) -> str:
    return f"functorcalc verify --seed {cfg.seed} --check {name}"


def _record(name: str, claim: str, instances: int, failures: list) -> dict:
    return {
        "check": name,
        "claim": claim,
        "instances": instances,
        "failures": failures,
        "status": "pass" if not failures else "fail",
    }


def _first_disagreement(lhs: SymSeq, rhs: SymSeq, upto: int) -> int | None:
    for n in range(upto + 1):
        if lhs.entry(n) != rhs.entry(n):
            return n
    return None


def _pair_failure(cfg: RunConfig, name: str, idx: int, signed: bool, f_cells, g_cells, detail: str) -> dict:
    return {
        "instance": idx,
        "signed": signed,
        "outer_cells": cells_to_json(f_cells),
        "inner_cells": cells_to_json(g_cells),
        "detail": detail,
        "repro": _repro(cfg, name),
    }


# ---------------------------------------------------------------------------
# the checks


def _check_chain_rule_zero_base(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "chain-rule-zero-base"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    for signed, count in cfg.mode_counts(cfg.pairs):
        for i in range(count):
            f_cells = random_cells(rng, cfg.bound)
            g_cells = random_cells(rng, cfg.bound)
            F, G = cells_sequence(f_cells), cells_sequence(g_cells)
            lhs = composite_derivatives(F, G, cfg.bound, signed)
            rhs = compose_fn(F, G, signed=signed, bound=cfg.bound)
            instances += 1
            bad = _first_disagreement(lhs, rhs, cfg.bound)
            if bad is not None:
                failures.append(_pair_failure(
                    cfg, name, i, signed, f_cells, g_cells,
                    f"derivative route and product route differ first at entry {bad}"))
            else:
                tally.add_seq(rhs, cfg.bound, name, failures, cfg)
    return _record(
        name,
        "derivative characters of a composite of reduced functors equal the "
        "composition product of the two derivative sequences",
        instances, failures)


def _check_chain_rule_general_base(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "chain-rule-general-base"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    window = 4
    main_count = max(cfg.pairs // 4, 25)
    for i in range(main_count):
        signed = cfg.alternate(i)
        f_cells = random_cells(rng, 5)
        g_cells = random_cells(rng, 5)
        F, G = cells_sequence(f_cells), cells_sequence(g_cells)
        X = random_space(rng, 2)
        lhs = composite_derivatives(F, G, window, signed, base=X)
        inner_value = evaluate(G, X, signed)
        outer_shift = shift_base(F, inner_value, signed)
        inner_shift = shift_base(G, X, signed)
        rhs = compose_fn(outer_shift, inner_shift.reduced_part(), signed=signed, bound=window)
        instances += 1
        bad = _first_disagreement(lhs, rhs, window)
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, g_cells,
                f"trace route and shifted product route differ first at entry {bad} "
                f"(base dims {X!r})"))
        else:
            tally.add_seq(rhs, window, name, failures, cfg)
    # coefficient form: re-expanding the composite around X is the composite
    # of the re-expansions
    for i in range(12):
        signed = cfg.alternate(i)
        f_cells = random_cells(rng, 3)
        g_cells = random_cells(rng, 3)
        F, G = cells_sequence(f_cells), cells_sequence(g_cells)
        X = random_space(rng, 2)
        shifted_composite = shift_base(compose_fn(F, G, signed=signed), X, signed)
        inner_value = evaluate(G, X, signed)
        rhs = compose_fn(shift_base(F, inner_value, signed),
                         shift_base(G, X, signed).reduced_part(),
                         signed=signed, bound=window)
        instances += 1
        bad = _first_disagreement(shifted_composite, rhs, window)
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i + main_count, signed, f_cells, g_cells,
                f"re-expanded composite and composite of re-expansions differ "
                f"first at entry {bad} (base dims {X!r})"))
    return _record(
        name,
        "around any base, derivatives of a composite equal the composition "
        "product of the base-shifted derivative sequences",
        instances, failures)


def _check_path_agreement(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "composition-path-agreement"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    window = 8
    for i in range(max(cfg.pairs // 2, 50)):
        signed = cfg.alternate(i)
        f_cells = random_cells(rng, 4)
        g_cells = random_cells(rng, 4)
        A, B = cells_sequence(f_cells), cells_sequence(g_cells)
        lhs = compose_fn(A, B, signed=signed, bound=window)
        rhs = compose_plethysm(A, B, signed=signed, bound=window)
        instances += 1
        bad = _first_disagreement(lhs, rhs, window)
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, g_cells,
                f"per-partition route and plethysm route differ first at entry {bad}"))
        else:
            tally.add_seq(lhs, window, name, failures, cfg)
    return _record(
        name,
        "the per-partition induction route and the symmetric-function "
        "plethysm route compute the same composition product",
        instances, failures)


def _check_unit_laws(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "composition-unit-laws"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    one = unit_seq()
    for i in range(20):
        signed = cfg.alternate(i)
        a_cells = random_cells(rng, cfg.bound)
        A = cells_sequence(a_cells)
        instances += 1
        left = compose_fn(A, one, signed=signed)
        right = compose_fn(one, A, signed=signed)
        if left != A or right != A:
            side = "right" if left != A else "left"
            failures.append(_pair_failure(
                cfg, name, i, signed, a_cells, [],
                f"composition with the one-letter identity on the {side} "
                f"changed the sequence"))
    return _record(
        name,
        "the one-letter identity sequence is a two-sided unit for the "
        "composition product",
        instances, failures)


def _check_associativity(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "composition-associativity"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    window = 6
    for i in range(12):
        signed = cfg.alternate(i)
        a_cells = random_cells(rng, 3)
        b_cells = random_cells(rng, 3)
        c_cells = random_cells(rng, 3)
        A, B, C = (cells_sequence(cs) for cs in (a_cells, b_cells, c_cells))
        lhs = compose(compose(A, B, signed=signed, bound=window), C, signed=signed, bound=window)
        rhs = compose(A, compose(B, C, signed=signed, bound=window), signed=signed, bound=window)
        instances += 1
        bad = _first_disagreement(lhs, rhs, window)
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, a_cells, b_cells,
                f"the two association orders differ first at entry {bad} "
                f"(third factor {cells_to_json(c_cells)!r})"))
    return _record(
        name,
        "the composition product is associative on reduced sequences",
        instances, failures)


def _check_faa_di_bruno(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "faa-di-bruno-dimensions"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    order = 10
    for i in range(8):
        a_cells = random_trivial_cells(rng, 5)
        b_cells = random_trivial_cells(rng, 5)
        A, B = cells_sequence(a_cells), cells_sequence(b_cells)
        composite = compose_fn(A, B, signed=False, bound=order)
        outer = RationalSeries([A.entry(n).dim_poly() for n in range(order + 1)])
        inner = RationalSeries([B.entry(n).dim_poly() for n in range(order + 1)])
        series = egf_compose(outer, inner)
        instances += 1
        mismatch = next(
            (n for n in range(order + 1) if composite.entry(n).dim_poly() != series.coeffs[n]),
            None)
        if mismatch is not None:
            failures.append(_pair_failure(
                cfg, name, i, False, a_cells, b_cells,
                f"graded dimension of the composite differs from the "
                f"exponential-series composite first at entry {mismatch}"))
        else:
            tally.add_seq(composite, order, name, failures, cfg)
    return _record(
        name,
        "graded dimensions of a composite follow composition of exponential "
        "generating functions",
        instances, failures)


def _check_set_partition_counts(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "set-partition-counts"
    failures: list = []
    instances = 0
    for n in range(13):
        instances += 1
        if bell_number(n) != BELL_FROZEN[n]:
            failures.append({
                "instance": n,
                "detail": f"recurrence value {bell_number(n)} differs from the "
                          f"frozen count {BELL_FROZEN[n]}",
                "repro": _repro(cfg, name),
            })
        if not set_partition_count_check(n):
            failures.append({
                "instance": n,
                "detail": "sum over partitions of n!/(automorphisms of the block "
                          "structure) missed the set-partition count",
                "repro": _repro(cfg, name),
            })
    return _record(
        name,
        "summand index sets of the composition product are counted by the "
        "Bell numbers",
        instances, failures)


def _check_partition_summands(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "partition-summand-derivatives"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    for i in range(max(cfg.pairs // 4, 25)):
        signed = cfg.alternate(i)
        n = rng.randrange(1, 6)
        classes = partitions_of(n)
        lam = classes[rng.randrange(len(classes))]
        f_cells = random_cells(rng, 5)
        g_cells = random_cells(rng, 5)
        F, G = cells_sequence(f_cells), cells_sequence(g_cells)
        nmax = min(n + 1, 5)
        derivs = fgl_derivatives(F, G, lam, nmax, signed)
        expected = SymSeq({n: composition_summand(F, G, lam, signed)}, bound=nmax)
        instances += 1
        bad = _first_disagreement(derivs, expected, nmax)
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, g_cells,
                f"derivatives of the {list(lam)!r}-summand functor differ from "
                f"the induced summand character first at entry {bad}"))
        else:
            tally.add_seq(derivs, nmax, name, failures, cfg)
    return _record(
        name,
        "each partition summand of the product is the full derivative "
        "sequence of its one-summand functor, homogeneous in its arity",
        instances, failures)


def _check_layer_decomposition(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "layer-decomposition"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    window = 5
    for i in range(12):
        signed = cfg.alternate(i)
        f_cells = random_cells(rng, window)
        g_cells = random_cells(rng, window)
        F, G = cells_sequence(f_cells), cells_sequence(g_cells)
        composite = compose_fn(F, G, signed=signed, bound=window)
        instances += 1
        bad = None
        for n in range(1, window + 1):
            total = GradedCharacter.zero(n)
            for lam in partitions_of(n):
                total = total + fgl_derivatives(F, G, lam, n, signed).entry(n)
            if total != composite.entry(n):
                bad = n
                break
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, g_cells,
                f"sum of summand derivative characters differs from the "
                f"product entry first at arity {bad}"))
        else:
            tally.add_seq(composite, window, name, failures, cfg)
    return _record(
        name,
        "each layer of a composite decomposes as the direct sum of its "
        "partition summands, summand characters computed by traces",
        instances, failures)


def _check_homogeneous_tower(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "homogeneous-tower-values"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    for i in range(10):
        signed = cfg.alternate(i)
        k = rng.randrange(1, 4)
        f_cells = random_homogeneous_cells(rng, k)
        g_cells = random_cells(rng, 4)
        F, G = cells_sequence(f_cells), cells_sequence(g_cells)
        X = random_space(rng, 2)
        instances += 1
        bad_detail = None
        for n in range(k, 7):
            composite = compose_fn(F, G, signed=signed, bound=n)
            stage = pn_limit_value(F, G, n, X, signed)
            stage_expected = evaluate(composite.truncate(n), X, signed)
            if stage != stage_expected:
                bad_detail = f"stage {n} value differs from the truncated product value"
                break
            layer = dn_product_value(F, G, n, X, signed)
            layer_expected = evaluate(composite.layer_part(n).truncate(n), X, signed)
            if layer != layer_expected:
                bad_detail = f"layer {n} value differs from the product layer value"
                break
            summed = layer_value_via_summands(F, G, n, X, signed)
            if summed != layer_expected:
                bad_detail = f"layer {n} summand-sum value differs from the product layer value"
                break
        if bad_detail is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, g_cells,
                bad_detail + f" (base dims {X!r})"))
    return _record(
        name,
        "for a homogeneous outer functor, tower stages computed as split "
        "limits over the coarsening poset match truncations of the product",
        instances, failures)


def _check_tower_stage_squares(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "tower-stage-squares"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    idx = 0
    for stage in (1, 2, 3):
        for _ in range(3):
            signed = cfg.alternate(idx)
            f_cells = random_cells(rng, 3)
            g_cells = random_cells(rng, 3)
            F, G = cells_sequence(f_cells), cells_sequence(g_cells)
            X = random_space(rng, 2)
            instances += 1
            value = tower_stage_square_value(F, G, stage, X, signed)
            expected = evaluate(compose_fn(F, G, signed=signed, bound=stage).truncate(stage), X, signed)
            if value != expected:
                failures.append(_pair_failure(
                    cfg, name, idx, signed, f_cells, g_cells,
                    f"stage-{stage} limit over the arrow diagram differs from "
                    f"the truncated product value (base dims {X!r})"))
            idx += 1
    # degenerate shapes: a linear outer functor collapses the diagram to one
    # corner; the identity inner functor gives plain truncation
    linear = cells_sequence([Cell((1,))])
    g_cells = random_cells(rng, 3)
    G = cells_sequence(g_cells)
    X = random_space(rng, 2)
    instances += 1
    if tower_stage_square_value(linear, G, 3, X, False) != evaluate(
            compose_fn(linear, G, signed=False, bound=3).truncate(3), X, False):
        failures.append(_pair_failure(
            cfg, name, idx, False, [Cell((1,))], g_cells,
            "linear outer functor: diagram value differs from the truncated product"))
    idx += 1
    f_cells = random_cells(rng, 3)
    F = cells_sequence(f_cells)
    instances += 1
    if tower_stage_square_value(F, linear, 2, X, False) != truncation_value(F, 2, X, False):
        failures.append(_pair_failure(
            cfg, name, idx, False, f_cells, [Cell((1,))],
            "identity inner functor: diagram value differs from plain truncation"))
    return _record(
        name,
        "tower stages of a composite through stage three arise as limits of "
        "the documented stage diagrams of smaller stages and layers",
        instances, failures)


def _check_truncation_identities(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "truncation-identities"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    for i in range(max(cfg.pairs // 2, 50)):
        signed = cfg.alternate(i)
        n = rng.randrange(1, 7)
        a_cells = random_cells(rng, 4)
        b_cells = random_cells(rng, 4)
        A, B = cells_sequence(a_cells), cells_sequence(b_cells)
        instances += 1
        full = compose(A, B, signed=signed, bound=n)
        left = compose(A.truncate(n), B, signed=signed, bound=n)
        right = compose(A, B.truncate(n), signed=signed, bound=n)
        bad = _first_disagreement(full, left, n)
        if bad is None:
            bad = _first_disagreement(full, right, n)
        if bad is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, a_cells, b_cells,
                f"truncating a factor at {n} changed the composite window "
                f"first at entry {bad}"))
    # a linear outer functor commutes with truncation on the nose
    for i in range(12):
        signed = cfg.alternate(i)
        n = rng.randrange(1, 7)
        lin_cells = [Cell((1,), sign=False, degree=rng.randrange(0, 2))]
        g_cells = random_cells(rng, 4)
        L, G = cells_sequence(lin_cells), cells_sequence(g_cells)
        instances += 1
        whole = compose(L, G.truncate(n), signed=signed)
        windowed = compose(L, G, signed=signed, bound=n)
        if whole.degree() > n or _first_disagreement(whole, windowed, n) is not None:
            failures.append(_pair_failure(
                cfg, name, i, signed, lin_cells, g_cells,
                f"linear outer functor does not commute with truncation at {n}"))
    return _record(
        name,
        "truncating the composite equals truncating either factor first, "
        "and a linear outer functor commutes with truncation exactly",
        instances, failures)


def _check_cross_effects(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "cross-effects"
    rng = _rng(cfg, name)
    failures: list = []
    instances = 0
    for i in range(24):
        signed = cfg.alternate(i)
        r = rng.randrange(1, 4)
        f_cells = random_cells(rng, 4)
        F = cells_sequence(f_cells)
        spaces = [random_space(rng, 2) for _ in range(r)]
        instances += 1
        lhs = cross_effect_eval(F, spaces, signed)
        rhs = co_cross_effect_eval(F, spaces, signed)
        if lhs != rhs:
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, [],
                f"{r}-variable cross effect and dual route disagree"))
            continue
        zeroed = list(spaces)
        zeroed[rng.randrange(r)] = TPoly.zero()
        if cross_effect_eval(F, zeroed, signed) != TPoly.zero():
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, [],
                f"{r}-variable cross effect fails to vanish on a zero slot"))
    # above the degree every cross effect vanishes
    for i in range(6):
        signed = cfg.alternate(i)
        f_cells = random_cells(rng, 2)
        F = cells_sequence(f_cells)
        spaces = [random_space(rng, 2) for _ in range(3)]
        instances += 1
        if cross_effect_eval(F, spaces, signed) != TPoly.zero():
            failures.append(_pair_failure(
                cfg, name, i, signed, f_cells, [],
                "3-variable cross effect of a degree-2 functor is nonzero"))
    return _record(
        name,
        "multilinear cross effects computed by inclusion-exclusion match "
        "the dual route and vanish beyond the degree",
        instances, failures)


#: Fixed instances for the approximation oracle: (label, cells, n, point dims).
ORACLE_INSTANCES: tuple = (
    ("identity", (Cell((1,)),), 1, (0,)),
    ("shifted-line", (Cell((1,), degree=1),), 1, (0, 1)),
    ("symmetric-square-vanishes", (Cell((2,)),), 1, (0,)),
    ("exterior-square-vanishes", (Cell((2,), sign=True),), 1, (0,)),
    ("tensor-square-vanishes", (Cell((1, 1)),), 1, (0,)),
    ("symmetric-cube-vanishes", (Cell((3,)),), 1, (0,)),
    ("exterior-cube-vanishes", (Cell((3,), sign=True),), 1, (0,)),
    ("hook-cell-vanishes", (Cell((1, 2)),), 1, (0,)),
    ("line-plus-square", (Cell((1,)), Cell((2,))), 1, (0,)),
    ("line-plus-shifted-tensor", (Cell((1,)), Cell((1, 1), degree=1)), 1, (0,)),
    ("symmetric-square-held", (Cell((2,)),), 2, (0, 0)),
    ("exterior-square-held", (Cell((2,), sign=True),), 2, (0, 1)),
    ("tensor-square-held", (Cell((1, 1)),), 2, (0,)),
    ("line-plus-exterior-held", (Cell((1,)), Cell((2,), sign=True)), 2, (0, 1)),
)


def _check_excisive_oracle(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "excisive-approximation-oracle"
    failures: list = []
    instances = 0
    for label, cells, n, degs in ORACLE_INSTANCES:
        instances += 1
        seq = cells_sequence(list(cells))
        point = dims_poly({d: degs.count(d) for d in set(degs)})
        expected_poly = evaluate(seq.truncate(n), point, signed=True)
        window = max(list(expected_poly.support()) + list(degs) + [0]) + 2
        out = t_n_oracle(list(cells), n, degs, window=window, max_iter=12, budget=cfg.budget)
        expected = {d: int(expected_poly.coeff(d)) for d in expected_poly.support() if d <= window}
        if out["stable"] != expected:
            failures.append({
                "instance": label,
                "cells": cells_to_json(list(cells)),
                "excision_degree": n,
                "point_degrees": list(degs),
                "detail": f"stable window dims {out['stable']!r} differ from the "
                          f"truncated evaluation {expected!r} "
                          f"(history {out['history']!r})",
                "repro": _repro(cfg, name),
            })
    return _record(
        name,
        "iterating the join-based approximation stabilizes on every window "
        "of degrees to the value of the truncated functor",
        instances, failures)


def _check_genuineness(cfg: RunConfig, compose_fn, tally: Tally) -> dict:
    name = "schur-genuineness"
    failures = [dict(v) for v in tally.violations]
    return {
        "check": name,
        "claim": "every character derived by the battery has nonnegative "
                 "integer multiplicities in the irreducible basis",
        "instances": tally.count,
        "failures": failures,
        "status": "pass" if not failures else "fail",
    }


# ---------------------------------------------------------------------------
# battery assembly

#: (name, runner, fed the mutated product when self-testing?)
CHECKS: tuple = (
    ("chain-rule-zero-base", _check_chain_rule_zero_base, True),
    ("chain-rule-general-base", _check_chain_rule_general_base, True),
    ("composition-path-agreement", _check_path_agreement, True),
    ("composition-unit-laws", _check_unit_laws, True),
    ("composition-associativity", _check_associativity, False),
    ("faa-di-bruno-dimensions", _check_faa_di_bruno, True),
    ("set-partition-counts", _check_set_partition_counts, False),
    ("partition-summand-derivatives", _check_partition_summands, False),
    ("layer-decomposition", _check_layer_decomposition, True),
    ("homogeneous-tower-values", _check_homogeneous_tower, True),
    ("tower-stage-squares", _check_tower_stage_squares, True),
    ("truncation-identities", _check_truncation_identities, False),
    ("cross-effects", _check_cross_effects, False),
    ("excisive-approximation-oracle", _check_excisive_oracle, False),
    ("schur-genuineness", _check_genuineness, False),
)

CHECK_NAMES: tuple = tuple(name for name, _, _ in CHECKS)

MUTATION_TARGETED: frozenset = frozenset(name for name, _, targeted in CHECKS if targeted)


def corrupted_compose(A: SymSeq, B: SymSeq, signed: bool = False, bound: int | None = None) -> SymSeq:
    """The honest product plus a spurious two-letter regular summand.

    The added character evaluates to the square of the argument, which
    is nonzero on every nonzero space in both sign modes, so every
    independent-route check is guaranteed to notice the corruption.
    """
    out = compose(A, B, signed=signed, bound=bound)
    if out.bound is not None and out.bound < 2:
        return out
    junk = induce_young(GradedCharacter.trivial(1), GradedCharacter.trivial(1))
    entries = dict(out.entries)
    entries[2] = entries[2] + junk if 2 in entries else junk
    return SymSeq(entries, bound=out.bound)


def run_battery(config: RunConfig, check_names=None, mutate: bool = False, log=None):
    """Run the battery; returns (report, wall_times).

    The report is a pure data dict (no floats, no clocks): a fixed
    config yields byte-identical serialized reports.  wall_times maps
    check name to seconds for console display.
    """
    if check_names:
        unknown = [c for c in check_names if c not in CHECK_NAMES]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        selected = [row for row in CHECKS if row[0] in set(check_names)]
    else:
        selected = list(CHECKS)
    tally = Tally()
    records = []
    times: dict[str, float] = {}
    for name, runner, targeted in selected:
        fn = corrupted_compose if (mutate and targeted) else compose
        start = perf_counter()
        record = runner(config, fn, tally)
        times[name] = perf_counter() - start
        records.append(record)
        if log is not None:
            log(f"{record['status'].upper():4s} {name} "
                f"({record['instances']} instances, {times[name]:.2f}s)")
    status = "pass" if all(r["status"] == "pass" for r in records) else "fail"
    report = {
        "config": config.to_json(),
        "mutated": bool(mutate),
        "checks": records,
        "status": status,
    }
    return report, times
