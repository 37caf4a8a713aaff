"""Seeded construction of random verification instances.

Every randomized check draws its inputs here, so the shapes produced in
this module delimit what the battery actually exercises.  Two constraints
drive the choices:

* Instances must be genuine: every entry is the character of an honest
  permutation module (a sum of row-tabloid cells, optionally sign
  twisted), so Schur multiplicities are nonnegative integers by
  construction and the realization layer can rebuild the same functor
  from the identical cell list.
* Instances must stay small: per-entry dimensions are capped, internal
  degrees stay in a narrow band (mostly 0 and 1, occasionally 2), and
  high arities only use the single-row cell, so batteries of a hundred
  pairs finish in seconds.

All generators take an explicit ``random.Random`` and are deterministic
functions of its state.
"""

from __future__ import annotations

import random

from .exactpoly import TPoly
from .holim import Cell, cells_sequence
from .partitions import multinomial
from .symseq import SymSeq

#: Compositions allowed per arity.  Cell dimension is the multinomial
#: coefficient of the composition, so these keep every entry at dim <= 3.
_SMALL_CELLS: dict[int, tuple[tuple[int, ...], ...]] = {
    1: ((1,),),
    2: ((2,), (1, 1)),
    3: ((3,), (1, 2)),
}

MAX_ENTRY_DIM = 3


def allowed_compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """Compositions available to the generator at arity n."""
    if n < 1:
        raise ValueError("arity must be positive")
    return _SMALL_CELLS.get(n, ((n,),))


def cell_dim(alpha: tuple[int, ...]) -> int:
    """Dimension of the row-tabloid module of the composition."""
    return multinomial(tuple(alpha))


def _random_degree(rng: random.Random) -> int:
    roll = rng.random()
    if roll < 0.45:
        return 0
    if roll < 0.9:
        return 1
    return 2


def random_entry_cells(rng: random.Random, n: int, max_dim: int = MAX_ENTRY_DIM) -> list[Cell]:
    """Random nonzero cell list for a single arity, total dim <= max_dim."""
    cells: list[Cell] = []
    total = 0
    options = allowed_compositions(n)
    while True:
        alpha = options[rng.randrange(len(options))]
        d = cell_dim(alpha)
        if total + d > max_dim:
            break
        cells.append(Cell(alpha, sign=rng.random() < 0.5, degree=_random_degree(rng)))
        total += d
        if rng.random() < 0.6:
            break
    return cells


def random_cells(
    rng: random.Random,
    max_degree: int,
    density: float = 0.5,
    max_dim: int = MAX_ENTRY_DIM,
) -> list[Cell]:
    """Random reduced cell functor with entries up to the given arity.

    Each arity from 1 to max_degree is populated independently with
    probability ``density``; the result is never empty (a lone linear
    cell is the fallback), so generated functors are genuine, reduced
    and nonzero.
    """
    cells: list[Cell] = []
    for n in range(1, max_degree + 1):
        if rng.random() < density:
            cells.extend(random_entry_cells(rng, n, max_dim))
    if not cells:
        cells.append(Cell((1,), sign=False, degree=_random_degree(rng)))
    return cells


def random_seq(rng: random.Random, max_degree: int, density: float = 0.5) -> SymSeq:
    """Random reduced genuine sequence (the character of `random_cells`)."""
    return cells_sequence(random_cells(rng, max_degree, density))


def random_pair(rng: random.Random, max_degree: int, density: float = 0.5) -> tuple[SymSeq, SymSeq]:
    """Independent random reduced pair (outer, inner)."""
    return random_seq(rng, max_degree, density), random_seq(rng, max_degree, density)


def random_homogeneous_cells(rng: random.Random, n: int, max_dim: int = MAX_ENTRY_DIM) -> list[Cell]:
    """Random nonzero cell list concentrated in a single arity."""
    cells = random_entry_cells(rng, n, max_dim)
    if not cells:
        cells = [Cell(allowed_compositions(n)[0], sign=rng.random() < 0.5, degree=_random_degree(rng))]
    return cells


def random_space(rng: random.Random, max_total: int = 2, degrees: tuple[int, ...] = (0, 1)) -> TPoly:
    """Random nonzero graded space with total dimension <= max_total."""
    total = rng.randrange(1, max_total + 1)
    coeffs: dict[int, int] = {}
    for _ in range(total):
        d = degrees[rng.randrange(len(degrees))]
        coeffs[d] = coeffs.get(d, 0) + 1
    return TPoly(coeffs)


def random_trivial_cells(rng: random.Random, max_degree: int, max_dim: int = MAX_ENTRY_DIM) -> list[Cell]:
    """Random reduced functor built from single-row cells only.

    Single-row cells carry the trivial action, so the entry characters
    are constant on classes and the graded dimensions follow the plain
    exponential-generating-function calculus.
    """
    cells: list[Cell] = []
    for n in range(1, max_degree + 1):
        if rng.random() < 0.6:
            for _ in range(rng.randrange(1, max_dim + 1)):
                cells.append(Cell((n,), sign=False, degree=_random_degree(rng)))
    if not cells:
        cells.append(Cell((1,)))
    return cells
