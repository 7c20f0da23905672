"""Gaussian elimination of unit pivots inside an integer chain complex.

Eliminating a basis pair (lower, upper) with pivot +-1 removes one
generator from two consecutive degrees and replaces the boundary in the
upper degree by eps - gamma * pivot**-1 * delta, where the pivot's row and
column are deleted. The degree above only loses the row of the upper
generator and the degree below only loses the column of the lower one.
The result is again a chain complex with the same homology.

A matching is Morse exactly when every elimination order over its pairs
runs to completion, and then every order yields the same reduced complex
because surviving labels keep their identity and order.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, NamedTuple, Sequence

from .chains import ChainComplex, Label
from .errors import EliminationError, NotMorseError
from .matchings import Matching, Pair, hasse, is_morse


class EliminationStep(NamedTuple):
    lower: Label  # generator of degree i-1 (a row of the degree-i boundary)
    upper: Label  # generator of degree i (a column of the same matrix)


def _locate(C: ChainComplex, step: EliminationStep) -> tuple[int, int, int]:
    """Degree of the upper generator plus the row/column indices."""
    lower, upper = step
    for i in range(1, C.top_dim + 1):
        if upper in C.basis(i):
            if lower not in C.basis(i - 1):
                raise ValueError(
                    f"{lower!r} is not a generator one degree below {upper!r}"
                )
            return i, C.basis(i - 1).index(lower), C.basis(i).index(upper)
    raise ValueError(f"{upper!r} is not a generator of any positive degree")


def gaussian_eliminate(C: ChainComplex, step: EliminationStep | Pair) -> ChainComplex:
    """Eliminate one (lower, upper) pair; the pivot must be +1 or -1."""
    step = EliminationStep(*step)
    i, r, c = _locate(C, step)
    mat = C.boundary(i)
    pivot = mat[r][c]
    if pivot not in (1, -1):
        raise EliminationError(
            f"pivot <d {step.upper!r}, {step.lower!r}> = {pivot} is not invertible",
            step=0,
            pair=tuple(step),
            pivot=pivot,
        )
    bases = {k: list(C.basis(k)) for k in range(C.top_dim + 1)}
    del bases[i][c]
    del bases[i - 1][r]
    matrices = {k: C.boundary(k) for k in range(1, C.top_dim + 1)}
    # eps - gamma * pivot^-1 * delta on the surviving block; pivot^-1 = pivot
    new = []
    for a, row in enumerate(mat):
        if a == r:
            continue
        coeff = row[c] * pivot
        new.append(
            [row[b] - coeff * mat[r][b] for b in range(len(row)) if b != c]
        )
    matrices[i] = new
    if i + 1 <= C.top_dim:
        upper_mat = matrices[i + 1]
        matrices[i + 1] = upper_mat[:c] + upper_mat[c + 1:]
    if i - 1 >= 1:
        matrices[i - 1] = [row[:r] + row[r + 1:] for row in matrices[i - 1]]
    return ChainComplex(bases, matrices)


def eliminate_sequence(
    C: ChainComplex, M: Matching, order: Sequence[Pair] | None = None
) -> ChainComplex:
    """Eliminate every pair of M in the given order (default: sorted pairs).

    Raises EliminationError carrying the 0-based step index, the pair, and
    the pivot value when a step finds a non-invertible pivot.
    """
    pairs = M.pairs() if order is None else tuple(order)
    if sorted(pairs) != sorted(M.pairs()):
        raise ValueError("order must be a permutation of the matching's pairs")
    current = C
    for idx, (sigma, tau) in enumerate(pairs):
        try:
            current = gaussian_eliminate(current, EliminationStep(sigma, tau))
        except EliminationError as exc:
            raise EliminationError(
                f"step {idx}: {exc.args[0]}",
                step=idx,
                pair=(sigma, tau),
                pivot=exc.pivot,
            ) from None
    return current


class OrdersResult(NamedTuple):
    agree: bool                      # every tested order succeeded, same result
    orders_tested: int
    exhaustive: bool
    reduced: ChainComplex | None     # the common reduction when agree
    failure: EliminationError | None  # first failure encountered, if any
    failing_order: tuple[Pair, ...] | None


def _iter_orders(
    pairs: tuple[Pair, ...], max_orders: int, seed: int
) -> tuple[bool, Iterable[tuple[Pair, ...]]]:
    if len(pairs) <= 8:
        return True, itertools.permutations(pairs)
    rng = random.Random(seed)

    def sample():
        yield pairs
        for _ in range(max_orders - 1):
            order = list(pairs)
            rng.shuffle(order)
            yield tuple(order)

    return False, sample()


def all_orders_agree(
    C: ChainComplex, M: Matching, max_orders: int = 100, seed: int = 0
) -> OrdersResult:
    """Try elimination orders and compare outcomes.

    Exhaustive over all |M|! permutations for |M| <= 8, otherwise the
    sorted order plus seeded random shuffles, max_orders in total.
    """
    pairs = M.pairs()
    exhaustive, orders = _iter_orders(pairs, max_orders, seed)
    reference: ChainComplex | None = None
    tested = 0
    for order in orders:
        tested += 1
        try:
            reduced = eliminate_sequence(C, M, order)
        except EliminationError as exc:
            return OrdersResult(False, tested, exhaustive, None, exc, tuple(order))
        if reference is None:
            reference = reduced
        elif reduced != reference:
            return OrdersResult(False, tested, exhaustive, None, None, tuple(order))
    return OrdersResult(True, tested, exhaustive, reference, None, None)


class MorseOrdersVerdict(NamedTuple):
    morse: bool
    all_orders_succeed: bool  # no tested order hit a non-invertible pivot
    consistent: bool          # the two verdicts coincide, as they must
    orders: OrdersResult


def morse_iff_all_orders(
    X, M: Matching, max_orders: int = 100, seed: int = 0
) -> MorseOrdersVerdict:
    """Check the equivalence 'Morse matching == every order eliminates'.

    Runs both sides independently: acyclicity of the matched Hasse diagram
    on one side, elimination over orders of the simplicial chain complex on
    the other.
    """
    from .chains import chain_complex

    morse = is_morse(hasse(X), M)
    orders = all_orders_agree(chain_complex(X), M, max_orders=max_orders, seed=seed)
    succeed = orders.failure is None
    return MorseOrdersVerdict(morse, succeed, morse == succeed, orders)
