"""V-paths and the chain complex generated by critical cells.

For a Morse matching, critical cells of each dimension form the basis of a
chain complex whose differential counts V-paths between critical cells
with multiplicative signs. Its construction checks d o d = 0 and, by
design, its homology agrees with the simplicial homology of the
underlying complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .chains import ChainComplex
from .complexes import Cell, Orientation, SimplicialComplex, hyperfaces, incidence
from .errors import NotMorseError
from .matchings import Matching, critical_cells, hasse, is_morse


@dataclass(frozen=True)
class VPath:
    """A V-path: cells of equal dimension, each consecutive pair distinct
    and jointly contained in the matched coface of the earlier one."""

    cells: tuple[Cell, ...]

    @property
    def start(self) -> Cell:
        return self.cells[0]

    @property
    def end(self) -> Cell:
        return self.cells[-1]

    @property
    def length(self) -> int:
        return len(self.cells) - 1

    @property
    def is_stationary(self) -> bool:
        return len(self.cells) == 1


def _as_cells(gamma: VPath | Iterable[Cell]) -> tuple[Cell, ...]:
    if isinstance(gamma, VPath):
        return gamma.cells
    return tuple(gamma)


def multiplicity(
    X: SimplicialComplex,
    gamma: VPath | Iterable[Cell],
    orientation: Orientation | None = None,
) -> int:
    """The sign a V-path transports orientation with, always +1 or -1.

    Each step sigma -> sigma' contributes
    -<d u, sigma> * <d u, sigma'> where u = sigma union sigma' is the
    matched coface of sigma (for cells of equal dimension the union is the
    only candidate, so no matching argument is needed). Stationary paths
    have multiplicity +1.
    """
    cells = _as_cells(gamma)
    if not cells:
        raise ValueError("a V-path has at least one cell")
    m = 1
    for a, b in zip(cells, cells[1:]):
        if len(a) != len(b):
            raise ValueError(f"cells {a} and {b} differ in dimension")
        if a == b:
            raise ValueError(f"consecutive cells repeat: {a}")
        u = tuple(sorted(set(a) | set(b)))
        if len(u) != len(a) + 1 or u not in X:
            raise ValueError(f"no common coface in X for step {a} -> {b}")
        m *= -incidence(u, a, orientation) * incidence(u, b, orientation)
    return m


def vpaths(
    X: SimplicialComplex, M: Matching, start: Cell, end: Cell
) -> list[VPath]:
    """All V-paths of M from start to end, by exhaustive walk.

    Requires a Morse matching (otherwise the walk could cycle). Paths are
    returned in depth-first discovery order; a stationary path is included
    when start == end.
    """
    if start not in X or end not in X:
        raise ValueError("start and end must be cells of X")
    if not is_morse(hasse(X), M):
        raise NotMorseError("matching has a closed V-path")
    found: list[VPath] = []
    path: list[Cell] = [start]

    def extensions(c: Cell) -> list[Cell]:
        tau = M.v(c)
        if tau is None:
            return []
        return [f for f in hyperfaces(tau) if f != c]

    stack = [iter(extensions(start))]
    if start == end:
        found.append(VPath((start,)))
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        path.append(nxt)
        if nxt == end:
            found.append(VPath(tuple(path)))
        stack.append(iter(extensions(nxt)))
    return found


def _signed_counts(
    X: SimplicialComplex,
    M: Matching,
    starts: Iterable[Cell],
    orientation: Orientation | None,
) -> dict[Cell, dict[Cell, int]]:
    """For each start cell, the map critical cell -> signed number of
    V-paths from the start to it. Memoized over the acyclic V-digraph."""
    memo: dict[Cell, dict[Cell, int]] = {}
    work = [(s, False) for s in starts]
    while work:
        c, expanded = work.pop()
        if not expanded and c in memo:
            continue
        tau = M.v(c)
        if tau is None:
            memo[c] = {c: 1} if not M.covers(c) else {}
            continue
        succs = [f for f in hyperfaces(tau) if f != c]
        if not expanded:
            work.append((c, True))
            work.extend((s, False) for s in succs if s not in memo)
            continue
        total: dict[Cell, int] = {}
        sign_c = -incidence(tau, c, orientation)
        for s in succs:
            step = sign_c * incidence(tau, s, orientation)
            for crit, n in memo[s].items():
                total[crit] = total.get(crit, 0) + step * n
        memo[c] = {crit: n for crit, n in total.items() if n}
    return memo


def path_counts_signed(
    X: SimplicialComplex,
    M: Matching,
    sigma_tilde: Cell,
    orientation: Orientation | None = None,
) -> dict[Cell, int]:
    """Signed V-path counts from sigma_tilde to every reachable critical
    cell of the same dimension (zero totals omitted)."""
    if sigma_tilde not in X:
        raise ValueError("sigma_tilde must be a cell of X")
    if not is_morse(hasse(X), M):
        raise NotMorseError("matching has a closed V-path")
    return dict(_signed_counts(X, M, [sigma_tilde], orientation)[sigma_tilde])


def differential_entry(
    X: SimplicialComplex,
    M: Matching,
    tau: Cell,
    sigma: Cell,
    orientation: Orientation | None = None,
) -> int:
    """The coefficient of critical cell sigma in the differential of
    critical cell tau, by literal V-path enumeration:
    sum over hyperfaces s of tau of <d tau, s> * sum of multiplicities of
    V-paths from s to sigma."""
    if M.covers(tau) or M.covers(sigma):
        raise ValueError("tau and sigma must both be critical")
    if len(tau) != len(sigma) + 1:
        raise ValueError("tau must have dimension one above sigma")
    total = 0
    for s in hyperfaces(tau):
        inc = incidence(tau, s, orientation)
        for gamma in vpaths(X, M, s, sigma):
            total += inc * multiplicity(X, gamma, orientation)
    return total


class MorseComplex(ChainComplex):
    """The critical-cell chain complex, with its origins attached."""

    def __init__(self, bases, matrices, complex: SimplicialComplex, matching: Matching):
        super().__init__(bases, matrices)
        self.complex = complex
        self.matching = matching


def thom_smale_complex(
    X: SimplicialComplex,
    M: Matching,
    orientation: Orientation | None = None,
) -> MorseComplex:
    """The chain complex on critical cells of a Morse matching.

    Bases are the critical cells in lexicographic order per dimension,
    differentials the signed V-path counts. Construction fails loudly if
    the matching is not Morse or the resulting boundaries do not square to
    zero.
    """
    if not is_morse(hasse(X), M):
        raise NotMorseError("matching has a closed V-path")
    crit = critical_cells(X, M)
    bases = {k: crit.get(k, ()) for k in range(X.dim + 1)}
    matrices: dict[int, list[list[int]]] = {}
    for k in range(1, X.dim + 1):
        rows, cols = bases[k - 1], bases[k]
        row_index = {c: i for i, c in enumerate(rows)}
        starts = sorted({s for tau in cols for s in hyperfaces(tau)})
        counts = _signed_counts(X, M, starts, orientation)
        mat = [[0] * len(cols) for _ in rows]
        for j, tau in enumerate(cols):
            acc: dict[Cell, int] = {}
            for s in hyperfaces(tau):
                inc = incidence(tau, s, orientation)
                for crit_cell, n in counts[s].items():
                    acc[crit_cell] = acc.get(crit_cell, 0) + inc * n
            for crit_cell, n in acc.items():
                if n:
                    mat[row_index[crit_cell]][j] = n
        matrices[k] = mat
    return MorseComplex(bases, matrices, complex=X, matching=M)


def reorient(X: SimplicialComplex, flips: Iterable[Cell]) -> dict[Cell, int]:
    """Orientation table flipping the listed cells of X.

    The result maps each flipped cell to -1; pass it as the orientation
    argument of incidence, boundary matrices, or any of the V-path
    functions. Homology is unchanged by any choice of flips.
    """
    table: dict[Cell, int] = {}
    for c in flips:
        if c not in X:
            raise ValueError(f"flip target {c} is not a cell of X")
        table[c] = -1
    return table
