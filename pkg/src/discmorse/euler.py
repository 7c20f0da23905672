"""Euler chains realized by complete matchings on the Hasse diagram.

A complete matching covers every cell. Joining the barycenters of each
matched pair, oriented from the odd-dimensional cell to the even one,
gives a 1-chain on the barycentric subdivision whose boundary is the
alternating vertex chain sum((-1)^dim(sigma) * b_sigma). Such a chain
exists only when the Euler characteristic is zero, since a complete
matching forces equally many even and odd cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .chains import chain_complex
from .complexes import Cell, SimplicialComplex, Subdivision, barycentric_subdivision
from .errors import MatchingError
from .homology import cycle_class
from .matchings import HasseDiagram, Matching, Pair


def complete_matching(H: HasseDiagram) -> Matching | None:
    """A matching covering every cell, or None when none exists.

    Cells split by dimension parity into the two sides of a bipartite
    graph; augmenting paths (Kuhn's algorithm, iterative) grow a maximum
    matching, and completeness is checked at the end. Unequal parity
    counts, i.e. nonzero Euler characteristic, fail immediately.
    """
    X = H.complex
    evens = [c for c in X.all_cells() if len(c) % 2 == 1]  # even dim = odd size
    odds = [c for c in X.all_cells() if len(c) % 2 == 0]
    if len(evens) != len(odds):
        return None
    neighbors = {c: H.down(c) + H.up(c) for c in evens}
    match_of: dict[Cell, Cell] = {}  # odd cell -> even cell

    for start in evens:
        # iterative DFS for an augmenting path from this uncovered even cell
        parent: dict[Cell, Cell] = {}
        stack = [start]
        visited: set[Cell] = set()
        augmented = False
        while stack and not augmented:
            even = stack.pop()
            for odd in neighbors[even]:
                if odd in visited:
                    continue
                visited.add(odd)
                parent[odd] = even
                owner = match_of.get(odd)
                if owner is None:
                    # flip the alternating path back to the start
                    while odd is not None:
                        prev_even = parent[odd]
                        next_odd = match_of.get(prev_even)
                        match_of[odd] = prev_even
                        match_of[prev_even] = odd
                        odd = next_odd
                    augmented = True
                    break
                stack.append(owner)
        if not augmented:
            return None
    pairs = []
    for odd in odds:
        even = match_of[odd]
        lower, upper = (even, odd) if len(even) < len(odd) else (odd, even)
        pairs.append((lower, upper))
    return Matching(pairs)


@dataclass(frozen=True)
class EulerChain:
    """An integer 1-chain of barycenter segments, named by original cells.

    Segments are (from_cell, to_cell, multiplicity) with from and to
    comparable cells of different dimension; storage is canonical: merged,
    zero-free, from < to in the face order, sorted.
    """

    segments: tuple[tuple[Cell, Cell, int], ...]

    @classmethod
    def from_segments(
        cls, segments: Iterable[tuple[Cell, Cell, int]]
    ) -> "EulerChain":
        acc: dict[tuple[Cell, Cell], int] = {}
        for a, b, m in segments:
            if a == b:
                raise ValueError(f"degenerate segment at {a}")
            small, big = (a, b) if len(a) < len(b) else (b, a)
            if not set(small) < set(big):
                raise ValueError(f"segment {a} -> {b} joins incomparable cells")
            key = (small, big)
            acc[key] = acc.get(key, 0) + (m if (a, b) == key else -m)
        return cls(
            tuple(
                (a, b, m) for (a, b), m in sorted(acc.items()) if m
            )
        )

    def boundary_on_cells(self) -> dict[Cell, int]:
        """The boundary 0-chain, indexed by original cells."""
        out: dict[Cell, int] = {}
        for a, b, m in self.segments:
            out[b] = out.get(b, 0) + m
            out[a] = out.get(a, 0) - m
        return {c: v for c, v in out.items() if v}

    def __sub__(self, other: "EulerChain") -> "EulerChain":
        return EulerChain.from_segments(
            list(self.segments) + [(a, b, -m) for a, b, m in other.segments]
        )

    def __len__(self) -> int:
        return len(self.segments)


def euler_chain_from_matching(X: SimplicialComplex, M: Matching) -> EulerChain:
    """The Euler chain of a complete matching: one segment per pair,
    oriented odd-dimensional cell -> even-dimensional cell."""
    uncovered = [c for c in X.all_cells() if not M.covers(c)]
    if uncovered:
        raise MatchingError(
            f"matching is not complete: {uncovered[0]} uncovered", cell=uncovered[0]
        )
    segments = []
    for sigma, tau in M.pairs():
        if len(sigma) % 2 == 1:  # sigma even-dimensional, tau odd
            segments.append((tau, sigma, 1))
        else:
            segments.append((sigma, tau, 1))
    chain = EulerChain.from_segments(segments)
    want = {c: (1 if len(c) % 2 == 1 else -1) for c in X.all_cells()}
    if chain.boundary_on_cells() != want:
        raise AssertionError("Euler chain boundary identity failed")
    return chain


def boundary_zero_chain(sub: Subdivision, chain: EulerChain) -> dict[int, int]:
    """The boundary of an Euler chain as a 0-chain on subdivision vertices."""
    out: dict[int, int] = {}
    for cell, coeff in chain.boundary_on_cells().items():
        vid = sub.barycenter_of.get(cell)
        if vid is None:
            raise ValueError(f"{cell} has no barycenter in this subdivision")
        out[vid] = out.get(vid, 0) + coeff
    return {v: c for v, c in out.items() if c}


def as_edge_chain(sub: Subdivision, chain: EulerChain) -> dict[Cell, int]:
    """Rewrite segments as a chain on the subdivision's oriented edges."""
    out: dict[Cell, int] = {}
    for a, b, m in chain.segments:
        va, vb = sub.barycenter_of.get(a), sub.barycenter_of.get(b)
        if va is None or vb is None:
            raise ValueError(f"segment {a} -> {b} is not in this subdivision")
        edge = (va, vb) if va < vb else (vb, va)
        if edge not in sub.complex:
            raise ValueError(f"{a} -> {b} is not an edge of the subdivision")
        out[edge] = out.get(edge, 0) + (m if edge == (va, vb) else -m)
    return {e: v for e, v in out.items() if v}


def homologous(X: SimplicialComplex, xi: EulerChain, eta: EulerChain) -> bool:
    """Whether two chains with equal boundary differ by a boundary.

    The difference is classified as a 1-cycle in the barycentric
    subdivision; the chains are homologous exactly when its class in H_1
    vanishes.
    """
    sub = barycentric_subdivision(X)
    diff = as_edge_chain(sub, xi - eta)
    if not diff:
        return True
    C = chain_complex(sub.complex)
    return cycle_class(C, 1, diff).is_trivial


def reroute_along_vpath(
    M: Matching, tau: Cell, path: Iterable[Cell]
) -> Matching:
    """Shift matched pairs along a V-path starting at a face of tau.

    With path sigma_0, ..., sigma_r: sigma_0 becomes matched with tau and
    each later sigma_i with the cell previously matched to sigma_(i-1).
    The last cell may be unmatched (critical); if it had a partner, that
    partner is left unmatched. Raises MatchingError when the path is not
    a V-path of M or the result covers a cell twice.
    """
    cells = tuple(path)
    if not cells:
        raise ValueError("the path must contain at least one cell")
    sigma0 = cells[0]
    if len(tau) != len(sigma0) + 1 or not set(sigma0) < set(tau):
        raise MatchingError(f"{sigma0} is not a codimension-1 face of {tau}")
    old: list[Pair] = []
    uppers: list[Cell] = []  # old partner of sigma_i, i < r
    for i, sigma in enumerate(cells[:-1]):
        partner = M.v(sigma)
        if partner is None:
            raise MatchingError(f"path cell {sigma} is not matched upward")
        old.append((sigma, partner))
        uppers.append(partner)
        nxt = cells[i + 1]
        if nxt == sigma or not set(nxt) < set(partner):
            raise MatchingError(
                f"{sigma} -> {nxt} is not a V-path step through {partner}"
            )
    last_partner = M.v(cells[-1])
    if last_partner is not None:
        old.append((cells[-1], last_partner))
    pairs = set(M.pairs()) - set(old)
    pairs.add((sigma0, tau))
    for i in range(1, len(cells)):
        pairs.add((cells[i], uppers[i - 1]))
    return Matching(pairs)  # double cover raises MatchingError


def cone_rewire(M: Matching, apex: int, triangle: Cell) -> Matching:
    """Free a cone triangle by rewiring three pairs around its apex.

    For a 2-cell z = (B, C, D) whose matched pairs look like the cone
    pattern (z, az), (BC, aBC), (B, aB) for apex a, replace them by
    (a, aB), (B, BC), (aBC, az). The triangle z becomes unmatched and the
    apex vertex becomes matched, which is what Euler-chain constructions
    over cones need.
    """
    if len(triangle) != 3:
        raise ValueError("the conflict cell must be a 2-cell")
    if apex in triangle:
        raise ValueError("the apex must not be a vertex of the triangle")
    b, c = triangle[0], triangle[1]
    az = tuple(sorted((apex,) + triangle))
    bc = (b, c)
    abc = tuple(sorted((apex, b, c)))
    ab = tuple(sorted((apex, b)))
    removed = [(triangle, az), (bc, abc), ((b,), ab)]
    for pair in removed:
        if pair not in M:
            raise MatchingError(f"cone pattern pair {pair} is missing")
    pairs = set(M.pairs()) - set(removed)
    pairs.update([((apex,), ab), ((b,), bc), (abc, az)])
    return Matching(pairs)
