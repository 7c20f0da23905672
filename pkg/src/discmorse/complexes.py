"""Finite abstract simplicial complexes with oriented integer incidence.

Cells are tuples of strictly increasing non-negative vertex ids. The
canonical orientation of a cell is its increasing vertex order; dropping
the i-th vertex carries the sign (-1)**i. Alternative orientations are
plain ``cell -> -1`` tables produced by :func:`reorient` in
:mod:`discmorse.morse` and accepted by everything that takes an
``orientation`` argument.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, NamedTuple

Cell = tuple[int, ...]
Orientation = Mapping[Cell, int]


def as_cell(vertices: Iterable[int]) -> Cell:
    """Canonicalize a vertex collection into a cell (sorted, distinct)."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ValueError("a cell needs at least one vertex")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"vertex labels must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"vertex labels must be non-negative, got {v}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex {a} in cell {tuple(vertices)}")
    return vs


def cell_dim(cell: Cell) -> int:
    return len(cell) - 1


def hyperfaces(cell: Cell) -> list[Cell]:
    """Codimension-1 faces, in the order induced by dropped-vertex index."""
    if len(cell) == 1:
        return []
    return [cell[:i] + cell[i + 1:] for i in range(len(cell))]


def proper_faces(cell: Cell) -> Iterator[Cell]:
    """All faces of strictly smaller dimension, dimension ascending."""
    for r in range(1, len(cell)):
        yield from itertools.combinations(cell, r)


def incidence(tau: Cell, sigma: Cell, orientation: Orientation | None = None) -> int:
    """Signed incidence number <d tau, sigma> in {-1, 0, +1}.

    Nonzero exactly when sigma is a codimension-1 face of tau; the sign is
    (-1)**i for the dropped vertex position, times any orientation flips.
    """
    if len(tau) != len(sigma) + 1:
        return 0
    sign = 0
    for i in range(len(tau)):
        if tau[:i] + tau[i + 1:] == sigma:
            sign = -1 if i % 2 else 1
            break
    if sign and orientation:
        sign *= orientation.get(tau, 1) * orientation.get(sigma, 1)
    return sign


class SimplicialComplex:
    """An immutable finite simplicial complex, closed under taking faces."""

    __slots__ = ("_by_dim", "_cells")

    def __init__(self, cells: Iterable[Iterable[int]]):
        canon = {as_cell(c) for c in cells}
        if not canon:
            raise ValueError("a complex needs at least one cell")
        for c in canon:
            for f in hyperfaces(c):
                if f not in canon:
                    raise ValueError(f"not closed under faces: {c} present, {f} missing")
        by_dim: dict[int, list[Cell]] = {}
        for c in canon:
            by_dim.setdefault(len(c) - 1, []).append(c)
        self._by_dim: dict[int, tuple[Cell, ...]] = {
            k: tuple(sorted(v)) for k, v in sorted(by_dim.items())
        }
        self._cells = frozenset(canon)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build the closure of the given facets under taking faces."""
        closed: set[Cell] = set()
        for f in facets:
            c = as_cell(f)
            for r in range(1, len(c) + 1):
                closed.update(itertools.combinations(c, r))
        if not closed:
            raise ValueError("at least one facet is required")
        return cls(closed)

    @property
    def dim(self) -> int:
        return max(self._by_dim)

    @property
    def n_cells(self) -> int:
        return len(self._cells)

    def cells(self, k: int) -> tuple[Cell, ...]:
        """The k-cells in lexicographic order (empty tuple if none)."""
        return self._by_dim.get(k, ())

    def all_cells(self) -> Iterator[Cell]:
        """All cells, dimension ascending, lexicographic within a dimension."""
        for k in sorted(self._by_dim):
            yield from self._by_dim[k]

    def vertices(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self._by_dim[0])

    def facets(self) -> tuple[Cell, ...]:
        """Maximal cells. ``from_facets(X.facets())`` reproduces X."""
        covered: set[Cell] = set()
        for c in self._cells:
            covered.update(hyperfaces(c))
        return tuple(c for c in self.all_cells() if c not in covered)

    def euler_characteristic(self) -> int:
        return sum(
            (len(cs) if k % 2 == 0 else -len(cs)) for k, cs in self._by_dim.items()
        )

    def contains_complex(self, other: "SimplicialComplex") -> bool:
        return all(c in self._cells for c in other.all_cells())

    def __contains__(self, cell: object) -> bool:
        return cell in self._cells

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        sizes = ",".join(str(len(self._by_dim[k])) for k in sorted(self._by_dim))
        return f"SimplicialComplex(dim={self.dim}, cells=({sizes}))"


class Subdivision(NamedTuple):
    """A barycentric subdivision together with the barycenter dictionary."""

    complex: SimplicialComplex
    barycenter_of: dict[Cell, int]  # original cell -> subdivision vertex
    cell_of: dict[int, Cell]        # inverse of barycenter_of


def barycentric_subdivision(X: SimplicialComplex) -> Subdivision:
    """First barycentric subdivision.

    Vertices of the result are barycenters, one per cell of X, numbered by
    (dimension, lexicographic) rank so that every chain of faces maps to an
    increasing vertex tuple. Cells of the result are the chains
    sigma_0 < sigma_1 < ... of the face poset of X.
    """
    ordered = list(X.all_cells())
    vid = {c: i for i, c in enumerate(ordered)}
    memo: dict[Cell, list[tuple[int, ...]]] = {}

    def chains_to(c: Cell) -> list[tuple[int, ...]]:
        got = memo.get(c)
        if got is None:
            got = [(vid[c],)]
            for f in proper_faces(c):
                got.extend(ch + (vid[c],) for ch in chains_to(f))
            memo[c] = got
        return got

    all_chains: list[tuple[int, ...]] = []
    for c in ordered:
        all_chains.extend(chains_to(c))
    sd = SimplicialComplex(all_chains)
    return Subdivision(sd, vid, {i: c for c, i in vid.items()})


def product_triangulation(m: int, n: int) -> SimplicialComplex:
    """The staircase triangulation of (m-simplex) x (n-simplex).

    Grid vertex (i, j) gets id i*(n+1) + j; the top cells are the monotone
    lattice paths from (0, 0) to (m, n), so there are C(m+n, m) of them,
    each an (m+n)-simplex.
    """
    if m < 0 or n < 0:
        raise ValueError("simplex dimensions must be non-negative")
    facets = []
    for rights in itertools.combinations(range(m + n), m):
        right_steps = set(rights)
        i = j = 0
        verts = [0]
        for step in range(m + n):
            if step in right_steps:
                i += 1
            else:
                j += 1
            verts.append(i * (n + 1) + j)
        facets.append(tuple(verts))
    return SimplicialComplex.from_facets(facets)
