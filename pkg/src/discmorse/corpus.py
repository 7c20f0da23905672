"""Bundled example complexes.

Simplices and their boundaries up to dimension 4, three small closed
surfaces, and two staircase products. Each complex is also shipped as a
facet file under ``data/`` and can be loaded back from there.
"""

from __future__ import annotations

import itertools
from importlib import resources

from .complexes import SimplicialComplex, product_triangulation

# 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
TORUS_FACETS = tuple(
    sorted(
        [tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
        + [tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]
    )
)

# 6-vertex projective plane
PROJECTIVE_PLANE_FACETS = (
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
)

# 8-vertex Klein bottle: 24 edges, 16 triangles, every edge in exactly two
# triangles, all vertex links single cycles; H_1 = Z + Z/2
KLEIN_BOTTLE_FACETS = (
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4),
    (1, 2, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6),
    (2, 3, 5), (2, 3, 7), (2, 4, 6), (2, 6, 7),
    (3, 4, 7), (3, 5, 6), (4, 5, 7), (5, 6, 7),
)


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return SimplicialComplex.from_facets([tuple(range(n + 1))])


def sphere(n: int) -> SimplicialComplex:
    """The boundary of the (n+1)-simplex, a triangulated n-sphere."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return SimplicialComplex.from_facets(
        itertools.combinations(range(n + 2), n + 1)
    )


def torus() -> SimplicialComplex:
    return SimplicialComplex.from_facets(TORUS_FACETS)


def projective_plane() -> SimplicialComplex:
    return SimplicialComplex.from_facets(PROJECTIVE_PLANE_FACETS)


def klein_bottle() -> SimplicialComplex:
    return SimplicialComplex.from_facets(KLEIN_BOTTLE_FACETS)


_BUILDERS = {
    "delta0": lambda: simplex(0),
    "delta1": lambda: simplex(1),
    "delta2": lambda: simplex(2),
    "delta3": lambda: simplex(3),
    "delta4": lambda: simplex(4),
    "sphere0": lambda: sphere(0),
    "sphere1": lambda: sphere(1),
    "sphere2": lambda: sphere(2),
    "sphere3": lambda: sphere(3),
    "torus": torus,
    "projective_plane": projective_plane,
    "klein_bottle": klein_bottle,
    "square": lambda: product_triangulation(1, 1),
    "prism": lambda: product_triangulation(2, 1),
}


def names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def build(name: str) -> SimplicialComplex:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown corpus complex {name!r}") from None


def data_text(name: str) -> str:
    """The packaged facet file for a corpus complex."""
    if name not in _BUILDERS:
        raise ValueError(f"unknown corpus complex {name!r}")
    return (
        resources.files("discmorse").joinpath(f"data/{name}.facets").read_text()
    )


def load(name: str) -> SimplicialComplex:
    """Parse the packaged facet file; equals build(name)."""
    from .io import parse_complex

    return parse_complex(data_text(name))[0]
