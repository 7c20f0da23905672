import itertools

import pytest

from discmorse.complexes import (
    SimplicialComplex,
    as_cell,
    barycentric_subdivision,
    cell_dim,
    hyperfaces,
    incidence,
    product_triangulation,
    proper_faces,
)


def test_as_cell_sorts_and_validates():
    assert as_cell([2, 0, 1]) == (0, 1, 2)
    assert as_cell((5,)) == (5,)
    with pytest.raises(ValueError):
        as_cell([0, 0])
    with pytest.raises(ValueError):
        as_cell([-1])
    with pytest.raises(ValueError):
        as_cell([True])  # bools are not vertex labels
    with pytest.raises(ValueError):
        as_cell([])


def test_cell_dim_and_faces():
    assert cell_dim((7,)) == 0
    assert cell_dim((0, 1, 2)) == 2
    assert hyperfaces((0, 1, 2)) == [(1, 2), (0, 2), (0, 1)]
    assert hyperfaces((3,)) == []
    assert sorted(proper_faces((0, 1, 2))) == [
        (0,), (0, 1), (0, 2), (1,), (1, 2), (2,),
    ]


def test_incidence_signs():
    # deleting the vertex at position i contributes (-1)^i
    assert incidence((0, 1), (1,)) == 1
    assert incidence((0, 1), (0,)) == -1
    assert incidence((0, 1, 2), (1, 2)) == 1
    assert incidence((0, 1, 2), (0, 2)) == -1
    assert incidence((0, 1, 2), (0, 1)) == 1
    # zero whenever sigma is not a codimension-1 face
    assert incidence((0, 1, 2), (0,)) == 0
    assert incidence((0, 1, 2), (3, 4)) == 0


def test_incidence_with_orientation_flips():
    flip_upper = {(0, 1): -1}
    flip_lower = {(0,): -1}
    assert incidence((0, 1), (0,), flip_upper) == 1
    assert incidence((0, 1), (0,), flip_lower) == 1
    assert incidence((0, 1), (0,), {**flip_upper, **flip_lower}) == -1
    assert incidence((0, 1), (1,), flip_upper) == -1


def test_from_facets_builds_the_closure():
    X = SimplicialComplex.from_facets([(0, 1, 2)])
    assert X.dim == 2
    assert X.n_cells == 7
    assert X.cells(0) == ((0,), (1,), (2,))
    assert X.cells(1) == ((0, 1), (0, 2), (1, 2))
    assert X.cells(2) == ((0, 1, 2),)
    assert X.facets() == ((0, 1, 2),)
    assert X.vertices() == (0, 1, 2)
    assert (0, 2) in X and (0, 3) not in X
    assert X.euler_characteristic() == 1


def test_constructor_rejects_unclosed_cell_sets():
    with pytest.raises(ValueError):
        SimplicialComplex([(0, 1)])
    SimplicialComplex([(0,), (1,), (0, 1)])  # closed, fine


def test_all_cells_orders_by_dimension_then_lex():
    X = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2)])
    assert tuple(X.all_cells()) == (
        (0,), (1,), (2,), (0, 1), (0, 2), (1, 2),
    )


def test_contains_complex_and_equality():
    X = SimplicialComplex.from_facets([(0, 1, 2)])
    edge = SimplicialComplex.from_facets([(0, 1)])
    assert X.contains_complex(edge)
    assert not edge.contains_complex(X)
    assert X == SimplicialComplex.from_facets([(2, 1, 0)])
    assert hash(X) == hash(SimplicialComplex.from_facets([(0, 1, 2)]))


def test_barycentric_subdivision_of_an_edge():
    sub = barycentric_subdivision(SimplicialComplex.from_facets([(0, 1)]))
    assert sub.complex.cells(0) == ((0,), (1,), (2,))
    assert sub.complex.cells(1) == ((0, 2), (1, 2))
    # barycenter ids: vertices first in lex order, then higher cells
    assert sub.barycenter_of == {(0,): 0, (1,): 1, (0, 1): 2}
    assert sub.cell_of == {0: (0,), 1: (1,), 2: (0, 1)}


def test_barycentric_subdivision_counts_and_euler():
    # Sd cell count in dim k = number of length-(k+1) chains in the face poset
    tri = SimplicialComplex.from_facets([(0, 1, 2)])
    sub = barycentric_subdivision(tri)
    assert [len(sub.complex.cells(k)) for k in range(3)] == [7, 12, 6]
    assert sub.complex.euler_characteristic() == tri.euler_characteristic()

    circle = SimplicialComplex.from_facets(
        itertools.combinations(range(3), 2)
    )
    sub2 = barycentric_subdivision(circle)
    assert [len(sub2.complex.cells(k)) for k in range(2)] == [6, 6]
    # barycenters biject with original cells
    assert sorted(sub2.cell_of) == list(range(circle.n_cells))
    assert {sub2.barycenter_of[c] for c in circle.all_cells()} == set(
        range(circle.n_cells)
    )


def test_product_triangulation_square_and_prism():
    sq = product_triangulation(1, 1)
    assert [len(sq.cells(k)) for k in range(3)] == [4, 5, 2]
    assert sq.cells(2) == ((0, 1, 3), (0, 2, 3))
    assert sq.euler_characteristic() == 1

    prism = product_triangulation(2, 1)
    assert [len(prism.cells(k)) for k in range(4)] == [6, 12, 10, 3]
    assert prism.euler_characteristic() == 1


def test_product_triangulation_facet_count_is_binomial():
    import math

    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        X = product_triangulation(m, n)
        assert len(X.cells(m + n)) == math.comb(m + n, m)
        assert len(X.cells(0)) == (m + 1) * (n + 1)
