import itertools
import random

import pytest

from discmorse.chains import chain_complex
from discmorse.complexes import SimplicialComplex, incidence
from discmorse.homology import (
    CycleClass,
    HomologySummary,
    cycle_class,
    homology,
    integer_determinant,
    smith_normal_form,
    snf_is_valid,
)


def sphere(n):
    return SimplicialComplex.from_facets(
        itertools.combinations(range(n + 2), n + 1)
    )


def torus():
    facets = [tuple(sorted([i, (i + 1) % 7, (i + 3) % 7])) for i in range(7)]
    facets += [tuple(sorted([i, (i + 2) % 7, (i + 3) % 7])) for i in range(7)]
    return SimplicialComplex.from_facets(facets)


def projective_plane():
    return SimplicialComplex.from_facets(
        [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
         (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)]
    )


# --- Smith normal form ---


def test_snf_frozen_small_cases():
    s = smith_normal_form([[2, 4], [6, 8]])
    assert s.diagonal == (2, 4)
    assert s.rank == 2 and s.factors == (2, 4)
    assert smith_normal_form([[1, 0], [0, 1]]).diagonal == (1, 1)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == (0, 0)
    assert smith_normal_form([[6]]).diagonal == (6,)
    assert smith_normal_form([[-6]]).diagonal == (6,)


def test_snf_shapes_and_empty_matrices():
    s = smith_normal_form([], n_cols=3)
    assert s.shape == (0, 3) and s.diagonal == () and s.rank == 0
    s = smith_normal_form([[], []], n_cols=0)
    assert s.shape == (2, 0) and s.diagonal == ()
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])


def test_snf_d_matrix_layout():
    s = smith_normal_form([[0, 2], [2, 0], [0, 0]])
    assert s.diagonal == (2, 2)
    assert s.d_matrix() == [[2, 0], [0, 2], [0, 0]]


def test_snf_full_contract_on_random_matrices():
    rng = random.Random(9)
    for _ in range(80):
        m, n = rng.randrange(0, 6), rng.randrange(0, 6)
        A = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(m)]
        s = smith_normal_form(A, n_cols=n)
        assert snf_is_valid(A, s), (A, s.diagonal)


def test_snf_diagonal_matches_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sym_snf

    rng = random.Random(31)
    for _ in range(40):
        m, n = rng.randrange(1, 6), rng.randrange(1, 6)
        A = [[rng.randrange(-7, 8) for _ in range(n)] for _ in range(m)]
        s = smith_normal_form(A, n_cols=n, transforms=False)
        sym = sym_snf(sympy.Matrix(A))
        assert list(s.diagonal) == [abs(sym[i, i]) for i in range(min(m, n))]


def test_snf_without_transforms_has_no_matrices():
    s = smith_normal_form([[4, 2]], transforms=False)
    assert s.U is None and s.V is None and s.U_inv is None and s.V_inv is None
    assert s.diagonal == (2,)
    with pytest.raises(ValueError):
        snf_is_valid([[4, 2]], s)


def test_integer_determinant():
    assert integer_determinant([]) == 1
    assert integer_determinant([[7]]) == 7
    assert integer_determinant([[1, 2], [3, 4]]) == -2
    assert integer_determinant([[2, 0, 1], [0, 3, 0], [1, 0, 2]]) == 9
    assert integer_determinant([[1, 1], [1, 1]]) == 0
    with pytest.raises(ValueError):
        integer_determinant([[1, 2]])


# --- homology ---


def test_homology_of_spheres():
    assert homology(chain_complex(sphere(1))).betti == (1, 1)
    h2 = homology(chain_complex(sphere(2)))
    assert h2.betti == (1, 0, 1) and h2.torsion == ((), (), ())
    assert homology(chain_complex(sphere(3))).betti == (1, 0, 0, 1)


def test_homology_of_the_torus():
    h = homology(chain_complex(torus()))
    assert h.betti == (1, 2, 1)
    assert h.torsion == ((), (), ())


def test_homology_of_the_projective_plane():
    h = homology(chain_complex(projective_plane()))
    assert h.betti == (1, 0, 0)
    assert h.torsion == ((), (2,), ())


def test_homology_of_a_point_and_a_simplex():
    assert homology(chain_complex(SimplicialComplex([(0,)]))).betti == (1,)
    h = homology(chain_complex(SimplicialComplex.from_facets([(0, 1, 2, 3)])))
    assert h.betti == (1, 0, 0, 0)


def test_group_strings():
    h = HomologySummary(betti=(1, 2, 0), torsion=((), (2,), ()))
    assert h.group(0) == "Z"
    assert h.group(1) == "Z^2 + Z/2"
    assert h.group(2) == "0"
    assert h.group(9) == "0"
    assert str(h) == "H_0 = Z, H_1 = Z^2 + Z/2, H_2 = 0"


# --- cycle classification ---


def test_cycle_class_of_a_torus_loop():
    X = torus()
    C = chain_complex(X)
    z = {}
    for i in range(7):
        e = tuple(sorted((i, (i + 1) % 7)))
        z[e] = z.get(e, 0) + (1 if i < (i + 1) % 7 else -1)
    cc = cycle_class(C, 1, z)
    assert cc.dim == 1
    assert cc.torsion == ()  # H_1 of the torus is free
    assert len(cc.free) == 2
    assert not cc.is_trivial


def test_cycle_class_of_a_face_boundary_is_trivial():
    X = torus()
    C = chain_complex(X)
    f = X.cells(2)[0]
    z = {f[:i] + f[i + 1:]: incidence(f, f[:i] + f[i + 1:]) for i in range(3)}
    assert cycle_class(C, 1, z).is_trivial


def test_cycle_class_detects_two_torsion():
    C = chain_complex(projective_plane())
    z = {(0, 1): 1, (0, 4): -1, (1, 4): 1}
    cc = cycle_class(C, 1, z)
    assert cc == CycleClass(1, ((1, 2),), ())
    assert not cc.is_trivial
    # doubling the cycle kills the class
    assert cycle_class(C, 1, {e: 2 * v for e, v in z.items()}).is_trivial


def test_cycle_class_in_degree_zero():
    C = chain_complex(sphere(1))
    assert not cycle_class(C, 0, {(0,): 1}).is_trivial
    assert cycle_class(C, 0, {(0,): 1, (1,): -1}).is_trivial


def test_cycle_class_input_validation():
    C = chain_complex(sphere(1))
    with pytest.raises(ValueError):
        cycle_class(C, 1, {(0, 3): 1})  # unknown label
    with pytest.raises(ValueError):
        cycle_class(C, 5, {})
    with pytest.raises(ValueError):
        cycle_class(C, 1, {(0, 1): 1})  # a single edge is not a cycle


def test_top_degree_cycles_classify_against_nothing_above():
    # the boundary of the solid tetrahedron is a 2-cycle on its surface
    X = sphere(2)
    C = chain_complex(X)
    z = {c: incidence((0, 1, 2, 3), c) for c in X.cells(2)}
    cc = cycle_class(C, 2, z)
    assert cc.dim == 2 and cc.torsion == ()
    assert len(cc.free) == 1 and abs(cc.free[0]) == 1
