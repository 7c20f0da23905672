import pytest

from discmorse import corpus
from discmorse.chains import chain_complex
from discmorse.homology import homology
from discmorse.io import parse_complex


def test_names_are_stable():
    assert corpus.names() == (
        "delta0", "delta1", "delta2", "delta3", "delta4",
        "sphere0", "sphere1", "sphere2", "sphere3",
        "torus", "projective_plane", "klein_bottle",
        "square", "prism",
    )


def test_builders():
    assert corpus.simplex(0).n_cells == 1
    assert corpus.simplex(3).dim == 3
    assert corpus.sphere(0).cells(0) == ((0,), (1,))
    assert corpus.sphere(2).euler_characteristic() == 2
    assert corpus.build("square").cells(2) == ((0, 1, 3), (0, 2, 3))
    with pytest.raises(ValueError):
        corpus.build("moebius")


def test_packaged_data_matches_builders():
    for name in corpus.names():
        X, _ = parse_complex(corpus.data_text(name))
        assert X == corpus.build(name), name
        assert corpus.load(name) == X, name


def test_surfaces_are_closed():
    # every edge of a closed surface lies in exactly two triangles
    for X in (corpus.torus(), corpus.projective_plane(), corpus.klein_bottle()):
        for e in X.cells(1):
            n = sum(1 for t in X.cells(2) if set(e) < set(t))
            assert n == 2, (e, n)


def test_torus_homology():
    h = homology(chain_complex(corpus.torus()))
    assert h.betti == (1, 2, 1) and h.torsion == ((), (), ())


def test_klein_bottle_homology():
    X = corpus.klein_bottle()
    assert [len(X.cells(k)) for k in range(3)] == [8, 24, 16]
    assert X.euler_characteristic() == 0
    h = homology(chain_complex(X))
    assert h.betti == (1, 1, 0)
    assert h.torsion == ((), (2,), ())


def test_projective_plane_homology():
    X = corpus.projective_plane()
    assert [len(X.cells(k)) for k in range(3)] == [6, 15, 10]
    h = homology(chain_complex(X))
    assert h.betti == (1, 0, 0) and h.torsion == ((), (2,), ())


def test_spheres_have_sphere_homology():
    for n in range(4):
        h = homology(chain_complex(corpus.sphere(n)))
        want = tuple(
            1 if k in (0, n) else 0 for k in range(n + 1)
        ) if n > 0 else (2,)
        assert h.betti == want, (n, h.betti)
