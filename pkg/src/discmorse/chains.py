"""Free integer chain complexes with ordered, labeled bases."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .complexes import Orientation, SimplicialComplex, incidence

Label = Hashable
Matrix = list[list[int]]


def boundary_matrix(
    X: SimplicialComplex, k: int, orientation: Orientation | None = None
) -> Matrix:
    """Boundary matrix from k-chains to (k-1)-chains of X.

    Rows are indexed by the (k-1)-cells, columns by the k-cells, both in
    lexicographic order. k = 0 gives the 0 x n_0 matrix.
    """
    if k < 0 or k > X.dim:
        raise ValueError(f"k={k} out of range for a complex of dimension {X.dim}")
    if k == 0:
        return []
    rows = X.cells(k - 1)
    cols = X.cells(k)
    row_index = {c: i for i, c in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, tau in enumerate(cols):
        for i_drop in range(len(tau)):
            sigma = tau[:i_drop] + tau[i_drop + 1:]
            sign = -1 if i_drop % 2 else 1
            if orientation:
                sign *= orientation.get(tau, 1) * orientation.get(sigma, 1)
            mat[row_index[sigma]][j] = sign
    return mat


class ChainComplex:
    """A finitely generated free chain complex over the integers.

    ``bases[k]`` lists labels of the degree-k generators for every k from 0
    to the top degree (empty degrees allowed). ``matrices[k]`` is the
    boundary map from degree k to k-1 with rows indexed by ``bases[k-1]``
    and columns by ``bases[k]``. Construction checks shapes and that
    consecutive boundaries compose to zero.
    """

    def __init__(
        self,
        bases: Mapping[int, Iterable[Label]],
        matrices: Mapping[int, Matrix],
        check: bool = True,
    ):
        if not bases:
            raise ValueError("a chain complex needs at least degree 0")
        top = max(bases)
        if sorted(bases) != list(range(top + 1)):
            raise ValueError("bases must cover every degree from 0 to the top")
        self._bases: dict[int, tuple[Label, ...]] = {
            k: tuple(bases[k]) for k in range(top + 1)
        }
        for k, b in self._bases.items():
            if len(set(b)) != len(b):
                raise ValueError(f"duplicate labels in degree {k}")
        if sorted(matrices) != list(range(1, top + 1)):
            raise ValueError("matrices must cover every degree from 1 to the top")
        self._matrices: dict[int, Matrix] = {
            k: [list(row) for row in matrices[k]] for k in range(1, top + 1)
        }
        for k in range(1, top + 1):
            rows, cols = len(self._bases[k - 1]), len(self._bases[k])
            mat = self._matrices[k]
            if len(mat) != rows or any(len(row) != cols for row in mat):
                raise ValueError(f"boundary in degree {k} has the wrong shape")
        if check:
            self._check_d_squared()

    def _check_d_squared(self) -> None:
        for k in range(2, self.top_dim + 1):
            low, high = self._matrices[k - 1], self._matrices[k]
            # column-sparse composition; boundary matrices are mostly zero
            low_cols: dict[int, list[tuple[int, int]]] = {}
            for i, row in enumerate(low):
                for j, v in enumerate(row):
                    if v:
                        low_cols.setdefault(j, []).append((i, v))
            for j in range(len(self._bases[k])):
                acc: dict[int, int] = {}
                for r, v in enumerate(c[j] for c in high):
                    if v:
                        for i, w in low_cols.get(r, ()):
                            acc[i] = acc.get(i, 0) + v * w
                if any(acc.values()):
                    raise ValueError(
                        f"d o d != 0 between degrees {k} and {k - 2} (column {j})"
                    )

    @property
    def top_dim(self) -> int:
        return max(self._bases)

    def basis(self, k: int) -> tuple[Label, ...]:
        return self._bases.get(k, ())

    def size(self, k: int) -> int:
        return len(self._bases.get(k, ()))

    def boundary(self, k: int) -> Matrix:
        """A copy of the degree-k boundary matrix; degree 0 is 0 x n_0."""
        if k == 0:
            return []
        if k < 1 or k > self.top_dim:
            raise ValueError(f"no boundary in degree {k}")
        return [row[:] for row in self._matrices[k]]

    def euler_characteristic(self) -> int:
        return sum(
            (len(b) if k % 2 == 0 else -len(b)) for k, b in self._bases.items()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self._bases == other._bases and self._matrices == other._matrices

    __hash__ = None  # mutable-by-convention matrices; identity hash unwanted

    def __repr__(self) -> str:
        sizes = ",".join(str(len(self._bases[k])) for k in sorted(self._bases))
        return f"{type(self).__name__}(sizes=({sizes}))"


def chain_complex(
    X: SimplicialComplex, orientation: Orientation | None = None
) -> ChainComplex:
    """The simplicial chain complex of X with lexicographic cell bases."""
    bases = {k: X.cells(k) for k in range(X.dim + 1)}
    matrices = {k: boundary_matrix(X, k, orientation) for k in range(1, X.dim + 1)}
    return ChainComplex(bases, matrices)
