"""Integer Smith normal form, homology, and cycle classification.

All arithmetic is exact over arbitrary-precision integers. The Smith
routine picks the nonzero entry of minimal absolute value as pivot to
curb coefficient growth and can track the unimodular row and column
transforms together with their inverses, which is what cycle
classification needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .chains import ChainComplex, Label, Matrix


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _SmithWorker:
    """Row-sparse elimination with optional dense transform tracking."""

    def __init__(self, A: Sequence[Sequence[int]], n_cols: int, transforms: bool):
        self.m = len(A)
        self.n = n_cols
        self.rows: list[dict[int, int]] = [
            {j: v for j, v in enumerate(row) if v} for row in A
        ]
        self.track = transforms
        if transforms:
            self.U = _identity(self.m)
            self.U_inv = _identity(self.m)
            self.V = _identity(self.n)
            self.V_inv = _identity(self.n)

    # --- elementary operations, mirrored on the transforms ---

    def row_swap(self, i1: int, i2: int) -> None:
        if i1 == i2:
            return
        self.rows[i1], self.rows[i2] = self.rows[i2], self.rows[i1]
        if self.track:
            self.U[i1], self.U[i2] = self.U[i2], self.U[i1]
            for row in self.U_inv:
                row[i1], row[i2] = row[i2], row[i1]

    def col_swap(self, j1: int, j2: int) -> None:
        if j1 == j2:
            return
        for row in self.rows:
            a, b = row.pop(j1, None), row.pop(j2, None)
            if b is not None:
                row[j1] = b
            if a is not None:
                row[j2] = a
        if self.track:
            for row in self.V:
                row[j1], row[j2] = row[j2], row[j1]
            self.V_inv[j1], self.V_inv[j2] = self.V_inv[j2], self.V_inv[j1]

    def row_neg(self, i: int) -> None:
        self.rows[i] = {j: -v for j, v in self.rows[i].items()}
        if self.track:
            self.U[i] = [-v for v in self.U[i]]
            for row in self.U_inv:
                row[i] = -row[i]

    def row_add(self, dst: int, src: int, c: int) -> None:
        """Row dst += c * row src."""
        if not c:
            return
        target = self.rows[dst]
        for j, v in self.rows[src].items():
            w = target.get(j, 0) + c * v
            if w:
                target[j] = w
            else:
                target.pop(j, None)
        if self.track:
            udst, usrc = self.U[dst], self.U[src]
            for k in range(self.m):
                udst[k] += c * usrc[k]
            for row in self.U_inv:
                row[src] -= c * row[dst]

    def col_add(self, dst: int, src: int, c: int) -> None:
        """Column dst += c * column src."""
        if not c:
            return
        for row in self.rows:
            v = row.get(src)
            if v is not None:
                w = row.get(dst, 0) + c * v
                if w:
                    row[dst] = w
                else:
                    row.pop(dst, None)
        if self.track:
            for row in self.V:
                row[dst] += c * row[src]
            vsrc, vdst = self.V_inv[src], self.V_inv[dst]
            for k in range(self.n):
                vsrc[k] -= c * vdst[k]

    def row_combine(self, s: int, u: int, a11: int, a12: int, a21: int, a22: int) -> None:
        """Rows (s, u) <- (a11*s + a12*u, a21*s + a22*u); determinant must be 1."""
        rs, ru = self.rows[s], self.rows[u]
        new_s: dict[int, int] = {}
        new_u: dict[int, int] = {}
        for j in rs.keys() | ru.keys():
            a, b = rs.get(j, 0), ru.get(j, 0)
            vs, vu = a11 * a + a12 * b, a21 * a + a22 * b
            if vs:
                new_s[j] = vs
            if vu:
                new_u[j] = vu
        self.rows[s], self.rows[u] = new_s, new_u
        if self.track:
            us, uu = self.U[s], self.U[u]
            self.U[s] = [a11 * a + a12 * b for a, b in zip(us, uu)]
            self.U[u] = [a21 * a + a22 * b for a, b in zip(us, uu)]
            for row in self.U_inv:
                a, b = row[s], row[u]
                row[s] = a22 * a - a21 * b
                row[u] = -a12 * a + a11 * b

    # --- the reduction itself ---

    def _find_pivot(self, t: int) -> tuple[int, int] | None:
        best: tuple[int, int, int] | None = None  # (|v|, i, j)
        for i in range(t, self.m):
            row = self.rows[i]
            if not row:
                continue
            a, j = min((abs(v), j) for j, v in row.items())
            if best is None or (a, i, j) < best:
                best = (a, i, j)
            if a == 1:
                break
        if best is None:
            return None
        return best[1], best[2]

    def _clear_position(self, t: int) -> None:
        while True:
            p = self.rows[t][t]
            for i in range(t + 1, self.m):
                v = self.rows[i].get(t)
                if v:
                    self.row_add(i, t, -(v // p))
            leftovers = [i for i in range(t + 1, self.m) if self.rows[i].get(t)]
            if leftovers:
                i = min(leftovers, key=lambda i: (abs(self.rows[i][t]), i))
                self.row_swap(t, i)
                continue
            for j in [j for j in self.rows[t] if j != t]:
                v = self.rows[t][j]
                q = v // p
                if q:
                    self.col_add(j, t, -q)
            leftovers = [j for j in self.rows[t] if j != t and self.rows[t][j]]
            if leftovers:
                j = min(leftovers, key=lambda j: (abs(self.rows[t][j]), j))
                self.col_swap(t, j)
                continue
            return

    def _fix_divisibility(self, s: int, u: int) -> None:
        # both rows are diagonal singletons; replace (d_s, d_u) by (gcd, lcm)
        a, b = self.rows[s][s], self.rows[u][u]
        g, x, y = _xgcd(a, b)
        self.col_add(s, u, 1)
        self.row_combine(s, u, x, y, -(b // g), a // g)
        self.col_add(u, s, -(y * b) // g)

    def run(self) -> int:
        t = 0
        limit = min(self.m, self.n)
        while t < limit:
            piv = self._find_pivot(t)
            if piv is None:
                break
            self.row_swap(t, piv[0])
            self.col_swap(t, piv[1])
            self._clear_position(t)
            t += 1
        rank = t
        for s in range(rank):
            if self.rows[s][s] < 0:
                self.row_neg(s)
        s = 0
        while s < rank - 1:
            d = self.rows[s][s]
            bad = next(
                (u for u in range(s + 1, rank) if self.rows[u][u] % d), None
            )
            if bad is None:
                s += 1
            else:
                self._fix_divisibility(s, bad)
        return rank


@dataclass
class SmithNormalForm:
    """U * A * V = D with unimodular U, V; diagonal d_1 | d_2 | ... >= 0.

    The transforms and their inverses are None when not requested.
    """

    shape: tuple[int, int]
    diagonal: tuple[int, ...]
    rank: int
    U: Matrix | None
    V: Matrix | None
    U_inv: Matrix | None
    V_inv: Matrix | None

    @property
    def factors(self) -> tuple[int, ...]:
        """The nonzero invariant factors."""
        return self.diagonal[: self.rank]

    def d_matrix(self) -> Matrix:
        m, n = self.shape
        out = [[0] * n for _ in range(m)]
        for i, d in enumerate(self.diagonal):
            out[i][i] = d
        return out


def smith_normal_form(
    A: Sequence[Sequence[int]],
    n_cols: int | None = None,
    transforms: bool = True,
) -> SmithNormalForm:
    """Smith normal form of an integer matrix given as a list of rows.

    ``n_cols`` disambiguates the width of matrices with zero rows. With
    ``transforms=False`` only the diagonal is computed, which is cheaper.
    """
    m = len(A)
    if n_cols is None:
        n_cols = len(A[0]) if m else 0
    if any(len(row) != n_cols for row in A):
        raise ValueError("ragged matrix")
    worker = _SmithWorker(A, n_cols, transforms)
    rank = worker.run()
    diag = tuple(
        worker.rows[t][t] if t < rank else 0 for t in range(min(m, n_cols))
    )
    if transforms:
        return SmithNormalForm(
            (m, n_cols), diag, rank, worker.U, worker.V, worker.U_inv, worker.V_inv
        )
    return SmithNormalForm((m, n_cols), diag, rank, None, None, None, None)


def integer_determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _matmul(A: Matrix, B: Matrix, n_cols_b: int) -> Matrix:
    out = [[0] * n_cols_b for _ in A]
    for i, arow in enumerate(A):
        orow = out[i]
        for k, v in enumerate(arow):
            if v:
                brow = B[k]
                for j in range(n_cols_b):
                    if brow[j]:
                        orow[j] += v * brow[j]
    return out


def snf_is_valid(A: Sequence[Sequence[int]], s: SmithNormalForm) -> bool:
    """Full contract check: U A V = D, divisibility chain, |det| = 1.

    Meant for tests and small matrices; determinant cost is cubic.
    """
    m, n = s.shape
    if s.U is None:
        raise ValueError("transforms were not tracked")
    ua = _matmul(s.U, [list(row) for row in A], n)
    if _matmul(ua, s.V, n) != s.d_matrix():
        return False
    for a, b in zip(s.factors, s.factors[1:]):
        if a <= 0 or b % a:
            return False
    if any(d != 0 for d in s.diagonal[s.rank:]):
        return False
    if abs(integer_determinant(s.U)) != 1 or abs(integer_determinant(s.V)) != 1:
        return False
    if _matmul(s.U, s.U_inv, m) != _identity(m):
        return False
    if _matmul(s.V, s.V_inv, n) != _identity(n):
        return False
    return True


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion invariant factors per degree."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, k: int) -> str:
        if k < 0 or k >= len(self.betti):
            return "0"
        parts = []
        b = self.betti[k]
        if b == 1:
            parts.append("Z")
        elif b > 1:
            parts.append(f"Z^{b}")
        parts.extend(f"Z/{d}" for d in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return ", ".join(
            f"H_{k} = {self.group(k)}" for k in range(len(self.betti))
        )


def homology(C: ChainComplex) -> HomologySummary:
    """Homology of an integer chain complex via Smith normal form.

    betti_k = dim C_k - rank d_k - rank d_(k+1); the torsion of degree k
    is the set of invariant factors of d_(k+1) exceeding 1.
    """
    top = C.top_dim
    ranks = [0] * (top + 2)
    torsion: list[tuple[int, ...]] = [()] * (top + 1)
    for k in range(1, top + 1):
        s = smith_normal_form(C.boundary(k), n_cols=C.size(k), transforms=False)
        ranks[k] = s.rank
        torsion[k - 1] = tuple(d for d in s.factors if d > 1)
    betti = tuple(
        C.size(k) - ranks[k] - ranks[k + 1] for k in range(top + 1)
    )
    if any(b < 0 for b in betti):
        raise AssertionError("negative Betti number; chain complex is inconsistent")
    euler = sum(b if k % 2 == 0 else -b for k, b in enumerate(betti))
    if euler != C.euler_characteristic():
        raise AssertionError("Betti numbers disagree with the Euler characteristic")
    return HomologySummary(betti, tuple(torsion))


@dataclass(frozen=True)
class CycleClass:
    """Coordinates of a cycle's class in H_k's invariant-factor basis.

    ``torsion`` holds (residue, modulus) pairs for the finite cyclic
    summands with modulus > 1; ``free`` the coordinates along the free
    part. The class is zero exactly when everything vanishes.
    """

    dim: int
    torsion: tuple[tuple[int, int], ...]
    free: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return all(r == 0 for r, _ in self.torsion) and not any(self.free)


def cycle_class(C: ChainComplex, k: int, z: Mapping[Label, int]) -> CycleClass:
    """Classify an integer k-cycle in H_k(C).

    ``z`` maps basis labels to coefficients (omitted labels are zero).
    Raises ValueError for unknown labels or when z is not a cycle.
    """
    if k < 0 or k > C.top_dim:
        raise ValueError(f"degree {k} out of range")
    basis = C.basis(k)
    index = {lab: i for i, lab in enumerate(basis)}
    zv = [0] * len(basis)
    for lab, coeff in z.items():
        if lab not in index:
            raise ValueError(f"{lab!r} is not a degree-{k} generator")
        zv[index[lab]] = coeff

    if k == 0:
        rank = 0
        w = list(zv)
        vinv = None
    else:
        s = smith_normal_form(C.boundary(k), n_cols=len(basis), transforms=True)
        rank = s.rank
        vinv = s.V_inv
        w_full = [
            sum(vinv[a][i] * zv[i] for i in range(len(basis)) if zv[i])
            for a in range(len(basis))
        ]
        if any(w_full[:rank]):
            raise ValueError("z is not a cycle")
        w = w_full[rank:]

    ker_dim = len(basis) - rank
    if k == C.top_dim:
        n_above = 0
        B: Matrix = [[] for _ in range(ker_dim)]
    else:
        above = C.boundary(k + 1)
        n_above = C.size(k + 1)
        cols: list[list[tuple[int, int]]] = [[] for _ in range(n_above)]
        for i, row in enumerate(above):
            for j, v in enumerate(row):
                if v:
                    cols[j].append((i, v))
        B = [[0] * n_above for _ in range(ker_dim)]
        for j, col in enumerate(cols):
            for a in range(ker_dim):
                if vinv is None:
                    # degree 0: kernel coordinates are the raw coordinates
                    acc = sum(v for i, v in col if i == a)
                else:
                    acc = sum(vinv[rank + a][i] * v for i, v in col)
                if acc:
                    B[a][j] = acc
    sb = smith_normal_form(B, n_cols=n_above, transforms=True)
    u = [
        sum(sb.U[a][b] * w[b] for b in range(ker_dim) if w[b])
        for a in range(ker_dim)
    ]
    torsion = tuple(
        (u[a] % d, d) for a, d in enumerate(sb.factors) if d > 1
    )
    free = tuple(u[sb.rank:])
    return CycleClass(k, torsion, free)
