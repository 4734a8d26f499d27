"""Chain complexes and (co)homology of finite simplicial complexes.

Two matrix backends: GF(2) rows packed into Python ints for Betti-number
ranks, and arbitrary-precision integer matrices with Smith normal form for
integral invariants and lattice arithmetic.  Reduced homology is the
default convention for the top-dimension criteria downstream, so the
degree-0 boundary can carry an augmentation row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import InputError


class GF2Matrix:
    """Dense matrix over GF(2); each row is an int bitmask over the columns."""

    def __init__(self, rows: list[int], ncols: int):
        self.rows = list(rows)
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        work = [r for r in self.rows if r]
        rank = 0
        while work:
            pivot_row = min(work, key=lambda r: r.bit_length())
            work.remove(pivot_row)
            bit = 1 << (pivot_row.bit_length() - 1)
            rank += 1
            work = [(r ^ pivot_row) if (r & bit) else r for r in work]
            work = [r for r in work if r]
        return rank


class IntMatrix:
    """Dense integer matrix with exact (arbitrary-precision) entries."""

    def __init__(self, entries: list[list[int]], ncols: int | None = None):
        self.entries = [list(row) for row in entries]
        if self.entries:
            widths = {len(row) for row in self.entries}
            if len(widths) != 1:
                raise InputError("ragged integer matrix")
            self.ncols = widths.pop()
        else:
            self.ncols = 0 if ncols is None else ncols

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.entries]

    def mat_vec(self, x: list[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, x)) for row in self.entries]


@dataclass
class SmithForm:
    """U @ A @ V == diag(factors) with U, V unimodular.

    factors are the nonzero invariant factors, positive and in divisibility
    order; rank == len(factors).
    """

    factors: list[int]
    rank: int
    U: list[list[int]]
    V: list[list[int]]
    nrows: int
    ncols: int

    def kernel_basis(self) -> list[list[int]]:
        """Columns of V past the rank span the integer kernel."""
        return [[self.V[i][j] for i in range(self.ncols)] for j in range(self.rank, self.ncols)]

    def solve(self, target: list[int]) -> bool:
        """Whether A x = target has an integer solution."""
        if len(target) != self.nrows:
            raise InputError("target length does not match the matrix")
        for i in range(self.nrows):
            value = sum(self.U[i][k] * target[k] for k in range(self.nrows))
            if i < self.rank:
                if value % self.factors[i] != 0:
                    return False
            elif value != 0:
                return False
        return True


def smith_normal_form(A: IntMatrix) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    return smith_form(A).factors


def smith_form(A: IntMatrix) -> SmithForm:
    """Full Smith decomposition by smallest-pivot elimination.

    Repeatedly moves the least-magnitude nonzero entry of the remaining
    block to the pivot seat, reduces its row and column, and when the seat
    divides the whole block clears it; the divisibility chain then holds
    without a separate fix-up pass.
    """
    D = [list(row) for row in A.entries]
    m = len(D)
    n = A.ncols
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        if q:
            D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        if q:
            for row in D:
                row[dst] -= q * row[src]
            for row in V:
                row[dst] -= q * row[src]

    factors = []
    t = 0
    while t < m and t < n:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, D[i][t] // D[t][t])
                    if D[i][t]:
                        swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, D[t][j] // D[t][t])
                    if D[t][j]:
                        swap_cols(t, j)
                    dirty = True
            if dirty:
                continue
            stray = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % D[t][t]:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            add_row(stray, t, -1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        factors.append(D[t][t])
        t += 1
    return SmithForm(factors, len(factors), U, V, m, n)


# -- boundary matrices and Betti numbers -----------------------------------


def boundary_matrix(K: SimplicialComplex, k: int, ring: str = "int", augmented: bool = False):
    """Boundary operator from k-faces to (k-1)-faces.

    Over the integers signs alternate with vertex position; over GF(2)
    every incidence is 1.  With augmented=True and k == 0 the result is the
    all-ones augmentation row into the empty simplex.
    """
    if k < 0 or k > K.dim:
        raise InputError(f"dimension {k} out of range for a {K.dim}-complex")
    cols = K.faces(k)
    if k == 0:
        if augmented:
            if ring == "gf2":
                return GF2Matrix([(1 << len(cols)) - 1], len(cols))
            return IntMatrix([[1] * len(cols)], len(cols))
        if ring == "gf2":
            return GF2Matrix([], len(cols))
        return IntMatrix([], len(cols))
    rows = K.faces(k - 1)
    row_index = {face: i for i, face in enumerate(rows)}
    if ring == "gf2":
        bits = [0] * len(rows)
        for j, face in enumerate(cols):
            for drop in range(len(face)):
                sub = face[:drop] + face[drop + 1:]
                bits[row_index[sub]] |= 1 << j
        return GF2Matrix(bits, len(cols))
    if ring != "int":
        raise InputError(f"unknown ring {ring!r}")
    entries = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for drop in range(len(face)):
            sub = face[:drop] + face[drop + 1:]
            entries[row_index[sub]][j] = (-1) ** drop
    return IntMatrix(entries, len(cols))


def reduced_betti_mod2(K: SimplicialComplex) -> list[int]:
    """Reduced GF(2) Betti numbers b0..bd (augmentation included at 0)."""
    if not K.vertices:
        raise InputError("empty complex")
    d = K.dim
    ranks = [boundary_matrix(K, k, "gf2", augmented=(k == 0)).rank() for k in range(d + 1)]
    ranks.append(0)
    betti = []
    for k in range(d + 1):
        n_k = len(K.faces(k))
        betti.append(n_k - ranks[k] - ranks[k + 1])
    return betti


@dataclass(frozen=True)
class TopCohomology:
    rank: int
    torsion: tuple[int, ...]


def integral_cohomology_top(K: SimplicialComplex) -> TopCohomology:
    """Integral cohomology in the top dimension, reduced convention.

    H^d is the cokernel of the transposed top boundary; its free rank and
    invariant-factor torsion come straight from the Smith form.  For a
    0-dimensional complex the augmentation plays the role of the boundary,
    which is exactly the reduced convention.
    """
    if not K.vertices:
        raise InputError("empty complex")
    d = K.dim
    B = boundary_matrix(K, d, "int", augmented=(d == 0))
    factors = smith_normal_form(B)
    n_top = len(K.faces(d))
    rank = n_top - len(factors)
    torsion = tuple(f for f in factors if f > 1)
    return TopCohomology(rank, torsion)
