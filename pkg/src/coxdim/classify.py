"""Recognition of finite Coxeter types from connected diagrams.

Recognition is exact labeled-graph matching: the connected finite diagrams
are paths and three-armed trees with a short list of admissible label
patterns, so we match tree shape, arm lengths, and label placement
directly.  No floating point is involved here; the cosine-matrix
positive-definiteness test lives in the test suite as an independent
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import INF, CoxeterMatrix
from .errors import InputError

FAMILIES = ("A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2")


@dataclass(frozen=True)
class FiniteType:
    """One entry of the finite classification, e.g. A(5), D(6), I2(7)."""

    family: str
    rank: int
    p: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        fixed_rank = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "H3": 3, "H4": 4}
        if self.family in fixed_rank:
            if self.rank != fixed_rank[self.family]:
                raise InputError(f"{self.family} has rank {fixed_rank[self.family]}")
        elif self.family == "A":
            if self.rank < 1:
                raise InputError("family A needs rank >= 1")
        elif self.family == "B":
            if self.rank < 2:
                raise InputError("family B needs rank >= 2")
        elif self.family == "D":
            if self.rank < 4:
                raise InputError("family D needs rank >= 4")
        elif self.family == "I2":
            if self.rank != 2 or self.p is None or self.p < 3:
                raise InputError("I2 needs rank 2 and finite p >= 3")
        if self.family != "I2" and self.p is not None:
            raise InputError("p is only meaningful for I2")

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.p})"
        if self.family in ("E6", "E7", "E8", "F4", "H3", "H4"):
            return self.family
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CatalogEntry:
    type: FiniteType
    num_reflections: int
    centerless: bool


def catalog(t: FiniteType) -> CatalogEntry:
    """Reflection count and centerlessness for a finite type.

    Counts are the classical closed forms; a group is centerless exactly
    when its longest element does not act as -1, which happens for A_n
    (n >= 2), D_n with n odd, E6, and odd dihedral groups.
    """
    fam, n, p = t.family, t.rank, t.p
    if fam == "A":
        count = n * (n + 1) // 2
        centerless = n >= 2
    elif fam == "B":
        count = n * n
        centerless = False
    elif fam == "D":
        count = n * (n - 1)
        centerless = n % 2 == 1
    elif fam == "E6":
        count, centerless = 36, True
    elif fam == "E7":
        count, centerless = 63, False
    elif fam == "E8":
        count, centerless = 120, False
    elif fam == "F4":
        count, centerless = 24, False
    elif fam == "H3":
        count, centerless = 15, False
    elif fam == "H4":
        count, centerless = 60, False
    else:  # I2
        count = p
        centerless = p % 2 == 1
    return CatalogEntry(t, count, centerless)


def _path_order(T, adj):
    """Vertices of a path graph from one endpoint to the other."""
    ends = [v for v in T if len(adj[v]) == 1]
    start = min(ends)
    order = [start]
    prev = None
    while len(order) < len(T):
        nxt = [u for u in adj[order[-1]] if u != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def recognize_finite_type(M: CoxeterMatrix, T) -> FiniteType | None:
    """Match a connected induced diagram against the finite catalog.

    Returns None when the diagram is of no finite type.  A lone label-3
    edge is reported as A2; any other single edge with finite label p is
    I2(p), so family B only appears from rank 3 up.  Results are memoized
    on the (immutable) matrix.
    """
    idx = tuple(sorted({M.generator_index(g) for g in T}))
    if not idx:
        raise InputError("T must be nonempty")
    key = ("finite-type", idx)
    if key not in M._memo:
        M._memo[key] = _recognize_connected(M, idx)
    return M._memo[key]


def _recognize_connected(M: CoxeterMatrix, idx: tuple[int, ...]) -> FiniteType | None:
    names = [M.generators[i] for i in idx]
    if len(M.components(names)) != 1:
        raise InputError(f"subset {names!r} is not connected in the diagram")

    n = len(idx)
    if n == 1:
        return FiniteType("A", 1)

    edges = []
    adj = {i: [] for i in idx}
    for a_pos, i in enumerate(idx):
        for j in idx[a_pos + 1:]:
            lab = M.label_ij(i, j)
            if lab == INF:
                return None
            if lab > 2:
                edges.append((i, j, lab))
                adj[i].append(j)
                adj[j].append(i)

    if n == 2:
        p = edges[0][2]
        return FiniteType("A", 2) if p == 3 else FiniteType("I2", 2, p)

    # rank >= 3: must be a tree, labels from {3,4,5} with at most one > 3
    if len(edges) != n - 1:
        return None
    big = [(i, j, lab) for (i, j, lab) in edges if lab > 3]
    if len(big) > 1 or any(lab > 5 for (_, _, lab) in big):
        return None
    degrees = {v: len(adj[v]) for v in idx}
    if max(degrees.values()) > 3:
        return None
    branch = [v for v in idx if degrees[v] == 3]
    if len(branch) > 1:
        return None

    if branch:
        if big:
            return None
        b = branch[0]
        arms = []
        for first in adj[b]:
            length, prev, cur = 1, b, first
            while degrees[cur] == 2:
                nxt = [u for u in adj[cur] if u != prev]
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return FiniteType("D", n)
        if arms == [1, 2, 2]:
            return FiniteType("E6", 6)
        if arms == [1, 2, 3]:
            return FiniteType("E7", 7)
        if arms == [1, 2, 4]:
            return FiniteType("E8", 8)
        return None

    # path
    order = _path_order(idx, adj)
    labels = [M.label_ij(order[k], order[k + 1]) for k in range(n - 1)]
    if not big:
        return FiniteType("A", n)
    (_, _, p) = big[0]
    positions = [k for k, lab in enumerate(labels) if lab > 3]
    pos = positions[0]
    at_end = pos == 0 or pos == n - 2
    if p == 4:
        if at_end:
            return FiniteType("B", n)
        if n == 4:
            return FiniteType("F4", 4)
        return None
    # p == 5
    if at_end and n == 3:
        return FiniteType("H3", 3)
    if at_end and n == 4:
        return FiniteType("H4", 4)
    return None


def is_spherical(M: CoxeterMatrix, T) -> bool:
    """True when the special subgroup generated by T is finite.

    Decided blockwise: T is spherical iff every connected component of its
    induced diagram is of finite type.  The empty set counts as spherical.
    """
    names = M.canonical_subset(T)
    if not names:
        return True
    memo_key = ("spherical", tuple(M.generator_index(g) for g in names))
    cached = M._memo.get(memo_key)
    if cached is None:
        cached = all(recognize_finite_type(M, block) is not None for block in M.components(names))
        M._memo[memo_key] = cached
    return cached
