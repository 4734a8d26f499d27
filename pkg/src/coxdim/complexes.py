"""Finite simplicial complexes: nerves, nested-set subdivisions, doubling.

Complexes are stored exhaustively (every nonempty face, not just maximal
ones) with faces as sorted index tuples over a frozen vertex list; that
makes boundary-matrix assembly and serialization bit-reproducible.  Sizes
here are desk scale -- a nerve on more than 20 generators is refused.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx

from .classify import is_spherical
from .coxeter import INF, CoxeterMatrix
from .errors import InputError

MAX_NERVE_GENERATORS = 32


class SimplicialComplex:
    """An abstract finite complex with labeled vertices.

    The constructor closes the given faces under nonempty subsets and adds
    every listed vertex as a 0-simplex, so the invariants hold by
    construction.  Vertex labels are opaque hashables; faces are kept as
    tuples of vertex indices sorted per dimension.
    """

    def __init__(self, vertices, faces=()):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex labels must be distinct")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        if not self.vertices:
            self.faces_by_dim = ()
            self._face_set = set()
            return
        closed = {(i,) for i in range(len(self.vertices))}
        for face in faces:
            idx = tuple(sorted(set(face)))
            if not idx:
                raise InputError("faces must be nonempty")
            if idx[0] < 0 or idx[-1] >= len(self.vertices):
                raise InputError(f"face {face!r} references a missing vertex")
            for size in range(1, len(idx) + 1):
                for sub in combinations(idx, size):
                    closed.add(sub)
        by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(max(len(f) for f in closed))]
        for face in closed:
            by_dim[len(face) - 1].append(face)
        self.faces_by_dim = tuple(tuple(sorted(level)) for level in by_dim)
        self._face_set = closed

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    def faces(self, k: int) -> tuple[tuple[int, ...], ...]:
        if k < 0 or k > self.dim:
            return ()
        return self.faces_by_dim[k]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.faces_by_dim)

    def num_faces(self) -> int:
        return sum(self.f_vector())

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(level) for k, level in enumerate(self.faces_by_dim))

    def has_face(self, labels) -> bool:
        try:
            idx = tuple(sorted(self.vertex_index[v] for v in labels))
        except KeyError:
            return False
        return idx in self._face_set

    def face_labels(self, face) -> tuple:
        return tuple(self.vertices[i] for i in face)

    def all_faces(self):
        for level in self.faces_by_dim:
            yield from level

    def one_skeleton(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.vertices)))
        G.add_edges_from(self.faces(1))
        return G

    def to_dict(self) -> dict:
        return {
            "vertices": [_label_to_json(v) for v in self.vertices],
            "faces_by_dim": [[list(face) for face in level] for level in self.faces_by_dim],
        }

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.faces_by_dim == other.faces_by_dim
        )

    def __repr__(self):
        return f"SimplicialComplex(f_vector={self.f_vector()})"


def _label_to_json(label):
    if isinstance(label, tuple):
        return [_label_to_json(x) for x in label]
    return label


def nerve(M: CoxeterMatrix) -> SimplicialComplex:
    """The complex of nonempty spherical subsets of the generators.

    Grown level by level: a candidate (k+1)-subset is tested only when all
    its k-subsets are already spherical (sphericity is hereditary), then
    confirmed by classification of its components.
    """
    if M.n > MAX_NERVE_GENERATORS:
        raise InputError(f"nerve enumeration refuses {M.n} > {MAX_NERVE_GENERATORS} generators")
    n = M.n
    current = [(i,) for i in range(n)]
    faces = list(current)
    while current:
        prev = set(current)
        nxt = []
        for face in current:
            for j in range(face[-1] + 1, n):
                cand = face + (j,)
                if all(tuple(c for c in cand if c != drop) in prev for drop in cand):
                    if is_spherical(M, (M.generators[i] for i in cand)):
                        nxt.append(cand)
        faces.extend(nxt)
        current = nxt
    return SimplicialComplex(M.generators, faces)


def s_oslash(M: CoxeterMatrix) -> list[tuple[str, ...]]:
    """Irreducible nonempty spherical subsets, sorted by size then index order."""
    L = nerve(M)
    out = []
    for level in L.faces_by_dim:
        for face in level:
            names = L.face_labels(face)
            if len(M.components(names)) == 1:
                out.append(names)
    out.sort(key=lambda names: (len(names), tuple(M.generator_index(g) for g in names)))
    return out


def orthogonal(M: CoxeterMatrix, T1, T2) -> bool:
    """Disjoint with no diagram edge in between (infinity edges count)."""
    set1, set2 = set(T1), set(T2)
    if set1 & set2:
        return False
    for s in set1:
        for t in set2:
            lab = M.label(s, t)
            if lab == INF or lab > 2:
                return False
    return True


def comparable(T1, T2) -> bool:
    set1, set2 = set(T1), set(T2)
    return set1 < set2 or set2 < set1


def subdivide(M: CoxeterMatrix) -> SimplicialComplex:
    """Nested-set subdivision of the nerve.

    Vertices are the irreducible spherical subsets; two are joined when
    orthogonal or comparable, and the faces are all cliques of that graph
    (the subdivision is a flag complex).  The inductive nested-set
    definition is available separately as `nested_oracle` and is used by
    the verification suite to cross-validate this construction.
    """
    verts = s_oslash(M)
    k = len(verts)
    G = nx.Graph()
    G.add_nodes_from(range(k))
    for a in range(k):
        for b in range(a + 1, k):
            if comparable(verts[a], verts[b]) or orthogonal(M, verts[a], verts[b]):
                G.add_edge(a, b)
    faces = [tuple(sorted(clique)) for clique in nx.enumerate_all_cliques(G)]
    return SimplicialComplex(verts, faces)


def nested_oracle(M: CoxeterMatrix, alpha) -> bool:
    """Literal inductive definition of a nested family of irreducibles.

    The empty family is nested.  Otherwise the support must be spherical,
    the maximal members must be exactly the decomposition of the support
    into irreducibles, and each strict down-set must be nested in turn.
    """
    family = [tuple(M.canonical_subset(T)) for T in alpha]
    if len(set(family)) != len(family):
        raise InputError("nested families must not repeat members")
    return _nested(M, [set(T) for T in family])


def _nested(M, sets) -> bool:
    if not sets:
        return True
    support = set().union(*sets)
    if not is_spherical(M, support):
        return False
    maximal = [T for T in sets if not any(T < U for U in sets)]
    blocks = {frozenset(b) for b in M.components(support)}
    if {frozenset(T) for T in maximal} != blocks:
        return False
    for Ti in maximal:
        below = [T for T in sets if T < Ti]
        if not _nested(M, below):
            return False
    return True


def octahedralize(K: SimplicialComplex) -> SimplicialComplex:
    """Double every vertex with a sign; faces get all sign assignments.

    A k-face of K contributes 2^(k+1) faces, one per sign vector, so the
    result triangulates the boundary complex picture of crossed pairs.
    """
    vertices = []
    signed_index = {}
    for i, v in enumerate(K.vertices):
        for sign in (1, -1):
            signed_index[(i, sign)] = len(vertices)
            vertices.append((v, sign))
    faces = []
    for face in K.all_faces():
        for signs in product((1, -1), repeat=len(face)):
            faces.append(tuple(sorted(signed_index[(i, s)] for i, s in zip(face, signs))))
    return SimplicialComplex(vertices, faces)


def is_flag(K: SimplicialComplex) -> bool:
    """Every clique of the 1-skeleton spans a face."""
    for clique in nx.enumerate_all_cliques(K.one_skeleton()):
        if len(clique) >= 3 and tuple(sorted(clique)) not in K._face_set:
            return False
    return True
