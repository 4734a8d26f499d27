"""The complex of standard abelian subgroups, at the abelianized level.

Every irreducible spherical subset contributes a central loop class whose
image in the abelianized pure Artin group is the indicator vector of its
reflections.  Stacking those vectors over a finite reflection index gives
an integer matrix whose column arithmetic (rank, lattice intersections)
realizes the subgroup lattice questions exactly.  The ambient free abelian
group on all reflections is truncated to the reflections of the
irreducible spherical subsets; every vector handled here is supported
there, so nothing is lost by the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import is_spherical
from .complexes import subdivide, s_oslash
from .coxeter import CoxeterMatrix
from .errors import InputError, LemmaViolation
from .homology import IntMatrix, SmithForm, smith_form
from .roots import ArtinWord, Root, choose_r, delta_words, positive_roots


@dataclass(frozen=True)
class ReflectionIndex:
    """Deduplicated union of the positive roots over all irreducible
    spherical subsets, with a fixed row order (first seen wins, walking the
    subsets by size then index order)."""

    roots: tuple[Root, ...]
    row_of: dict[tuple[float, ...], int]

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class StandardAbelianSubgroup:
    simplex: tuple[tuple[str, ...], ...]
    generators: tuple[tuple[tuple[str, ...], ArtinWord], ...]
    rank: int


def reflection_index(M: CoxeterMatrix, subsets=None) -> ReflectionIndex:
    if subsets is None:
        subsets = s_oslash(M)
    roots: list[Root] = []
    row_of: dict[tuple[float, ...], int] = {}
    for T in subsets:
        for root in positive_roots(M, T):
            key = root.key()
            if key not in row_of:
                row_of[key] = len(roots)
                roots.append(root)
    return ReflectionIndex(tuple(roots), row_of)


def e_vector(M: CoxeterMatrix, T, idx: ReflectionIndex) -> list[int]:
    """Indicator vector of the reflections of T inside the index."""
    names = M.canonical_subset(T)
    if len(M.components(names)) != 1 or not is_spherical(M, names):
        raise InputError(f"{names!r} is not an irreducible spherical subset")
    vec = [0] * len(idx)
    for root in positive_roots(M, names):
        key = root.key()
        if key not in idx.row_of:
            raise InputError(f"reflection index does not cover {names!r}")
        vec[idx.row_of[key]] = 1
    return vec


def j_matrix(M: CoxeterMatrix) -> IntMatrix:
    """Columns are the subset indicator vectors, in subset order.

    The matrix must have full column rank (each subset owns a reflection no
    proper part of it contains); a deficiency would contradict that and
    raises LemmaViolation.
    """
    return StandardAbelianComplex(M).j


class StandardAbelianComplex:
    """Cached view of one Coxeter matrix's abelian-subgroup arrangement.

    Bundles the subdivision, the reflection index, the indicator columns,
    and per-face Smith forms so that pairwise lattice checks do not
    recompute root systems.
    """

    def __init__(self, M: CoxeterMatrix):
        self.M = M
        self.subsets = s_oslash(M)
        self.index = reflection_index(M, self.subsets)
        self.columns = {T: e_vector(M, T, self.index) for T in self.subsets}
        self.subdivision = subdivide(M)
        entries = [[self.columns[T][r] for T in self.subsets] for r in range(len(self.index))]
        self.j = IntMatrix(entries, len(self.subsets))
        sf = smith_form(self.j)
        if sf.rank != len(self.subsets):
            raise LemmaViolation(
                f"indicator columns have rank {sf.rank} < {len(self.subsets)}; "
                "independence of the central classes failed"
            )
        self._face_forms: dict[tuple, SmithForm] = {}

    def canonical_face(self, alpha) -> tuple[tuple[str, ...], ...]:
        face = tuple(sorted((self.M.canonical_subset(T) for T in alpha),
                            key=lambda T: (len(T), tuple(self.M.generator_index(g) for g in T))))
        labels = set(self.subdivision.vertices)
        for T in face:
            if T not in labels:
                raise InputError(f"{T!r} is not an irreducible spherical subset")
        if not self.subdivision.has_face(face):
            raise InputError(f"{face!r} is not a face of the subdivision")
        return face

    def face_matrix(self, face) -> IntMatrix:
        cols = [self.columns[T] for T in face]
        return IntMatrix([[col[r] for col in cols] for r in range(len(self.index))], len(face))

    def _form(self, face) -> SmithForm:
        if face not in self._face_forms:
            self._face_forms[face] = smith_form(self.face_matrix(face))
        return self._face_forms[face]

    def lattice_intersection_check(self, alpha, beta) -> bool:
        """Whether the column lattices of two faces meet exactly in the
        lattice of their shared vertices.

        The intersection is computed from the integer kernel of the
        concatenated block [A | -B]; equality with the shared-vertex
        lattice is tested by two-sided integer solvability.
        """
        fa = self.canonical_face(alpha)
        fb = self.canonical_face(beta)
        shared = tuple(T for T in fa if T in fb)
        A = self.face_matrix(fa)
        B = self.face_matrix(fb)
        rows = len(self.index)
        stacked = IntMatrix([A.entries[r] + [-x for x in B.entries[r]] for r in range(rows)],
                            A.ncols + B.ncols)
        kernel = smith_form(stacked).kernel_basis()
        meet_vectors = []
        for combo in kernel:
            x = combo[: A.ncols]
            meet_vectors.append(A.mat_vec(x))

        if shared:
            shared_form = self._form(shared)
            if not all(shared_form.solve(v) for v in meet_vectors):
                return False
        else:
            if not all(all(c == 0 for c in v) for v in meet_vectors):
                return False

        # containment the other way: each shared column must lie in the meet
        if shared:
            if not meet_vectors:
                return False
            meet = IntMatrix([[v[r] for v in meet_vectors] for r in range(rows)], len(meet_vectors))
            meet_form = smith_form(meet)
            for T in shared:
                if not meet_form.solve(self.columns[T]):
                    return False
        return True

    def standard_abelian_subgroup(self, alpha) -> StandardAbelianSubgroup:
        face = self.canonical_face(alpha)
        gens = tuple((T, delta_words(self.M, T).center) for T in face)
        return StandardAbelianSubgroup(face, gens, len(face))

    def face_rank_check(self, alpha) -> bool:
        """Columns of a face are independent with full rank |alpha|."""
        face = self.canonical_face(alpha)
        return self._form(face).rank == len(face)

    def all_faces(self):
        for level in self.subdivision.faces_by_dim:
            for face in level:
                yield self.subdivision.face_labels(face)

    def pairing_check(self) -> bool:
        """The chosen full-support reflection of T meets the indicator of
        T' once when T is contained in T' and never otherwise."""
        for T in self.subsets:
            row = self.index.row_of[choose_r(self.M, T).key()]
            for U in self.subsets:
                expected = 1 if set(T) <= set(U) else 0
                if self.columns[U][row] != expected:
                    return False
        return True


def lattice_intersection_check(M: CoxeterMatrix, alpha, beta) -> bool:
    return StandardAbelianComplex(M).lattice_intersection_check(alpha, beta)


def standard_abelian_subgroup(M: CoxeterMatrix, alpha) -> StandardAbelianSubgroup:
    return StandardAbelianComplex(M).standard_abelian_subgroup(alpha)
