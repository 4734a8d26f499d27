"""Computational verification of the structural facts the bounds rest on.

Each check re-derives one fact from scratch (root enumeration against the
closed-form catalog, flagness and the inductive nested-set definition
against the clique construction, Smith forms against rank and lattice
claims) on a fixed corpus plus seeded random matrices.  A failure here
means an implementation bug, never a property of the input, so the CLI
maps it to its own exit code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .abelian import StandardAbelianComplex
from .classify import FiniteType, catalog, is_spherical, recognize_finite_type
from .complexes import is_flag, nerve, nested_oracle, subdivide, s_oslash
from .coxeter import INF, CoxeterMatrix, parse_coxeter_matrix
from .errors import LemmaViolation
from .homology import reduced_betti_mod2
from .library import generate_example
from .roots import bilinear_form, choose_r, longest_element, positive_roots

VERIFY_CORPUS = (
    "a_1", "a_2", "a_3", "b_3", "d_4", "f4", "h3", "i2_4", "i2_5", "i2_7",
    "a1xa1", "two-points-inf", "raag-cycle-4", "pentagon-3",
    "affine-triangle", "rp2-nerve",
)

RANDOM_LABELS = (2, 3, 4, 5, INF)
RANDOM_WEIGHTS = (30, 25, 10, 5, 30)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{status}  {self.name}: {self.cases} cases{suffix}"


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: list[str] = []
        self.notes: list[str] = []

    def record(self, ok: bool, message: str = ""):
        self.cases += 1
        if not ok:
            self.failures.append(message)

    def note(self, message: str):
        self.notes.append(message)

    def result(self) -> CheckResult:
        parts = self.failures[:3] + self.notes[:2]
        return CheckResult(self.name, not self.failures, self.cases, "; ".join(parts))


def random_coxeter_matrix(rng: random.Random, max_generators: int = 6) -> CoxeterMatrix:
    n = rng.randint(1, max_generators)
    gens = [f"g{i}" for i in range(n)]
    rels = {}
    for i in range(n):
        for j in range(i + 1, n):
            rels[(gens[i], gens[j])] = rng.choices(RANDOM_LABELS, weights=RANDOM_WEIGHTS)[0]
    return CoxeterMatrix.from_relations(gens, rels)


def type_matrix(t: FiniteType) -> CoxeterMatrix:
    """Standard Coxeter matrix of a finite type, via the named examples."""
    if t.family == "I2":
        name = f"i2_{t.p}"
    elif t.family in ("E6", "E7", "E8", "F4", "H3", "H4"):
        name = t.family.lower()
    else:
        name = f"{t.family.lower()}_{t.rank}"
    return parse_coxeter_matrix(generate_example(name))


def all_catalog_types(max_rank: int = 8, max_p: int = 50):
    types = [FiniteType("A", n) for n in range(1, max_rank + 1)]
    types += [FiniteType("B", n) for n in range(2, max_rank + 1)]
    types += [FiniteType("D", n) for n in range(4, max_rank + 1)]
    types += [FiniteType("E6", 6), FiniteType("E7", 7), FiniteType("E8", 8),
              FiniteType("F4", 4), FiniteType("H3", 3), FiniteType("H4", 4)]
    types += [FiniteType("I2", 2, p) for p in range(3, max_p + 1)]
    return types


# -- per-matrix checks ------------------------------------------------------


def _root_negation_ok(M: CoxeterMatrix, root) -> bool:
    support = root.support
    if set(root.word) != set(support):
        return False
    local = {g: i for i, g in enumerate(support)}
    B = bilinear_form(M, support)
    vec = np.array([root.coeffs[M.generator_index(g)] for g in support])
    out = vec.copy()
    for g in reversed(root.word):
        a = local[g]
        out[a] -= 2.0 * float(B[a] @ out)
    return bool(np.abs(out + vec).max() < 1e-6)


def check_reflection_counts(M: CoxeterMatrix, tally: _Tally):
    """Root count == catalog count == longest-element length, per subset;
    words are odd palindromes whose letters are the support and whose
    action negates the root."""
    for T in s_oslash(M):
        t = recognize_finite_type(M, T)
        expected = catalog(t).num_reflections
        roots = positive_roots(M, T)
        longest = longest_element(M, T)
        ok = (
            len(roots) == expected
            and longest.length == expected
            and all(len(r.word) % 2 == 1 for r in roots)
            and all(_root_negation_ok(M, r) for r in roots)
        )
        tally.record(ok, f"{T} expected {expected}, got {len(roots)} roots / length {longest.length}")


def check_centerless_agreement(M: CoxeterMatrix, tally: _Tally):
    """Catalog centerlessness == nontriviality of the diagram involution."""
    for T in s_oslash(M):
        t = recognize_finite_type(M, T)
        longest = longest_element(M, T)
        nontrivial = any(longest.involution[g] != g for g in T)
        tally.record(nontrivial == catalog(t).centerless,
                     f"{T}: involution nontrivial={nontrivial}, catalog says {catalog(t).centerless}")


def check_choose_r_injective(M: CoxeterMatrix, tally: _Tally):
    seen = {}
    for T in s_oslash(M):
        r = choose_r(M, T)
        ok = r.support == T and r.key() not in seen
        seen[r.key()] = T
        tally.record(ok, f"choose_r({T}) support {r.support}")


def check_subdivision_flag(M: CoxeterMatrix, tally: _Tally):
    tally.record(is_flag(subdivide(M)), f"subdivision of {M.generators} is not flag")


def check_nested_equivalence(M: CoxeterMatrix, tally: _Tally, visit_cap: int = 1_000_000):
    """Faces of the clique construction == families accepted by the
    inductive definition, over all subsets of size <= dim+2 with spherical
    support (branches with nonspherical support are neither, and stay so
    under extension)."""
    sub = subdivide(M)
    verts = list(sub.vertices)
    face_set = {frozenset(sub.face_labels(f)) for f in sub.all_faces()}
    max_size = min(len(verts), sub.dim + 2)
    visited = 0
    mismatches = []

    def extend(chosen, start):
        nonlocal visited
        for i in range(start, len(verts)):
            if visited >= visit_cap:
                return
            cand = chosen + [verts[i]]
            support = set().union(*(set(T) for T in cand))
            spherical = is_spherical(M, support)
            as_face = frozenset(cand) in face_set
            if not spherical:
                if as_face:
                    mismatches.append(f"face {cand} has nonspherical support")
                continue
            visited += 1
            nested = nested_oracle(M, cand)
            if nested != as_face:
                mismatches.append(f"{cand}: nested={nested}, face={as_face}")
            if len(cand) < max_size:
                extend(cand, i + 1)

    extend([], 0)
    if visited >= visit_cap:
        tally.note(f"enumeration truncated at {visit_cap} subsets on {M.generators}")
    tally.record(not mismatches, "; ".join(mismatches[:2]))


def check_subdivision_betti(M: CoxeterMatrix, tally: _Tally):
    """Same reduced mod-2 profile before and after subdividing, matching
    Euler characteristics, equal dimensions."""
    L = nerve(M)
    sub = subdivide(M)
    b1 = reduced_betti_mod2(L)
    b2 = reduced_betti_mod2(sub)
    euler = lambda K, b: K.euler_characteristic() == 1 + sum((-1) ** k * x for k, x in enumerate(b))
    ok = b1 == b2 and L.dim == sub.dim and euler(L, b1) and euler(sub, b2)
    ok = ok and L.euler_characteristic() == sub.euler_characteristic()
    tally.record(ok, f"{M.generators}: {b1} vs {b2}")


def check_abelian(M: CoxeterMatrix, rank_tally: _Tally, pairing_tally: _Tally,
                  iso_tally: _Tally, lattice_tally: _Tally | None = None,
                  pair_cap: int = 2000, rng: random.Random | None = None):
    """Full-rank indicator matrix, the containment pairing, per-face rank,
    and (optionally) pairwise lattice intersections."""
    try:
        ctx = StandardAbelianComplex(M)
    except LemmaViolation as exc:
        rank_tally.record(False, str(exc))
        return
    column_sums_ok = all(
        sum(ctx.columns[T]) == catalog(recognize_finite_type(M, T)).num_reflections
        for T in ctx.subsets
    )
    rank_tally.record(column_sums_ok, f"an indicator column lost rows on {M.generators}")
    pairing_tally.record(ctx.pairing_check(), f"pairing failed on {M.generators}")
    faces = list(ctx.all_faces())
    for face in faces:
        iso_tally.record(ctx.face_rank_check(face), f"rank deficit at {face}")
    if lattice_tally is None:
        return
    pairs = [(a, b) for i, a in enumerate(faces) for b in faces[i:]]
    if len(pairs) > pair_cap:
        sampler = rng or random.Random(0)
        pairs = sampler.sample(pairs, pair_cap)
    for a, b in pairs:
        lattice_tally.record(ctx.lattice_intersection_check(a, b),
                             f"lattice mismatch at {a} vs {b}")


# -- classification oracle --------------------------------------------------


def cosine_positive_definite(M: CoxeterMatrix, T, tol: float = 1e-9) -> bool:
    """Leading principal minors of the cosine matrix, the float oracle the
    exact recognizer must agree with."""
    B = bilinear_form(M, T)
    for k in range(1, B.shape[0] + 1):
        if np.linalg.det(B[:k, :k]) <= tol:
            return False
    return True


TRICKY_DIAGRAMS = (
    # connected diagrams near the finite/infinite border, as (n, edges)
    (3, {(0, 1): 3, (1, 2): 3, (0, 2): 3}),        # 3-cycle
    (3, {(0, 1): 4, (1, 2): 4}),                   # (4,4) path
    (3, {(0, 1): 3, (1, 2): 6}),                   # (3,6) path
    (4, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (0, 3): 3}),  # 4-cycle
    (4, {(0, 1): 3, (1, 2): 4, (2, 3): 4}),        # (3,4,4) path
    (4, {(0, 1): 5, (1, 2): 3, (2, 3): 4}),        # (5,3,4) path
    (4, {(0, 1): 3, (1, 2): 5, (2, 3): 3}),        # 5 in the middle
    (5, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 4}),  # 4 at the end (finite B_5)
    (5, {(0, 1): 4, (1, 2): 3, (2, 3): 3, (3, 4): 4}),  # two 4s
    (5, {(0, 1): 3, (1, 2): 3, (1, 3): 3, (1, 4): 3}),  # degree-4 star
    (5, {(0, 1): 5, (1, 2): 3, (2, 3): 3, (3, 4): 3}),  # no rank-5 H family
    (9, {(i, i + 1): 3 for i in range(7)} | {(5, 8): 3}),  # overlong branch arm
)


def check_classification_oracle(tally: _Tally, seed: int = 0, samples: int = 200):
    """Exact recognizer vs positive-definiteness of the cosine matrix, on
    the catalog, a list of near-miss diagrams, and random connected
    diagrams with <= 8 vertices and labels <= 50."""
    for t in all_catalog_types():
        M = type_matrix(t)
        T = M.generators
        got = recognize_finite_type(M, T)
        # rank-2 aliases (B2 = I2(4), A2 = I2(3)) share their catalog data,
        # so agreement is judged on the catalog entry, not the family name
        ok = got is not None and cosine_positive_definite(M, T)
        if ok:
            ok = (catalog(got).num_reflections == catalog(t).num_reflections
                  and catalog(got).centerless == catalog(t).centerless)
            if t.rank != 2:
                ok = ok and got == t
        tally.record(ok, f"{t}: recognized {got}, oracle {cosine_positive_definite(M, T)}")
    for n, edges in TRICKY_DIAGRAMS:
        gens = [f"g{i}" for i in range(n)]
        rels = {(gens[i], gens[j]): lab for (i, j), lab in edges.items()}
        M = CoxeterMatrix.from_relations(gens, rels)
        finite = recognize_finite_type(M, M.generators) is not None
        tally.record(finite == cosine_positive_definite(M, M.generators),
                     f"near-miss {edges}: recognized finite={finite}")
    rng = random.Random(seed)
    produced = 0
    while produced < samples:
        n = rng.randint(1, 8)
        gens = [f"g{i}" for i in range(n)]
        rels = {}
        for i in range(n):
            for j in range(i + 1, n):
                rels[(gens[i], gens[j])] = rng.choices(
                    (2, 3, 4, 5, 6, rng.randint(7, 50)), weights=(45, 20, 10, 8, 7, 10))[0]
        M = CoxeterMatrix.from_relations(gens, rels)
        for block in M.components(M.generators):
            finite = recognize_finite_type(M, block) is not None
            tally.record(finite == cosine_positive_definite(M, block),
                         f"random diagram {block}: recognized finite={finite}")
            produced += 1


# -- whole runs -------------------------------------------------------------


@dataclass
class VerificationRun:
    checks: list[CheckResult] = field(default_factory=list)
    matrices: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "matrices": self.matrices,
            "checks": [
                {"name": c.name, "passed": c.passed, "cases": c.cases, "detail": c.detail}
                for c in self.checks
            ],
        }

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def corpus_matrices() -> list[CoxeterMatrix]:
    return [parse_coxeter_matrix(generate_example(name)) for name in VERIFY_CORPUS]


def run_verification(M: CoxeterMatrix | None = None, seed: int = 0,
                     n_structure: int = 200, n_lattice: int = 50,
                     n_betti: int = 100, pair_cap: int = 2000,
                     oracle_samples: int = 200,
                     include_corpus: bool = True) -> VerificationRun:
    """The full suite: fixed corpus, the given matrix (if any), and seeded
    random matrices; lattice pair checks run on a separate <= 5 generator
    stream."""
    tallies = {
        name: _Tally(name)
        for name in (
            "classification-oracle", "reflection-counts", "centerless-agreement",
            "choose-r-injective", "subdivision-flag", "nested-equivalence",
            "subdivision-betti", "j-matrix-rank", "reflection-pairing",
            "abelian-ranks", "lattice-intersections",
        )
    }
    check_classification_oracle(tallies["classification-oracle"], seed=seed, samples=oracle_samples)

    rng = random.Random(seed)
    structure_pool = [random_coxeter_matrix(rng, 6) for _ in range(n_structure)]
    lattice_pool = [random_coxeter_matrix(rng, 5) for _ in range(n_lattice)]
    sampler = random.Random(seed + 1)

    base: list[CoxeterMatrix] = corpus_matrices() if include_corpus else []
    if M is not None:
        base.insert(0, M)

    count = 0
    for i, matrix in enumerate(base + structure_pool):
        count += 1
        is_random = i >= len(base)
        is_input = M is not None and i == 0
        check_reflection_counts(matrix, tallies["reflection-counts"])
        check_centerless_agreement(matrix, tallies["centerless-agreement"])
        check_choose_r_injective(matrix, tallies["choose-r-injective"])
        check_subdivision_flag(matrix, tallies["subdivision-flag"])
        check_nested_equivalence(matrix, tallies["nested-equivalence"])
        if not is_random or i - len(base) < n_betti:
            check_subdivision_betti(matrix, tallies["subdivision-betti"])
        exhaustive = (not is_random and matrix.n <= 5) or (is_input and matrix.n <= 6)
        check_abelian(
            matrix,
            tallies["j-matrix-rank"], tallies["reflection-pairing"], tallies["abelian-ranks"],
            lattice_tally=tallies["lattice-intersections"] if exhaustive else None,
            pair_cap=pair_cap, rng=sampler,
        )
    for matrix in lattice_pool:
        count += 1
        check_abelian(
            matrix,
            tallies["j-matrix-rank"], tallies["reflection-pairing"], tallies["abelian-ranks"],
            lattice_tally=tallies["lattice-intersections"],
            pair_cap=pair_cap, rng=sampler,
        )

    run = VerificationRun([t.result() for t in tallies.values()], count)
    return run
