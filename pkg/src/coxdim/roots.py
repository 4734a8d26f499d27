"""Positive roots, reflection words, longest elements, and Artin-word lifts.

Spherical special subgroups act on the simple-root coordinate space through
the cosine bilinear form.  Enumerating the orbit of the simple roots under
that action yields every positive root together with a shortest conjugating
path back to a simple reflection; the palindrome along that path is a
reduced word for the corresponding reflection, and its prefix gives the
conjugator used by the Artin-group loop words.

Coordinates are double precision.  Coefficient gaps in finite systems of
rank <= 8 (the largest we accept) are enormous compared to the 1e-6
dedup/rounding grid, so identity of roots is decided on rounded vectors.
The reflection counts themselves are cross-checked against the exact
catalog by the test suite, never trusted to floating point alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import catalog, is_spherical, recognize_finite_type
from .coxeter import INF, CoxeterMatrix
from .errors import InputError, LemmaViolation

ROUND_DECIMALS = 6
ZERO_TOL = 1e-6
MAX_SPHERICAL_RANK = 9


@dataclass(frozen=True)
class Root:
    """A positive root in global simple-root coordinates.

    coeffs is indexed by all generators of the ambient system (zero off the
    spanning subset); word is a reduced word for the reflection, recorded as
    the palindrome conjugating path found during enumeration; support is
    the set of generators with nonzero coefficient, which equals the set of
    letters of word.
    """

    coeffs: tuple[float, ...]
    word: tuple[str, ...]
    support: tuple[str, ...]

    def key(self) -> tuple[float, ...]:
        return tuple(round(c, ROUND_DECIMALS) + 0.0 for c in self.coeffs)

    @property
    def depth(self) -> int:
        return len(self.word) // 2

    def conjugator(self) -> tuple[str, ...]:
        """The prefix w of the palindrome w s w^-1."""
        return self.word[: len(self.word) // 2]

    def pivot(self) -> str:
        """The central letter s of the palindrome w s w^-1."""
        return self.word[len(self.word) // 2]


@dataclass(frozen=True)
class LongestElement:
    word: tuple[str, ...]
    length: int
    involution: dict[str, str]

    def __post_init__(self):
        object.__setattr__(self, "involution", dict(self.involution))


@dataclass(frozen=True)
class ArtinWord:
    """A word in the Artin generators and their inverses."""

    letters: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for g, e in self.letters:
            if e not in (1, -1):
                raise InputError(f"exponents must be +1 or -1, got {e}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "ArtinWord") -> "ArtinWord":
        return ArtinWord(self.letters + other.letters)

    def inverse(self) -> "ArtinWord":
        return ArtinWord(tuple((g, -e) for g, e in reversed(self.letters)))

    @classmethod
    def from_generators(cls, gens, exponent: int = 1) -> "ArtinWord":
        return cls(tuple((g, exponent) for g in gens))


@dataclass(frozen=True)
class DeltaWords:
    """Artin lift of the longest element and the central power it generates."""

    half_twist: ArtinWord    # lift of w_T, all exponents +1
    center: ArtinWord        # the half twist, squared unless already central
    half_twist_central: bool


def bilinear_form(M: CoxeterMatrix, T) -> np.ndarray:
    """Cosine matrix on T: 1 on the diagonal, -cos(pi/m) off it, inf -> -1."""
    names = M.canonical_subset(T)
    if not names:
        raise InputError("T must be nonempty")
    k = len(names)
    B = np.eye(k)
    for a in range(k):
        for b in range(a + 1, k):
            lab = M.label(names[a], names[b])
            value = -1.0 if lab == INF else -math.cos(math.pi / lab)
            B[a, b] = B[b, a] = value
    return B


def _local_key(vec: np.ndarray) -> tuple[float, ...]:
    return tuple(round(float(c), ROUND_DECIMALS) + 0.0 for c in vec)


def positive_roots(M: CoxeterMatrix, T) -> list[Root]:
    """All positive roots of the finite group generated by T.

    Breadth-first closure from the simple roots: applying a generator to a
    known positive root either negates it (dropped) or lands on another
    positive root.  The first level at which a root appears determines a
    minimal conjugating path; among same-level discoveries the
    lexicographically smallest palindrome word is kept.  Results are sorted
    by rounded coefficient vector, then word.
    """
    names = M.canonical_subset(T)
    if not names:
        raise InputError("T must be nonempty")
    if len(names) > MAX_SPHERICAL_RANK:
        raise InputError(f"refusing root enumeration on {len(names)} generators (finite rank tops out at 8)")
    if not is_spherical(M, names):
        raise InputError(f"subset {names!r} is not spherical")

    k = len(names)
    B = bilinear_form(M, names)
    local = {g: a for a, g in enumerate(names)}

    found: dict[tuple, tuple[np.ndarray, tuple[str, ...]]] = {}
    frontier: list[tuple[np.ndarray, tuple[str, ...]]] = []
    for g in names:
        vec = np.zeros(k)
        vec[local[g]] = 1.0
        found[_local_key(vec)] = (vec, (g,))
        frontier.append((vec, (g,)))

    while frontier:
        candidates: dict[tuple, tuple[np.ndarray, tuple[str, ...]]] = {}
        for g in names:
            a = local[g]
            row = B[a]
            for vec, word in frontier:
                new = vec.copy()
                new[a] -= 2.0 * float(row @ vec)
                if new.min() < -ZERO_TOL:
                    continue  # negated a simple root: not a new positive root
                key = _local_key(new)
                if key in found:
                    continue
                cand_word = (g,) + word + (g,)
                prev = candidates.get(key)
                if prev is None or _word_rank(M, cand_word) < _word_rank(M, prev[1]):
                    candidates[key] = (new, cand_word)
        frontier = [candidates[key] for key in sorted(candidates)]
        found.update(candidates)

    roots = []
    for vec, word in found.values():
        coeffs = [0.0] * M.n
        support = []
        for a, g in enumerate(names):
            c = float(vec[a])
            coeffs[M.generator_index(g)] = c
            if abs(c) > ZERO_TOL:
                support.append(g)
        roots.append(Root(tuple(coeffs), word, tuple(support)))
    roots.sort(key=lambda r: (r.key(), _word_rank(M, r.word)))
    return roots


def _word_rank(M: CoxeterMatrix, word) -> tuple[int, ...]:
    return tuple(M.generator_index(g) for g in word)


def choose_r(M: CoxeterMatrix, T) -> Root:
    """A canonical full-support root of an irreducible spherical subset.

    Among roots supported on all of T, returns the one with
    lexicographically largest rounded coefficient vector; for the
    crystallographic types that is the highest root.
    """
    names = M.canonical_subset(T)
    if not names:
        raise InputError("T must be nonempty")
    if len(M.components(names)) != 1:
        raise InputError(f"subset {names!r} is reducible")
    full = [r for r in positive_roots(M, names) if r.support == names]
    if not full:
        raise LemmaViolation(f"no full-support root over {names!r}; root enumeration is broken")
    return max(full, key=lambda r: r.key())


def _reflection_matrix(B: np.ndarray, a: int) -> np.ndarray:
    S = np.eye(B.shape[0])
    S[a, :] -= 2.0 * B[a, :]
    return S


def longest_element(M: CoxeterMatrix, T) -> LongestElement:
    """Greedy construction of the longest element of a spherical subset.

    At each step the lowest-indexed generator whose simple root is still
    sent to a positive root is appended; the walk stops exactly at the
    longest element, whose length must equal the total reflection count.
    The diagram involution is read off from where the longest element sends
    each simple root (always the negative of another simple root).
    """
    names = M.canonical_subset(T)
    if not names:
        raise InputError("T must be nonempty")
    if len(names) > MAX_SPHERICAL_RANK:
        raise InputError(f"refusing longest-element search on {len(names)} generators")
    if not is_spherical(M, names):
        raise InputError(f"subset {names!r} is not spherical")

    k = len(names)
    B = bilinear_form(M, names)
    refl = [_reflection_matrix(B, a) for a in range(k)]
    expected = sum(catalog(recognize_finite_type(M, block)).num_reflections for block in M.components(names))
    action = np.eye(k)
    word: list[str] = []
    while True:
        if len(word) > expected:
            raise LemmaViolation(f"ascent walk over {names!r} exceeded the reflection count {expected}")
        for a in range(k):
            if action[:, a].min() > -ZERO_TOL:
                word.append(names[a])
                action = action @ refl[a]
                break
        else:
            break

    involution = {}
    for a in range(k):
        col = action[:, a]
        b = int(np.argmin(col))
        others = np.delete(col, b)
        if abs(col[b] + 1.0) > ZERO_TOL or (others.size and np.abs(others).max() > ZERO_TOL):
            raise LemmaViolation(f"longest element of {names!r} does not permute the simple roots")
        involution[names[a]] = names[b]

    if len(word) != expected:
        raise LemmaViolation(
            f"longest element of {names!r} has length {len(word)}, catalog says {expected}"
        )
    return LongestElement(tuple(word), len(word), involution)


def delta_words(M: CoxeterMatrix, T) -> DeltaWords:
    """Artin half twist of an irreducible spherical subset and its central power.

    The half twist is the letterwise lift of the longest element's reduced
    word.  It is itself central exactly when the diagram involution is the
    identity; otherwise the generator of the center is its square.
    """
    names = M.canonical_subset(T)
    if not names:
        raise InputError("T must be nonempty")
    if len(M.components(names)) != 1:
        raise InputError(f"subset {names!r} is reducible")
    longest = longest_element(M, names)
    half = ArtinWord.from_generators(longest.word)
    central = all(longest.involution[g] == g for g in names)
    center = half if central else half * half
    return DeltaWords(half, center, central)


def epsilon_r_word(root: Root) -> ArtinWord:
    """Loop word of a reflection: conjugate of a squared generator.

    For the recorded factorization r = w s w^-1, returns a_w a_s^2 a_w^-1;
    its length is twice the orbit depth plus two.
    """
    w = ArtinWord.from_generators(root.conjugator())
    s = root.pivot()
    square = ArtinWord(((s, 1), (s, 1)))
    return w * square * w.inverse()
