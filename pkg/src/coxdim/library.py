"""Named example inputs used by the docs, the demos, and the test corpus."""

from __future__ import annotations

import re
from itertools import combinations

from .errors import InputError

_LETTERS = "abcdefghijklmnopqrstuvwxyz"

# Minimal 6-vertex triangulation of the projective plane (antipodal quotient
# of the icosahedron).  Used below through its edge subdivision, which is a
# flag complex; no Coxeter matrix on 6 generators has the unsubdivided
# complex as its nerve.
RP2_SIX_VERTEX_FACES = (
    (0, 1, 2), (0, 1, 4), (0, 2, 3), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 3, 5), (2, 3, 4), (2, 4, 5),
)


def _names(n: int) -> list[str]:
    if n <= len(_LETTERS):
        return list(_LETTERS[:n])
    return [f"s{i}" for i in range(n)]


def _document(generators, relations, default=2) -> dict:
    return {
        "generators": list(generators),
        "default": default,
        "relations": [{"pair": [s, t], "m": m} for (s, t), m in relations],
    }


def _path(n: int, labels) -> dict:
    gens = _names(n)
    rels = [((gens[i], gens[i + 1]), labels[i]) for i in range(n - 1)]
    return _document(gens, rels)


def _rp2_subdivided_edges() -> tuple[list[str], list[tuple[str, str]]]:
    base = _LETTERS[:6]

    def mid(i, j):
        i, j = sorted((i, j))
        return base[i] + base[j]

    gens = list(base) + [mid(i, j) for i, j in combinations(range(6), 2)]
    edges = set()
    for a, b, c in RP2_SIX_VERTEX_FACES:
        A, B, C = base[a], base[b], base[c]
        ab, ac, bc = mid(a, b), mid(a, c), mid(b, c)
        for tri in ((A, ab, ac), (B, ab, bc), (C, ac, bc), (ab, ac, bc)):
            for x, y in combinations(sorted(tri), 2):
                edges.add((x, y))
    return gens, sorted(edges)


def generate_example(name: str) -> dict:
    """Emit the input document for a named builtin example.

    Families take a numeric suffix (a_3, b_5, d_4, i2_7, raag-cycle-4);
    fixed names are e6, e7, e8, f4, h3, h4, pentagon-3, two-points-inf,
    a1xa1, affine-triangle, and rp2-nerve.
    """
    m = re.fullmatch(r"a_(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise InputError("a_n needs n >= 1")
        return _path(n, [3] * (n - 1))
    m = re.fullmatch(r"b_(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise InputError("b_n needs n >= 2")
        return _path(n, [3] * (n - 2) + [4])
    m = re.fullmatch(r"d_(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 4:
            raise InputError("d_n needs n >= 4")
        gens = _names(n)
        rels = [((gens[i], gens[i + 1]), 3) for i in range(n - 2)]
        rels.append(((gens[1], gens[n - 1]), 3))
        return _document(gens, rels)
    m = re.fullmatch(r"i2_(\d+)", name)
    if m:
        p = int(m.group(1))
        if p < 3:
            raise InputError("i2_p needs p >= 3")
        return _document(["a", "b"], [(("a", "b"), p)])
    m = re.fullmatch(r"raag-cycle-(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 4:
            raise InputError("raag-cycle-n needs n >= 4")
        gens = _names(n)
        rels = [((gens[i], gens[(i + 1) % n]), 2) for i in range(n)]
        return _document(gens, rels, default="inf")

    if name == "e6":
        gens = _names(6)
        rels = [((gens[i], gens[i + 1]), 3) for i in range(4)] + [((gens[2], gens[5]), 3)]
        return _document(gens, rels)
    if name == "e7":
        gens = _names(7)
        rels = [((gens[i], gens[i + 1]), 3) for i in range(5)] + [((gens[3], gens[6]), 3)]
        return _document(gens, rels)
    if name == "e8":
        gens = _names(8)
        rels = [((gens[i], gens[i + 1]), 3) for i in range(6)] + [((gens[4], gens[7]), 3)]
        return _document(gens, rels)
    if name == "f4":
        return _path(4, [3, 4, 3])
    if name == "h3":
        return _path(3, [5, 3])
    if name == "h4":
        return _path(4, [5, 3, 3])
    if name == "pentagon-3":
        gens = _names(5)
        rels = [((gens[i], gens[(i + 1) % 5]), 3) for i in range(5)]
        return _document(gens, rels, default="inf")
    if name == "two-points-inf":
        return _document(["a", "b"], [], default="inf")
    if name == "a1xa1":
        return _document(["a", "b"], [])
    if name == "affine-triangle":
        gens = _names(3)
        rels = [((s, t), 3) for s, t in combinations(gens, 2)]
        return _document(gens, rels)
    if name == "rp2-nerve":
        gens, edges = _rp2_subdivided_edges()
        return _document(gens, [(e, 2) for e in edges], default="inf")
    raise InputError(f"unknown example {name!r}")


BUILTIN_EXAMPLES = (
    "a_1", "a_2", "a_3", "b_3", "d_4", "e6", "e7", "e8", "f4", "h3", "h4",
    "i2_4", "i2_5", "i2_7", "raag-cycle-4", "pentagon-3", "two-points-inf",
    "a1xa1", "affine-triangle", "rp2-nerve",
)
