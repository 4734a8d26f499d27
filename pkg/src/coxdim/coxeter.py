"""Coxeter matrices and their diagrams.

A Coxeter matrix on a finite generating set assigns to every unordered
pair of distinct generators a label in {2, 3, 4, ...} or infinity (the
diagonal is implicitly 1).  The diagram has an edge wherever the label
exceeds 2; infinity counts as an edge.  Everything downstream (finite-type
recognition, root systems, nerves) is driven by this one object, so it is
immutable after construction and validates eagerly.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping

from .errors import InputError

INF = math.inf

_ALLOWED_DEFAULTS = (2, "inf")


def label_is_valid(value) -> bool:
    """True for an integer >= 2 or the infinity marker."""
    if value == INF:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 2


def label_from_json(value):
    """Decode a label: "inf" -> math.inf, integers pass through."""
    if value == "inf":
        return INF
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise InputError(f"label must be an integer or \"inf\", got {value!r}")


def label_to_json(value):
    return "inf" if value == INF else value


class CoxeterMatrix:
    """Symmetric pair-label matrix over an ordered generator list.

    Generators keep their input order; that order fixes every deterministic
    ordering used elsewhere (subset canonicalization, face sorting, root
    enumeration).
    """

    def __init__(self, generators: Iterable[str], labels: Mapping[tuple[str, str], object]):
        gens = tuple(generators)
        if not gens:
            raise InputError("at least one generator is required")
        seen = set()
        for g in gens:
            if not isinstance(g, str) or not g:
                raise InputError(f"generator names must be nonempty strings, got {g!r}")
            if g in seen:
                raise InputError(f"duplicate generator {g!r}")
            seen.add(g)
        self._generators = gens
        self._index = {g: i for i, g in enumerate(gens)}
        m = {}
        for (s, t), value in labels.items():
            i, j = self.generator_index(s), self.generator_index(t)
            if i == j:
                raise InputError(f"off-diagonal label given for ({s},{s})")
            key = (min(i, j), max(i, j))
            if key in m and m[key] != value:
                raise InputError(f"conflicting labels for pair ({s},{t})")
            if not label_is_valid(value):
                raise InputError(f"label for ({s},{t}) must be an integer >= 2 or \"inf\", got {value!r}")
            m[key] = value
        n = len(gens)
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in m:
                    raise InputError(f"missing label for pair ({gens[i]},{gens[j]})")
        self._m = m
        # memo for pure subset queries (components, type recognition,
        # sphericity); the matrix is immutable so entries never invalidate
        self._memo: dict = {}

    @classmethod
    def from_relations(cls, generators, relations: Mapping[tuple[str, str], object], default=2):
        """Construct with unlisted pairs taking `default` (2 or INF)."""
        if default != INF and default != 2:
            raise InputError(f"default must be 2 or INF, got {default!r}")
        gens = tuple(generators)
        labels = dict(relations)
        listed = {frozenset(k) for k in relations}
        for i, s in enumerate(gens):
            for t in gens[i + 1:]:
                if frozenset((s, t)) not in listed:
                    labels[(s, t)] = default
        return cls(gens, labels)

    # -- basic queries ---------------------------------------------------

    @property
    def generators(self) -> tuple[str, ...]:
        return self._generators

    @property
    def n(self) -> int:
        return len(self._generators)

    def generator_index(self, g: str) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise InputError(f"unknown generator {g!r}") from None

    def label(self, s: str, t: str):
        i, j = self.generator_index(s), self.generator_index(t)
        if i == j:
            return 1
        return self._m[(min(i, j), max(i, j))]

    def label_ij(self, i: int, j: int):
        if i == j:
            return 1
        return self._m[(min(i, j), max(i, j))]

    def canonical_subset(self, T: Iterable[str]) -> tuple[str, ...]:
        """Sort a generator subset into index order, validating membership."""
        idx = sorted({self.generator_index(g) for g in T})
        return tuple(self._generators[i] for i in idx)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoxeterMatrix)
            and self._generators == other._generators
            and self._m == other._m
        )

    def __hash__(self):
        return hash((self._generators, tuple(sorted(self._m.items()))))

    def __repr__(self):
        return f"CoxeterMatrix(generators={self._generators!r})"

    # -- diagram ---------------------------------------------------------

    def diagram(self) -> "Diagram":
        edges = {}
        for (i, j), value in self._m.items():
            if value == INF or value > 2:
                edges[(self._generators[i], self._generators[j])] = value
        return Diagram(self._generators, edges)

    def components(self, T: Iterable[str]) -> list[tuple[str, ...]]:
        """Connected components of the diagram induced on T.

        Blocks come back sorted by their smallest generator index; each
        block is itself in index order.
        """
        idx = sorted({self.generator_index(g) for g in T})
        memo_key = ("components", tuple(idx))
        cached = self._memo.get(memo_key)
        if cached is not None:
            return list(cached)
        in_T = set(idx)
        blocks = []
        unvisited = set(idx)
        for start in idx:
            if start not in unvisited:
                continue
            stack = [start]
            unvisited.discard(start)
            block = [start]
            while stack:
                u = stack.pop()
                for v in in_T:
                    if v in unvisited and self.label_ij(u, v) != 2 and u != v:
                        unvisited.discard(v)
                        stack.append(v)
                        block.append(v)
            blocks.append(tuple(self._generators[i] for i in sorted(block)))
        self._memo[memo_key] = tuple(blocks)
        return blocks


class Diagram:
    """Labeled graph form of a Coxeter matrix (edges where the label > 2)."""

    def __init__(self, vertices: tuple[str, ...], edges: Mapping[tuple[str, str], object]):
        self.vertices = tuple(vertices)
        self.edges = dict(edges)

    def edge_list(self) -> list[tuple[str, str, object]]:
        return [(s, t, v) for (s, t), v in sorted(self.edges.items())]

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __repr__(self):
        return f"Diagram(vertices={self.vertices!r}, edges={self.edges!r})"


# -- document I/O --------------------------------------------------------


def parse_coxeter_matrix(document) -> CoxeterMatrix:
    """Build a validated CoxeterMatrix from an input document.

    The document is a JSON object (or already-parsed dict) with fields
    "generators" (array of distinct nonempty strings), "default" (2 or
    "inf", applied to every unlisted pair) and "relations" (array of
    {"pair": [s, t], "m": integer >= 2 or "inf"}).  Duplicate pair entries
    are an error, as is any label below 2.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError(f"not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from None
    if not isinstance(document, dict):
        raise InputError("input document must be a JSON object")
    try:
        generators = document["generators"]
    except KeyError:
        raise InputError("missing \"generators\" field") from None
    if "default" not in document:
        raise InputError("missing \"default\" field (2 or \"inf\")")
    default_raw = document["default"]
    if default_raw not in _ALLOWED_DEFAULTS:
        raise InputError(f"\"default\" must be 2 or \"inf\", got {default_raw!r}")
    default = label_from_json(default_raw)
    if not isinstance(generators, list):
        raise InputError("\"generators\" must be an array of strings")

    gens = tuple(generators)
    index = {}
    for g in gens:
        if not isinstance(g, str) or not g:
            raise InputError(f"generator names must be nonempty strings, got {g!r}")
        if g in index:
            raise InputError(f"duplicate generator {g!r}")
        index[g] = len(index)

    labels = {}
    seen_pairs = set()
    for entry in document.get("relations", []):
        if not isinstance(entry, dict) or "pair" not in entry or "m" not in entry:
            raise InputError(f"relation entries need \"pair\" and \"m\": {entry!r}")
        pair = entry["pair"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"\"pair\" must list two generators: {pair!r}")
        s, t = pair
        for g in (s, t):
            if g not in index:
                raise InputError(f"relation references unknown generator {g!r}")
        if s == t:
            raise InputError(f"relation pairs a generator with itself: {s!r}")
        key = (min(index[s], index[t]), max(index[s], index[t]))
        if key in seen_pairs:
            raise InputError(f"duplicate relation for pair ({s},{t})")
        seen_pairs.add(key)
        value = entry["m"]
        decoded = label_from_json(value)
        if not label_is_valid(decoded):
            raise InputError(f"label for ({s},{t}) must be >= 2 or \"inf\", got {value!r}")
        labels[(s, t)] = decoded

    n = len(gens)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in seen_pairs:
                labels[(gens[i], gens[j])] = default
    return CoxeterMatrix(gens, labels)


def serialize_coxeter_matrix(M: CoxeterMatrix) -> dict:
    """Emit the canonical document: default 2, one relation per pair with m != 2."""
    relations = []
    gens = M.generators
    for i in range(M.n):
        for j in range(i + 1, M.n):
            value = M.label_ij(i, j)
            if value != 2:
                relations.append({"pair": [gens[i], gens[j]], "m": label_to_json(value)})
    return {"generators": list(gens), "default": 2, "relations": relations}
