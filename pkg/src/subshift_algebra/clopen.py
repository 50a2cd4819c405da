"""The Boolean algebra of clopen subsets of a shift of finite type.

A :class:`ClopenSet` is a finite union of cylinders, stored canonically as a
set of prefix-legal words of one common length (the resolution).  All Boolean
operations, containment, the relative range, and singleton detection are
decided exactly by refining operands to a common resolution.

The cornerstone identity making this complete for memory-m shifts: with
``|p| = m``, the set ``C(alpha, beta) = {beta.x in X : alpha.x in X}`` equals
the union of the cylinders ``Z_{beta.p}`` over all junctions ``p`` such that
``alpha.p`` and ``beta.p`` are prefix-legal.  (Windows of length m+1 in
``alpha.x`` either sit inside ``alpha.p`` or inside ``x``, so legality of the
junction word plus membership of the tail decides everything.)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .shift import FollowerGraph
from .words import OMEGA, EpPoint, Word, ep_normalize, is_minimal_cycle_word


@dataclass(frozen=True, eq=False)
class ClopenSet:
    graph: FollowerGraph
    resolution: int
    words: frozenset[Word]

    def __post_init__(self):
        if self.resolution < self.graph.m:
            raise ValueError("resolution must be at least the shift memory")
        for w in self.words:
            if len(w) != self.resolution:
                raise ValueError("all stored words must have the resolution length")
            if not self.graph.is_prefix_legal(w):
                raise ValueError(f"stored word is not prefix-legal: {w}")

    # -- canonical equality -------------------------------------------------

    def refine(self, n: int) -> "ClopenSet":
        if n < self.resolution:
            raise ValueError("refinement cannot lower the resolution")
        if n == self.resolution:
            return self
        g = self.graph
        new = frozenset(e for w in self.words for e in g.extensions(w, n))
        return ClopenSet(g, n, new)

    def _common(self, other: "ClopenSet") -> tuple["ClopenSet", "ClopenSet"]:
        if other.graph is not self.graph:
            raise ValueError("operands live over different shifts")
        n = max(self.resolution, other.resolution)
        return self.refine(n), other.refine(n)

    def equals(self, other: "ClopenSet") -> bool:
        a, b = self._common(other)
        return a.words == b.words

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # semantic equality; not hashable

    # -- Boolean operations --------------------------------------------------

    def union(self, other: "ClopenSet") -> "ClopenSet":
        a, b = self._common(other)
        return ClopenSet(self.graph, a.resolution, a.words | b.words)

    def intersect(self, other: "ClopenSet") -> "ClopenSet":
        a, b = self._common(other)
        return ClopenSet(self.graph, a.resolution, a.words & b.words)

    def difference(self, other: "ClopenSet") -> "ClopenSet":
        a, b = self._common(other)
        return ClopenSet(self.graph, a.resolution, a.words - b.words)

    def complement(self) -> "ClopenSet":
        full = frozenset(self.graph.legal_words(self.resolution))
        return ClopenSet(self.graph, self.resolution, full - self.words)

    def is_subset(self, other: "ClopenSet") -> bool:
        a, b = self._common(other)
        return a.words <= b.words

    def is_empty(self) -> bool:
        return not self.words

    __or__ = union
    __and__ = intersect
    __sub__ = difference

    # -- presentation ---------------------------------------------------------

    def compact(self, floor: int | None = None) -> "ClopenSet":
        """Merge full sibling families while every word's family is full.

        Keeps the uniform-resolution representation; never drops below
        ``floor`` (default: the shift memory).  Semantics are unchanged.
        """
        g = self.graph
        floor = g.m if floor is None else max(floor, g.m)
        res, words = self.resolution, self.words
        while res > floor and words:
            parents = {w[:-1] for w in words}
            ok = True
            for p in parents:
                children = {p + (a,) for a, _ in g.out_edges(p[-g.m:])}
                if not children <= words:
                    ok = False
                    break
            if not ok:
                break
            res -= 1
            words = frozenset(parents)
        if not words:
            res = floor
        return ClopenSet(g, res, words)

    def format(self) -> str:
        c = self.compact()
        spec = self.graph.spec
        body = " ".join(spec.word_to_str(w) for w in sorted(c.words))
        return "{%s}@%d" % (body, c.resolution)

    def __repr__(self):
        return f"ClopenSet({self.format()})"


# -- constructors -------------------------------------------------------------


def full_set(g: FollowerGraph) -> ClopenSet:
    return ClopenSet(g, g.m, frozenset(g.legal_words(g.m)))


def empty_set(g: FollowerGraph) -> ClopenSet:
    return ClopenSet(g, g.m, frozenset())


def cylinder(g: FollowerGraph, beta: Word) -> ClopenSet:
    """Canonical form of the cylinder ``Z_beta``; empty if ``beta`` is not
    prefix-legal."""
    n = max(g.m, len(beta)) + g.m
    return ClopenSet(g, n, frozenset(g.extensions(beta, n)))


def c_set(g: FollowerGraph, alpha: Word, beta: Word) -> ClopenSet:
    """The generator ``C(alpha, beta) = {beta.x in X : alpha.x in X}``."""
    words = set()
    for p in g.legal_words(g.m):
        if g.is_prefix_legal(alpha + p) and g.is_prefix_legal(beta + p):
            words.add(beta + p)
    return ClopenSet(g, len(beta) + g.m, frozenset(words))


def follower(g: FollowerGraph, alpha: Word) -> ClopenSet:
    """The follower set ``F_alpha = {x in X : alpha.x in X}``."""
    return c_set(g, alpha, OMEGA)


def refine(a: ClopenSet, n: int) -> ClopenSet:
    return a.refine(n)


def relative_range(a: ClopenSet, alpha: Word) -> ClopenSet:
    """``r(A, alpha) = {x in X : alpha.x in A}``.

    At resolution >= len(alpha) + m the rule is word-wise: a stored word
    ``alpha.p`` contributes its tail ``p`` (then ``Z_p`` lies inside
    ``F_alpha`` automatically), any other word contributes nothing.
    """
    g = a.graph
    n = max(a.resolution, len(alpha) + g.m)
    ref = a.refine(n)
    k = len(alpha)
    tails = frozenset(w[k:] for w in ref.words if w[:k] == alpha)
    return ClopenSet(g, n - k, tails)


def as_singleton(a: ClopenSet) -> EpPoint | None:
    """The unique point of ``a`` if it is a singleton set, else ``None``."""
    if len(a.words) != 1:
        return None
    (w,) = a.words
    return a.graph.unique_extension(w)


class CycleKind(Enum):
    NOT_A_CYCLE = "not-a-cycle"
    CYCLE_WITH_EXIT = "cycle-with-exit"
    CYCLE_WITHOUT_EXIT = "cycle-without-exit"


@dataclass(frozen=True)
class CycleClass:
    kind: CycleKind
    minimal: bool | None = None


def classify_cycle(a: ClopenSet, alpha: Word) -> CycleClass:
    """Classify the pair ``(a, alpha)``.

    A cycle means ``a`` is non-empty and ``a`` is contained in
    ``r(a, alpha)``; it has no exit exactly when ``a`` is the singleton
    ``{alpha^inf}``, and it is minimal when ``alpha`` is not a proper power.
    """
    if not alpha:
        raise ValueError("cycle word must be non-empty")
    if a.is_empty() or not a.is_subset(relative_range(a, alpha)):
        return CycleClass(CycleKind.NOT_A_CYCLE)
    point = as_singleton(a)
    if point is not None:
        assert point == ep_normalize(OMEGA, alpha), \
            "a singleton cycle set must be the periodic point of its word"
        return CycleClass(CycleKind.CYCLE_WITHOUT_EXIT, is_minimal_cycle_word(alpha))
    return CycleClass(CycleKind.CYCLE_WITH_EXIT)
