"""Shifts of finite type over finite alphabets and their follower graphs.

A shift is presented by an alphabet and a finite set of forbidden words.  The
follower graph is the standard memory-m automaton (states = legal m-blocks,
pruned to the states of out-degree >= 1) whose infinite paths are exactly the
points of the shift.  It decides prefix legality, i.e. non-emptiness of
cylinders, which is what every other module builds on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyShift
from .words import OMEGA, EpPoint, Word, ep_normalize


def _has_forbidden_factor(w: Word, forbidden: frozenset[Word]) -> bool:
    if not forbidden:
        return False
    lengths = {len(f) for f in forbidden}
    for i in range(len(w)):
        for L in lengths:
            if i + L <= len(w) and w[i:i + L] in forbidden:
                return True
    return False


@dataclass(frozen=True)
class SftSpec:
    """Presentation of a shift of finite type.

    ``alphabet`` is an ordered list of distinct printable one-character
    symbols; internally letters are indices into it.  ``forbidden`` is
    normalized: duplicates removed and any word containing another forbidden
    word as a factor is pruned.
    """

    alphabet: tuple[str, ...]
    forbidden: frozenset[Word]

    def __post_init__(self):
        if not self.alphabet:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")
        if any(not f for f in self.forbidden):
            raise ValueError("forbidden words must be non-empty")
        for f in self.forbidden:
            if any(a < 0 or a >= len(self.alphabet) for a in f):
                raise ValueError(f"forbidden word uses an out-of-range letter: {f}")
        pruned = frozenset(
            f for f in self.forbidden
            if not _has_forbidden_factor(f, self.forbidden - {f})
        )
        object.__setattr__(self, "forbidden", pruned)

    @staticmethod
    def make(alphabet: str | list[str], forbidden_words: list[str] = ()) -> "SftSpec":
        symbols = tuple(alphabet)
        index = {s: i for i, s in enumerate(symbols)}
        forb = frozenset(tuple(index[ch] for ch in w) for w in forbidden_words)
        return SftSpec(symbols, forb)

    @property
    def memory(self) -> int:
        longest = max((len(f) for f in self.forbidden), default=0)
        return max(1, longest - 1)

    def word_to_str(self, w: Word) -> str:
        return "".join(self.alphabet[a] for a in w) if w else "_"

    def str_to_word(self, text: str) -> Word:
        if text == "_":
            return OMEGA
        index = {s: i for i, s in enumerate(self.alphabet)}
        return tuple(index[ch] for ch in text)


class FollowerGraph:
    """Pruned memory-m transition automaton of an SFT.

    States are the legal m-blocks that admit an infinite continuation;
    ``edges[(state, letter)]`` gives the successor m-block.  Built through
    :func:`build_follower_graph`.
    """

    def __init__(self, spec: SftSpec, states: frozenset[Word],
                 edges: dict[tuple[Word, int], Word]):
        self.spec = spec
        self.states = states
        self.edges = edges
        self.m = spec.memory
        self.n_letters = len(spec.alphabet)
        self._out: dict[Word, tuple[tuple[int, Word], ...]] = {}
        for (u, a), v in sorted(edges.items()):
            self._out.setdefault(u, ())
            self._out[u] = self._out[u] + ((a, v),)
        self._legal_cache: dict[int, tuple[Word, ...]] = {}

    def out_edges(self, state: Word) -> tuple[tuple[int, Word], ...]:
        return self._out.get(state, ())

    def is_prefix_legal(self, w: Word) -> bool:
        """True iff the cylinder of ``w`` is non-empty."""
        if len(w) < self.m:
            return any(s[:len(w)] == w for s in self.states)
        if w[-self.m:] not in self.states:
            return False
        if _has_forbidden_factor(w, self.spec.forbidden):
            return False
        return True

    def legal_words(self, n: int) -> tuple[Word, ...]:
        """All prefix-legal words of length ``n``, lexicographically sorted."""
        if n < 0:
            raise ValueError("length must be >= 0")
        if n not in self._legal_cache:
            if n < self.m:
                words = sorted({s[:n] for s in self.states})
            else:
                words = sorted(self._walk(n))
            self._legal_cache[n] = tuple(words)
        return self._legal_cache[n]

    def _walk(self, n: int) -> list[Word]:
        level = {s: s for s in self.states}  # word -> current state
        for _ in range(n - self.m):
            nxt = {}
            for w, s in level.items():
                for a, v in self.out_edges(s):
                    nxt[w + (a,)] = v
            level = nxt
        return list(level)

    def extensions(self, w: Word, n: int) -> list[Word]:
        """Prefix-legal extensions of ``w`` to length ``n`` (``n >= len(w)``)."""
        if n < len(w):
            raise ValueError("cannot extend to a shorter length")
        if not self.is_prefix_legal(w):
            return []
        if len(w) < self.m:
            return [e for e in self.legal_words(n) if e[:len(w)] == w]
        frontier = [w]
        while frontier and len(frontier[0]) < n:
            frontier = [u + (a,)
                        for u in frontier
                        for a, _ in self.out_edges(u[-self.m:])]
        return sorted(frontier)

    def unique_extension(self, w: Word) -> EpPoint | None:
        """The single point of ``Z_w`` when the continuation is forced.

        Present iff every state reachable from the suffix state of ``w`` has
        out-degree exactly 1; the forced path closes into a cycle within
        ``len(states)`` steps.
        """
        if len(w) < self.m or not self.is_prefix_legal(w):
            raise ValueError("unique_extension needs a prefix-legal word of length >= memory")
        start = w[-self.m:]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            out = self.out_edges(u)
            if len(out) != 1:
                return None
            _, v = out[0]
            if v not in seen:
                seen.add(v)
                stack.append(v)
        letters: list[int] = []
        pos = {start: 0}
        cur = start
        while True:
            a, cur = self.out_edges(cur)[0]
            letters.append(a)
            if cur in pos:
                j = pos[cur]
                break
            pos[cur] = len(letters)
        pre = w + tuple(letters[:j])
        per = tuple(letters[j:])
        return ep_normalize(pre, per)


def build_follower_graph(spec: SftSpec) -> FollowerGraph:
    """Build the pruned follower automaton; raises :class:`EmptyShift` if the
    shift has no points."""
    m = spec.memory
    k = len(spec.alphabet)

    def blocks(n: int):
        if n == 0:
            yield OMEGA
            return
        for w in blocks(n - 1):
            for a in range(k):
                yield w + (a,)

    candidates = {w for w in blocks(m) if not _has_forbidden_factor(w, spec.forbidden)}
    edges: dict[tuple[Word, int], Word] = {}
    for u in candidates:
        for a in range(k):
            ext = u + (a,)
            if _has_forbidden_factor(ext, spec.forbidden):
                continue
            v = ext[-m:]
            if v in candidates:
                edges[(u, a)] = v
    # Prune to the retention fixpoint: drop states with no outgoing edge.
    states = set(candidates)
    changed = True
    while changed:
        changed = False
        live = {u for (u, _a), v in edges.items() if v in states}
        dead = states - live
        if dead:
            states -= dead
            edges = {(u, a): v for (u, a), v in edges.items()
                     if u in states and v in states}
            changed = True
    if not states:
        raise EmptyShift("all states pruned; the shift space is empty")
    return FollowerGraph(spec, frozenset(states), edges)


def is_prefix_legal(g: FollowerGraph, w: Word) -> bool:
    return g.is_prefix_legal(w)


def enumerate_prefix_legal(g: FollowerGraph, n: int) -> tuple[Word, ...]:
    return g.legal_words(n)
