"""Word combinatorics over finite alphabets.

Words are tuples of letter indices.  The empty word is ``()``.  Everything in
this module is independent of any particular shift space; periodicity facts
(common roots of commuting words, primitivity, minimal cycle words) live here
together with a canonical form for eventually periodic one-sided sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import Inconsistent, NotCommuting, PowersDiffer

Word = tuple[int, ...]

OMEGA: Word = ()


def word_power(w: Word, n: int) -> Word:
    return w * n


def commuting_root(alpha: Word, beta: Word) -> tuple[Word, int, int]:
    """Common root of two commuting non-empty words.

    Returns ``(c, n, m)`` with ``alpha == c*n``, ``beta == c*m`` and
    ``len(c) == gcd(len(alpha), len(beta))``.  Uses the subtractive Euclid
    descent: when ``alpha*beta == beta*alpha`` and ``len(alpha) >= len(beta)``,
    ``beta`` is a prefix of ``alpha`` and the pair ``(alpha[len(beta):], beta)``
    still commutes.
    """
    if not alpha or not beta:
        raise NotCommuting("commuting_root requires non-empty words")
    if alpha + beta != beta + alpha:
        raise NotCommuting(f"words do not commute: {alpha!r}, {beta!r}")
    a, b = alpha, beta
    while a and b:
        if len(a) < len(b):
            a, b = b, a
        a = a[len(b):]
    c = a or b
    n, m = len(alpha) // len(c), len(beta) // len(c)
    assert c * n == alpha and c * m == beta
    assert len(c) == gcd(len(alpha), len(beta))
    return c, n, m


def common_power_root(alpha: Word, beta: Word, p: int, q: int) -> tuple[Word, int, int]:
    """Common root of words with a common power ``alpha^p == beta^q``.

    Returns ``(c, m, n)`` with ``alpha == c*m`` and ``beta == c*n``.  A common
    power forces the two words to commute, so the search reduces to
    :func:`commuting_root`.
    """
    if not alpha or not beta:
        raise PowersDiffer("common_power_root requires non-empty words")
    if word_power(alpha, p) != word_power(beta, q):
        raise PowersDiffer(f"alpha^{p} != beta^{q}")
    c, m, n = commuting_root(alpha, beta)
    return c, m, n


def multi_common_root(words: list[Word], powers: list[int]) -> tuple[Word, list[int]]:
    """Common root ``c`` with ``words[i] == c * exps[i]`` for all ``i``.

    Precondition: all words non-empty, all powers >= 1, and the powered words
    ``words[i]^powers[i]`` pairwise equal.
    """
    if not words or len(words) != len(powers):
        raise Inconsistent("need matching non-empty word and power lists")
    if any(not w for w in words):
        raise Inconsistent("all words must be non-empty")
    if any(p < 1 for p in powers):
        raise Inconsistent("all powers must be >= 1")
    ref = word_power(words[0], powers[0])
    for w, p in zip(words, powers):
        if word_power(w, p) != ref:
            raise Inconsistent("powered words are not pairwise equal")
    c = words[0]
    exps = [1]
    for i in range(1, len(words)):
        # c^(len(ref)/len(c)) == ref == words[i]^powers[i], so c and words[i]
        # share a root.
        root, m, n = common_power_root(c, words[i], len(ref) // len(c), powers[i])
        exps = [e * m for e in exps]
        exps.append(n)
        c = root
    assert all(word_power(c, e) == w for w, e in zip(words, exps))
    return c, exps


def primitive_root(alpha: Word) -> tuple[Word, int]:
    """Shortest word ``c`` with ``alpha == c^k``; ``c`` is primitive."""
    if not alpha:
        raise ValueError("primitive_root requires a non-empty word")
    n = len(alpha)
    for d in range(1, n + 1):
        if n % d == 0 and alpha[:d] * (n // d) == alpha:
            return alpha[:d], n // d
    raise AssertionError("unreachable: d == n always works")


def is_minimal_cycle_word(alpha: Word) -> bool:
    """True iff no strictly shorter non-empty ``beta`` satisfies
    ``beta + alpha^inf == alpha^inf``.

    Checks the infinite-word condition directly on prefixes (a prefix of
    length ``len(beta) + 2*len(alpha)`` decides it), then cross-checks against
    primitivity.
    """
    if not alpha:
        raise ValueError("is_minimal_cycle_word requires a non-empty word")
    n = len(alpha)
    minimal = True
    for lb in range(1, n):
        depth = lb + 2 * n
        reps = depth // n + 2
        stream = alpha * reps
        beta = stream[:lb]
        if (beta + stream)[:depth] == stream[:depth]:
            minimal = False
            break
    assert minimal == (primitive_root(alpha)[1] == 1)
    return minimal


@dataclass(frozen=True)
class EpPoint:
    """Canonical form of the eventually periodic sequence pre + per^inf.

    Canonical means: the period is primitive, and the preperiod cannot be
    rolled into the period (its last letter differs from the period's last
    letter).  Two inputs denote the same sequence iff their canonical forms
    are equal.
    """

    preperiod: Word
    period: Word

    def prefix(self, n: int) -> Word:
        reps = max(0, (n - len(self.preperiod))) // len(self.period) + 2
        return (self.preperiod + self.period * reps)[:n]

    def letter(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]


def ep_normalize(pre: Word, per: Word) -> EpPoint:
    """Canonical :class:`EpPoint` for the sequence ``pre + per^inf``."""
    if not per:
        raise ValueError("period must be non-empty")
    per, _ = primitive_root(per)
    pre = tuple(pre)
    # Roll the junction: pre.x + (q.x)^inf == pre + (x.q)^inf.
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1:] + per[:-1]
    return EpPoint(pre, per)


def ep_shift(x: EpPoint) -> EpPoint:
    """Canonical form of the shifted sequence (first letter dropped)."""
    if x.preperiod:
        return ep_normalize(x.preperiod[1:], x.period)
    return ep_normalize(OMEGA, x.period[1:] + x.period[:1])
