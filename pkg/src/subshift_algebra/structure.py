"""Structural consequences of the reduction machinery.

Three groups of tools: enumeration of the minimal cycles without exit in a
shift (the hypothesis of the uniqueness theorem is that there are none), the
isomorphism between a corner at such a cycle and Laurent polynomials, and
spot checks backing semiprimeness over coefficient domains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraElement, SubshiftAlgebra
from .clopen import (ClopenSet, CycleKind, c_set, classify_cycle, cylinder,
                     empty_set, full_set)
from .errors import NotADomain, NotInCorner, NotMinimalCycle, ZeroInput
from .reduction import reduce as reduce_element
from .rings import ZZ
from .shift import FollowerGraph
from .words import OMEGA, Word, primitive_root


def find_cycles_without_exit(g: FollowerGraph) -> list[tuple[ClopenSet, Word]]:
    """All minimal cycles without exit, as (singleton set, primitive word)
    pairs, ordered by the cycle's least state.

    A cycle without exit is a singleton clopen set, which forces its word's
    forced path to close inside the out-degree-1 part of the follower graph;
    conversely every such graph cycle yields one.  So the enumeration walks
    the forced subgraph only.
    """
    forced = {}
    for s in g.states:
        out = g.out_edges(s)
        if len(out) == 1:
            forced[s] = out[0]
    results = []
    seen_cycles: set[frozenset[Word]] = set()
    for start in sorted(g.states):
        if start not in forced:
            continue
        path = []
        pos: dict[Word, int] = {}
        cur = start
        while cur in forced and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            cur = forced[cur][1]
        if cur not in pos:
            continue  # the forced walk left the forced subgraph
        cycle = path[pos[cur]:]
        key = frozenset(cycle)
        if key in seen_cycles:
            continue
        seen_cycles.add(key)
        s0 = min(cycle)
        i0 = cycle.index(s0)
        rotated = cycle[i0:] + cycle[:i0]
        labels = tuple(forced[s][0] for s in rotated)
        # The forced point from s0 is periodic with period len(cycle); its
        # primitive root is the cycle word aligned at s0.
        stream = s0 + labels * (g.m // len(labels) + 2)
        alpha, _ = primitive_root(stream[:len(cycle)])
        a_set = cylinder(g, s0)
        cc = classify_cycle(a_set, alpha)
        assert cc.kind is CycleKind.CYCLE_WITHOUT_EXIT and cc.minimal
        results.append((a_set, alpha))
    return results


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial as a finitely supported exponent-to-value map."""

    ring: object
    coeffs: dict[int, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {n: c for n, c in self.coeffs.items() if not self.ring.is_zero(c)}
        object.__setattr__(self, "coeffs", clean)

    def is_zero(self) -> bool:
        return not self.coeffs

    def add(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = self.ring.add(out.get(n, self.ring.zero()), c)
        return LaurentPoly(self.ring, out)

    def mul(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, object] = {}
        for n, c in self.coeffs.items():
            for m, d in other.coeffs.items():
                out[n + m] = self.ring.add(out.get(n + m, self.ring.zero()),
                                           self.ring.mul(c, d))
        return LaurentPoly(self.ring, out)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.ring == other.ring \
            and self.coeffs == other.coeffs

    __hash__ = None

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n in sorted(self.coeffs):
            c = self.ring.format(self.coeffs[n])
            if n == 0:
                parts.append(c)
            elif n == 1:
                parts.append(f"{c} x")
            else:
                parts.append(f"{c} x^{n}")
        text = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                text += " - " + part[1:]
            else:
                text += " + " + part
        return text

    def __repr__(self):
        return f"LaurentPoly({self.format()})"


def _require_minimal_cycle(a: ClopenSet, c: Word):
    cc = classify_cycle(a, c)
    if cc.kind is not CycleKind.CYCLE_WITHOUT_EXIT or not cc.minimal:
        raise NotMinimalCycle(f"({a.format()}, {c}) is not a minimal cycle without exit")


def corner_project(x: AlgebraElement, a: ClopenSet) -> AlgebraElement:
    """``p_A x p_A``."""
    proj = x.algebra.gen_p(a)
    return proj * x * proj


def corner_to_laurent(x: AlgebraElement, a: ClopenSet, c: Word) -> LaurentPoly:
    """Read a corner element as a Laurent polynomial: the coefficient of
    ``x^n`` sits at the graded component ``(c^n, omega)`` for positive n, at
    ``(omega, c^{|n|})`` for negative n, and at ``(omega, omega)`` for n=0."""
    _require_minimal_cycle(a, c)
    algebra = x.algebra
    if not corner_project(x, a).equals(x):
        raise NotInCorner("element does not equal p_A x p_A")
    coeffs: dict[int, object] = {}
    for (u, v), fn in x.components.items():
        if v == OMEGA and u == OMEGA:
            n = 0
        elif v == OMEGA and len(u) % len(c) == 0 and c * (len(u) // len(c)) == u:
            n = len(u) // len(c)
        elif u == OMEGA and len(v) % len(c) == 0 and c * (len(v) // len(c)) == v:
            n = -(len(v) // len(c))
        else:
            raise NotInCorner(f"component {(u, v)} lies outside the c-power family")
        vals = set(fn.coeffs.values())
        if len(vals) != 1:
            raise NotInCorner(f"component {(u, v)} is not a scalar multiple")
        coeffs[n] = vals.pop()
    return LaurentPoly(algebra.ring, coeffs)


def laurent_to_corner(poly: LaurentPoly, algebra: SubshiftAlgebra,
                      a: ClopenSet, c: Word) -> AlgebraElement:
    """Inverse map: ``x^n`` goes to ``s_c^n p_A`` (negative powers use the
    starred generator)."""
    _require_minimal_cycle(a, c)
    proj = algebra.gen_p(a)
    acc = algebra.zero()
    for n, coeff in poly.coeffs.items():
        if n >= 0:
            term = algebra.elem_s(c * n) * proj
        else:
            term = algebra.elem_s_star(c * (-n)) * proj
        acc = acc + term.scale(coeff)
    return acc


def square_nonzero_check(x: AlgebraElement) -> bool:
    """Reduce ``x`` and test that the square of the reduced element is
    nonzero.  Over a domain this always holds, which is the computational
    content of semiprimeness."""
    if not x.algebra.ring.is_domain:
        raise NotADomain("square check requires a coefficient domain")
    if x.is_zero():
        raise ZeroInput("square check requires a nonzero element")
    w = reduce_element(x)
    y = w.mu * x * w.nu
    return not (y * y).is_zero()


@dataclass
class RelationReport:
    checks: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def format(self) -> str:
        lines = [f"{self.checks} checks, {len(self.failures)} failures"]
        lines.extend(self.failures)
        return "\n".join(lines)


def relations_selftest(g: FollowerGraph, max_len: int,
                       ring=None) -> RelationReport:
    """Exhaustively check the defining relations up to the given word length.

    Family (i): projection identities over cylinders, followers and their
    complements; family (ii): the partial-isometry identities per letter;
    family (iii): ``s_beta s_alpha^* s_alpha s_beta^* = p_{C(alpha,beta)}``
    over all legal word pairs.
    """
    algebra = SubshiftAlgebra(g, ring if ring is not None else ZZ)
    checks = 0
    failures: list[str] = []
    spec = g.spec

    def note(ok: bool, label: str):
        nonlocal checks
        checks += 1
        if not ok:
            failures.append(f"residual: {label}")

    words: list[Word] = [OMEGA]
    for n in range(1, max_len + 1):
        words.extend(g.legal_words(n))

    one = algebra.one()
    note(algebra.gen_p(full_set(g)) == one, "p(X) = 1")
    note(algebra.gen_p(empty_set(g)).is_zero(), "p(0) = 0")

    family = []
    for w in words:
        family.append(("Z(%s)" % spec.word_to_str(w), cylinder(g, w)))
        family.append(("F(%s)" % spec.word_to_str(w), c_set(g, w, OMEGA)))
        family.append(("!Z(%s)" % spec.word_to_str(w), cylinder(g, w).complement()))
    for la, sa in family:
        for lb, sb in family:
            pa, pb = algebra.gen_p(sa), algebra.gen_p(sb)
            note(pa * pb == algebra.gen_p(sa.intersect(sb)),
                 f"p({la} & {lb}) = p({la}) p({lb})")
            note(pa + pb - algebra.gen_p(sa.intersect(sb))
                 == algebra.gen_p(sa.union(sb)),
                 f"p({la} | {lb}) = p + p - p(&)")

    for a in range(g.n_letters):
        sa, sas = algebra.gen_s(a), algebra.gen_s_star(a)
        sym = spec.alphabet[a]
        note(sa * sas * sa == sa, f"s({sym}) st({sym}) s({sym}) = s({sym})")
        note(sas * sa * sas == sas, f"st({sym}) s({sym}) st({sym}) = st({sym})")

    for alpha in words:
        for beta in words:
            lhs = algebra.elem_s(beta) * algebra.elem_s_star(alpha) \
                * algebra.elem_s(alpha) * algebra.elem_s_star(beta)
            rhs = algebra.gen_p(c_set(g, alpha, beta))
            note(lhs == rhs,
                 f"s({spec.word_to_str(beta)}) st({spec.word_to_str(alpha)}) "
                 f"s({spec.word_to_str(alpha)}) st({spec.word_to_str(beta)}) "
                 f"= p(C)")
    return RelationReport(checks, failures)
