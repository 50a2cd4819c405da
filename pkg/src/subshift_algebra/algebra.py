"""Faithful arithmetic for the unital algebra of a shift of finite type.

Elements are stored in the skew-ring normal form: a finitely supported map
from reduced free-group word pairs ``(u, v)`` (meaning the group element
``u v^{-1}``) to coefficient functions supported on clopen sets.  The
component at ``(u, v)`` must be supported inside ``C(v, u)``, i.e. on legal
words ``u.p`` such that ``v.p`` is also legal.

Multiplication follows the partial-action formula: to multiply a component
``f`` at ``s = (u, v)`` with ``g`` at ``t = (u', v')``, translate the support
of ``f`` by ``u.p -> v.p``, multiply pointwise with ``g`` at a common
resolution, translate back by ``v.q -> u.q``, and place the result at the
reduced product ``s t``.  If the reduced product is not of the shape
(positive word)(negative word)^{-1} the contribution is zero.

Zero is the empty component map; because zero coefficients are purged
eagerly, ``is_zero`` and ``equals`` are exact for every coefficient ring,
including ones with zero divisors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clopen import ClopenSet, cylinder, full_set
from .errors import RingMismatch
from .rings import Ring
from .shift import FollowerGraph
from .words import OMEGA, Word

Pair = tuple[Word, Word]


@dataclass(frozen=True)
class CoeffFn:
    """Finitely supported function on clopen sets: resolution-N words mapped
    to nonzero ring values."""

    resolution: int
    coeffs: dict[Word, object]


def _fn_refine(fn: CoeffFn, n: int, g: FollowerGraph) -> CoeffFn:
    if n == fn.resolution:
        return fn
    if n < fn.resolution:
        raise ValueError("cannot lower a coefficient function's resolution")
    out = {}
    for w, c in fn.coeffs.items():
        for e in g.extensions(w, n):
            out[e] = c
    return CoeffFn(n, out)


def _fn_add(a: CoeffFn, b: CoeffFn, ring: Ring, g: FollowerGraph) -> CoeffFn | None:
    n = max(a.resolution, b.resolution)
    ar, br = _fn_refine(a, n, g), _fn_refine(b, n, g)
    out = dict(ar.coeffs)
    for w, c in br.coeffs.items():
        if w in out:
            s = ring.add(out[w], c)
            if ring.is_zero(s):
                del out[w]
            else:
                out[w] = s
        else:
            out[w] = c
    return CoeffFn(n, out) if out else None


def _fn_translate(fn: CoeffFn, old: Word, new: Word, g: FollowerGraph) -> CoeffFn:
    """Support translation ``old.p -> new.p`` (the partial action on words)."""
    k = len(old)
    out = {}
    for w, c in fn.coeffs.items():
        assert w[:k] == old, "translation prefix missing from support word"
        nw = new + w[k:]
        assert g.is_prefix_legal(nw), "translated word must stay legal"
        out[nw] = c
    return CoeffFn(fn.resolution - k + len(new), out)


def _fn_compact(fn: CoeffFn, floor: int, g: FollowerGraph) -> CoeffFn:
    res, coeffs = fn.resolution, fn.coeffs
    while res > floor and coeffs:
        parents: dict[Word, list[Word]] = {}
        for w in coeffs:
            parents.setdefault(w[:-1], []).append(w)
        ok = True
        for p, kids in parents.items():
            children = {p + (a,) for a, _ in g.out_edges(p[-g.m:])}
            if set(kids) != children or len({coeffs[k] for k in kids}) != 1:
                ok = False
                break
        if not ok:
            break
        res -= 1
        coeffs = {p: coeffs[kids[0]] for p, kids in parents.items()}
    return CoeffFn(res, dict(coeffs))


def _common_prefix_len(a: Word, b: Word) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


def _strip_common_suffix(u: Word, v: Word) -> Pair:
    k = 0
    while k < len(u) and k < len(v) and u[-1 - k] == v[-1 - k]:
        k += 1
    return (u[:len(u) - k], v[:len(v) - k]) if k else (u, v)


class SubshiftAlgebra:
    """Context object: a shift's follower graph plus a coefficient ring."""

    def __init__(self, graph: FollowerGraph, ring: Ring):
        self.graph = graph
        self.ring = ring

    # -- constructors ---------------------------------------------------------

    def element(self, components: dict[Pair, CoeffFn]) -> "AlgebraElement":
        return AlgebraElement(self, components)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.gen_p(full_set(self.graph))

    def gen_p(self, a: ClopenSet) -> "AlgebraElement":
        if a.graph is not self.graph:
            raise RingMismatch("clopen set belongs to a different shift")
        if a.is_empty():
            return self.zero()
        one = self.ring.one()
        fn = CoeffFn(a.resolution, {w: one for w in a.words})
        return AlgebraElement(self, {(OMEGA, OMEGA): fn})

    def gen_s(self, letter: int) -> "AlgebraElement":
        return self.elem_s((letter,))

    def gen_s_star(self, letter: int) -> "AlgebraElement":
        return self.elem_s_star((letter,))

    def elem_s(self, alpha: Word) -> "AlgebraElement":
        """The monomial ``s_alpha`` (``s_omega`` is the unit)."""
        if alpha == OMEGA:
            return self.one()
        g = self.graph
        words = g.extensions(alpha, len(alpha) + g.m)
        if not words:
            return self.zero()
        one = self.ring.one()
        fn = CoeffFn(len(alpha) + g.m, {w: one for w in words})
        return AlgebraElement(self, {(alpha, OMEGA): fn})

    def elem_s_star(self, beta: Word) -> "AlgebraElement":
        return self.elem_s(beta).star()

    def mono(self, alpha: Word, a: ClopenSet, beta: Word) -> "AlgebraElement":
        """``s_alpha p_A s_beta^*``; zero exactly when A, F_alpha and F_beta
        have empty intersection."""
        return self.elem_s(alpha) * self.gen_p(a) * self.elem_s_star(beta)

    def scale(self, r, x: "AlgebraElement") -> "AlgebraElement":
        return x.scale(r)

    def __eq__(self, other):
        return isinstance(other, SubshiftAlgebra) and \
            other.graph is self.graph and other.ring == self.ring

    __hash__ = None


class AlgebraElement:
    """An element in canonical skew-ring form.  Immutable by convention."""

    def __init__(self, algebra: SubshiftAlgebra, components: dict[Pair, CoeffFn]):
        self.algebra = algebra
        g = algebra.graph
        ring = algebra.ring
        clean: dict[Pair, CoeffFn] = {}
        for (u, v), fn in components.items():
            if u and v and u[-1] == v[-1]:
                raise ValueError(f"component pair not reduced: {(u, v)}")
            if fn.resolution < len(u) + g.m:
                fn = _fn_refine(fn, len(u) + g.m, g)
            coeffs = {w: c for w, c in fn.coeffs.items() if not ring.is_zero(c)}
            if not coeffs:
                continue
            for w in coeffs:
                if w[:len(u)] != u or not g.is_prefix_legal(v + w[len(u):]):
                    raise ValueError(
                        f"support word {w} violates the W-constraint of {(u, v)}")
            clean[(u, v)] = CoeffFn(fn.resolution, coeffs)
        self.components = clean

    # -- basic structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.components

    def f_grade_support(self) -> set[Pair]:
        return set(self.components)

    def z_grade_component(self, n: int) -> "AlgebraElement":
        comps = {t: fn for t, fn in self.components.items()
                 if len(t[0]) - len(t[1]) == n}
        return AlgebraElement(self.algebra, comps)

    def component_element(self, t: Pair) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {t: self.components[t]})

    def support_set(self, t: Pair) -> ClopenSet:
        fn = self.components[t]
        return ClopenSet(self.algebra.graph, fn.resolution, frozenset(fn.coeffs))

    def tail_set(self, t: Pair) -> ClopenSet:
        """For a positive component ``(u, omega)``: the set of tails, i.e.
        ``r(support, u)``."""
        u, v = t
        assert v == OMEGA, "tail sets are defined for positive components"
        fn = self.components[t]
        tails = frozenset(w[len(u):] for w in fn.coeffs)
        return ClopenSet(self.algebra.graph, fn.resolution - len(u), tails)

    # -- ring operations --------------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if other.algebra.graph is not self.algebra.graph \
                or other.algebra.ring != self.algebra.ring:
            raise RingMismatch("elements live in different algebras")

    def add(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        g, ring = self.algebra.graph, self.algebra.ring
        out = dict(self.components)
        for t, fn in other.components.items():
            if t in out:
                s = _fn_add(out[t], fn, ring, g)
                if s is None:
                    del out[t]
                else:
                    out[t] = s
            else:
                out[t] = fn
        return AlgebraElement(self.algebra, out)

    def negate(self) -> "AlgebraElement":
        ring = self.algebra.ring
        out = {t: CoeffFn(fn.resolution, {w: ring.neg(c) for w, c in fn.coeffs.items()})
               for t, fn in self.components.items()}
        return AlgebraElement(self.algebra, out)

    def scale(self, r) -> "AlgebraElement":
        ring = self.algebra.ring
        out = {}
        for t, fn in self.components.items():
            coeffs = {}
            for w, c in fn.coeffs.items():
                p = ring.mul(r, c)
                if not ring.is_zero(p):
                    coeffs[w] = p
            if coeffs:
                out[t] = CoeffFn(fn.resolution, coeffs)
        return AlgebraElement(self.algebra, out)

    def mul(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        g, ring = self.algebra.graph, self.algebra.ring
        acc: dict[Pair, CoeffFn] = {}
        for (u, v), f in self.components.items():
            for (u2, v2), h in other.components.items():
                k = _common_prefix_len(v, u2)
                v1, u21 = v[k:], u2[k:]
                if v1 and u21:
                    continue  # product index leaves the (pos)(neg)^-1 family
                mid = _fn_translate(f, u, v, g)
                n = max(mid.resolution, h.resolution)
                fa = _fn_refine(mid, n, g)
                fb = _fn_refine(h, n, g)
                prod = {}
                for w, c in fa.coeffs.items():
                    d = fb.coeffs.get(w)
                    if d is None:
                        continue
                    p = ring.mul(c, d)
                    if not ring.is_zero(p):
                        prod[w] = p
                if not prod:
                    continue
                back = _fn_translate(CoeffFn(n, prod), v, u, g)
                if not v1:
                    pair = _strip_common_suffix(u + u21, v2)
                else:
                    pair = (u, v2 + v1)
                if pair in acc:
                    s = _fn_add(acc[pair], back, ring, g)
                    if s is None:
                        del acc[pair]
                    else:
                        acc[pair] = s
                else:
                    acc[pair] = back
        return AlgebraElement(self.algebra, acc)

    def star(self) -> "AlgebraElement":
        g = self.algebra.graph
        out = {}
        for (u, v), fn in self.components.items():
            out[(v, u)] = _fn_translate(fn, u, v, g)
        return AlgebraElement(self.algebra, out)

    def equals(self, other: "AlgebraElement") -> bool:
        self._check(other)
        if set(self.components) != set(other.components):
            return False
        g = self.algebra.graph
        for t, a in self.components.items():
            b = other.components[t]
            n = max(a.resolution, b.resolution)
            if _fn_refine(a, n, g).coeffs != _fn_refine(b, n, g).coeffs:
                return False
        return True

    # -- operators ---------------------------------------------------------------

    __add__ = add
    __mul__ = mul

    def __sub__(self, other):
        return self.add(other.negate())

    def __neg__(self):
        return self.negate()

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    # -- presentation --------------------------------------------------------------

    def format(self) -> str:
        if self.is_zero():
            return "0"
        g, ring = self.algebra.graph, self.algebra.ring
        spec = g.spec
        lines = []
        for (u, v) in sorted(self.components):
            fn = _fn_compact(self.components[(u, v)], len(u) + g.m, g)
            body = " ; ".join(
                f"{ring.format(fn.coeffs[w])} {spec.word_to_str(w)}"
                for w in sorted(fn.coeffs))
            lines.append(f"{spec.word_to_str(u)} {spec.word_to_str(v)}^-1 | {body}")
        return "\n".join(lines)

    def __repr__(self):
        return f"AlgebraElement(\n{self.format()}\n)"


# -- module-level conveniences mirroring the operation names ---------------------


def gen_s(algebra: SubshiftAlgebra, letter: int) -> AlgebraElement:
    return algebra.gen_s(letter)


def gen_s_star(algebra: SubshiftAlgebra, letter: int) -> AlgebraElement:
    return algebra.gen_s_star(letter)


def gen_p(algebra: SubshiftAlgebra, a: ClopenSet) -> AlgebraElement:
    return algebra.gen_p(a)


def mono(algebra: SubshiftAlgebra, alpha: Word, a: ClopenSet, beta: Word) -> AlgebraElement:
    return algebra.mono(alpha, a, beta)
