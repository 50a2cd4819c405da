"""Executable reduction of nonzero algebra elements.

Any nonzero element can be compressed, by multiplying with explicit left and
right factors, to one of two shapes: a nonzero scalar multiple of a
projection, or a cycle form ``gamma_1 p_A + sum_i gamma_i s_{beta^{q_i}} p_A``
over a minimal cycle without exit.  :func:`reduce` produces the factors
together with the classified shape as a :class:`ReductionWitness`;
:func:`verify` re-multiplies and compares exactly.

The pipeline keeps two running invariants, re-checked after every single
multiplication: the element stays nonzero, and each phase strictly decreases
a termination measure (total negative length, then term count, then maximal
word length).  All multiplier factors have coefficient 1, so no new
zero-divisor products can arise even over rings with zero divisors; the
nonzero checks therefore operate purely on supports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, SubshiftAlgebra
from .clopen import (ClopenSet, CycleKind, as_singleton, classify_cycle,
                     cylinder, relative_range)
from .errors import (InternalNonzeroViolation, RootExtractionFailure,
                     ZeroInput)
from .words import OMEGA, Word, ep_normalize, primitive_root

Pair = tuple[Word, Word]


@dataclass(frozen=True)
class ProjectionMultiple:
    gamma: object
    proj_set: ClopenSet


@dataclass(frozen=True)
class CycleForm:
    cycle_set: ClopenSet
    beta: Word
    gammas: tuple
    exps: tuple[int, ...]


ReducedForm = ProjectionMultiple | CycleForm


@dataclass
class ReductionWitness:
    mu: AlgebraElement
    nu: AlgebraElement
    form: ReducedForm
    trace: tuple[str, ...] | None = None


def embed_form(algebra: SubshiftAlgebra, form: ReducedForm) -> AlgebraElement:
    """The algebra element a reduced form denotes."""
    if isinstance(form, ProjectionMultiple):
        return algebra.gen_p(form.proj_set).scale(form.gamma)
    acc = algebra.gen_p(form.cycle_set).scale(form.gammas[0])
    for gamma, q in zip(form.gammas[1:], form.exps):
        term = algebra.elem_s(form.beta * q) * algebra.gen_p(form.cycle_set)
        acc = acc + term.scale(gamma)
    return acc


class _Pipeline:
    """Accumulates left/right factors while keeping the element nonzero."""

    def __init__(self, x: AlgebraElement, record_trace: bool = False):
        self.alg = x.algebra
        self.x = x
        self.mu = self.alg.one()
        self.nu = self.alg.one()
        self.trace: list[str] | None = [] if record_trace else None

    def left(self, factor: AlgebraElement, label: str):
        nx = factor * self.x
        if nx.is_zero():
            raise InternalNonzeroViolation(f"left factor zeroed the element: {label}")
        self.x = nx
        self.mu = factor * self.mu
        if self.trace is not None:
            self.trace.append(f"L {label}")

    def right(self, factor: AlgebraElement, label: str):
        nx = self.x * factor
        if nx.is_zero():
            raise InternalNonzeroViolation(f"right factor zeroed the element: {label}")
        self.x = nx
        self.nu = self.nu * factor
        if self.trace is not None:
            self.trace.append(f"R {label}")

    def fmt_word(self, w: Word) -> str:
        return self.alg.graph.spec.word_to_str(w)


def _sorted_keys(x: AlgebraElement) -> list[Pair]:
    return sorted(x.components, key=lambda t: (len(t[0]), t[0], len(t[1]), t[1]))


def _scalar_of(x: AlgebraElement, key: Pair):
    vals = set(x.components[key].coeffs.values())
    assert len(vals) == 1, "component is not a scalar multiple of an indicator"
    return vals.pop()


# -- phase: make every component positive (right-multiplication by letters) ----


def _phase_positive(p: _Pipeline):
    while True:
        negs = [t for t in p.x.components if t[1] != OMEGA]
        if not negs:
            return
        before = sum(len(v) for (_, v) in p.x.components)
        # Target the component with the longest negative part, then scan the
        # alphabet for the first letter keeping that component nonzero.
        target = min(negs, key=lambda t: (-len(t[1]), t[1], t[0]))
        comp = p.x.component_element(target)
        letter = None
        for a in range(p.alg.graph.n_letters):
            if not (comp * p.alg.gen_s(a)).is_zero():
                letter = a
                break
        if letter is None:
            raise InternalNonzeroViolation("letter-extension search found no letter")
        p.right(p.alg.gen_s(letter), f"s({p.alg.graph.spec.alphabet[letter]})")
        after = sum(len(v) for (_, v) in p.x.components)
        if after >= before:
            raise InternalNonzeroViolation("no progress in positive phase")


# -- phase: nest the positive words into a prefix chain -------------------------


def _phase_prefix_nest(p: _Pipeline):
    assert all(v == OMEGA for (_, v) in p.x.components)
    words = [u for (u, _) in p.x.components]
    beta = min(words, key=lambda u: (-len(u), u))
    if beta == OMEGA:
        return
    p.left(p.alg.gen_p(cylinder(p.alg.graph, beta)),
           f"p(Z({p.fmt_word(beta)}))")


# -- phase: common projection (scalar coefficients over one common set) ---------


def _phase_common_projection(p: _Pipeline) -> ClopenSet:
    g = p.alg.graph
    assert all(v == OMEGA for (_, v) in p.x.components)
    # First pass: per-component set factors, in chain order.  Components whose
    # coefficient function is not a scalar multiple of an indicator get
    # collapsed onto one of their cylinders (the lexicographically least
    # support word); the rest contribute their own tail set.  The targeted
    # component always survives its own factor, so the element stays nonzero.
    for key in _sorted_keys(p.x):
        if key not in p.x.components:
            continue
        u = key[0]
        fn = p.x.components[key]
        if len(set(fn.coeffs.values())) > 1:
            w = min(fn.coeffs)
            tail = ClopenSet(g, fn.resolution - len(u), frozenset({w[len(u):]}))
        else:
            tail = p.x.tail_set(key)
        p.right(p.alg.gen_p(tail), "p(common)")
    # Follower projections are subsumed: a tail cylinder of resolution >= m
    # automatically sits inside the follower set of its word, so the common
    # set already lands inside every surviving F_{alpha_i}.
    keys = _sorted_keys(p.x)
    tails = [p.x.tail_set(k) for k in keys]
    common = tails[0]
    assert all(t == common for t in tails), "projection cascade left unequal sets"
    for k in keys:
        _scalar_of(p.x, k)
    return common


# -- phase: strip the shortest word, then normalize the Z-containments ----------


def _phase_strip_z(p: _Pipeline) -> ProjectionMultiple | ClopenSet:
    """Reach either a plain projection multiple or the shape
    ``gamma_1 p_B + sum gamma_i s_{b_i} p_B`` with ``B`` inside every
    ``F_{b_i}`` and ``Z_{b_i}``.

    A single cylinder cut does not always kill the terms whose cylinder
    misses the set (their follower part may still meet it), so the cut is
    iterated with an extra left projection; each round strictly lowers the
    term count or the maximal word length.
    """
    g = p.alg.graph
    while True:
        keys = _sorted_keys(p.x)
        if len(keys) == 1:
            (u, _v) = keys[0]
            if u == OMEGA:
                gamma = _scalar_of(p.x, keys[0])
                return ProjectionMultiple(gamma, p.x.support_set(keys[0]))
            p.left(p.alg.elem_s_star(u), f"st({p.fmt_word(u)})")
            continue
        alpha1 = keys[0][0]
        if alpha1 != OMEGA:
            # Strip the shortest word; every term survives with its set intact.
            p.left(p.alg.elem_s_star(alpha1), f"st({p.fmt_word(alpha1)})")
            continue
        a_set = p.x.tail_set(keys[0])
        positives = keys[1:]
        meets = [k for k in positives
                 if not a_set.intersect(cylinder(g, k[0])).is_empty()]
        if not meets:
            p.left(p.alg.gen_p(a_set), "p(const)")
            continue
        kmax = meets[-1]
        cyl = cylinder(g, kmax[0])
        b_set = a_set.intersect(cyl)
        if not a_set.is_subset(cyl):
            p.right(p.alg.gen_p(cyl), f"p(Z({p.fmt_word(kmax[0])}))")
        if kmax == positives[-1]:
            return b_set
        terms = len(p.x.components)
        p.left(p.alg.gen_p(b_set), "p(cut)")
        if len(p.x.components) >= terms:
            raise InternalNonzeroViolation("Z-normalization made no progress")
        _phase_common_projection(p)


# -- phase: align longer words onto powers of the base word ---------------------


def _phase_power_align(p: _Pipeline, b_set: ClopenSet):
    g = p.alg.graph
    keys = _sorted_keys(p.x)
    assert keys[0][0] == OMEGA and len(keys) >= 3
    alpha = keys[1][0]
    cmax = keys[-1][0]
    n = -(-len(cmax) // len(alpha))
    left = p.alg.gen_p(cylinder(g, alpha)) * p.alg.elem_s_star(alpha * n)
    right = p.alg.elem_s(alpha * n) * p.alg.gen_p(b_set)
    p.right(right, f"s({p.fmt_word(alpha)}^{n}) p(B)")
    p.left(left, f"p(Z({p.fmt_word(alpha)})) st({p.fmt_word(alpha)}^{n})")
    _phase_common_projection(p)


# -- phase: extract the common word root -----------------------------------------


def _extract_root(x: AlgebraElement) -> tuple[Word, list[int]] | None:
    """If all positive words are powers of one primitive root, return it with
    the exponent list (in chain order)."""
    keys = _sorted_keys(x)
    words = [u for (u, _) in keys if u != OMEGA]
    if not words:
        return None
    c, _ = primitive_root(words[0])
    exps = []
    for w in words:
        k, r = divmod(len(w), len(c))
        if r or c * k != w:
            return None
        exps.append(k)
    return c, exps


# -- phase: decide the cycle dichotomy -------------------------------------------


def _phase_exit_kill(p: _Pipeline, b_set: ClopenSet, c: Word,
                     exps: list[int]) -> ReducedForm:
    """Final dichotomy.

    The set lies inside every Z_{c^n} exactly when each of its points starts
    with arbitrarily long powers of c, i.e. equals c^inf; so the infinite
    intersection condition reduces to the exact singleton test.
    """
    g = p.alg.graph
    keys = _sorted_keys(p.x)
    gammas = tuple(_scalar_of(p.x, k) for k in keys)
    point = as_singleton(b_set)
    if point is not None and point == ep_normalize(OMEGA, c):
        root, l = primitive_root(c)
        return CycleForm(b_set, root, gammas, tuple(l * q for q in exps))
    # The set contains a point diverging from c^inf; find the block where it
    # leaves and cut with the offending cylinder, which kills every s-term.
    # Starting at block 0 also covers inputs whose set is not yet inside
    # Z_{c^{max exp}}: the kill argument only needs the minimality of j.
    j = 0
    cap = (b_set.resolution + (len(g.states) + 2) * len(c)) // len(c) + 2
    while b_set.is_subset(cylinder(g, c * (j + 1))):
        j += 1
        if j > cap:
            raise InternalNonzeroViolation(
                "bounded search exhausted; singleton test should have fired")
    need = max(b_set.resolution, (j + 1) * len(c) + g.m)
    refined = b_set.refine(need)
    prefix = c * (j + 1)
    bad = sorted(w for w in refined.words if w[:len(prefix)] != prefix)
    w0 = bad[0]
    beta = w0[j * len(c):(j + 1) * len(c)]
    assert beta != c
    witness_word = c * j + beta
    p.left(p.alg.gen_p(cylinder(g, witness_word)),
           f"p(Z({p.fmt_word(witness_word)}))")
    keys = _sorted_keys(p.x)
    if len(keys) != 1 or keys[0][0] != OMEGA:
        raise InternalNonzeroViolation("exit cut left non-constant terms")
    gamma = _scalar_of(p.x, keys[0])
    return ProjectionMultiple(gamma, p.x.support_set(keys[0]))


# -- the full reduction ------------------------------------------------------------


def reduce(x: AlgebraElement, record_trace: bool = False) -> ReductionWitness:
    """Produce multipliers ``(mu, nu)`` and the classified reduced form of a
    nonzero element; the returned witness verifies exactly."""
    if x.is_zero():
        raise ZeroInput("cannot reduce the zero element")
    p = _Pipeline(x, record_trace)
    _phase_positive(p)
    _phase_prefix_nest(p)
    size0 = sum(len(fn.coeffs) for fn in x.components.values())
    len0 = max((len(u) + len(v) for (u, v) in x.components), default=1)
    guard = 8 * (size0 + 4) * (len0 + 4)
    form: ReducedForm | None = None
    while form is None:
        guard -= 1
        if guard < 0:
            raise InternalNonzeroViolation("reduction loop exceeded its bound")
        _phase_common_projection(p)
        res = _phase_strip_z(p)
        if isinstance(res, ProjectionMultiple):
            form = res
            break
        b_set = res
        keys = _sorted_keys(p.x)
        b2 = keys[1][0]
        ran = relative_range(b_set, b2)
        if not b_set.is_subset(ran):
            diff = b_set.difference(ran)
            terms = len(p.x.components)
            pump = p.alg.gen_p(diff) * p.alg.elem_s_star(b2)
            p.left(pump, f"p(D) st({p.fmt_word(b2)})")
            if len(p.x.components) >= terms:
                raise InternalNonzeroViolation("pump pass made no progress")
            continue
        rooted = _extract_root(p.x)
        if rooted is not None:
            form = _phase_exit_kill(p, b_set, *rooted)
            break
        _phase_power_align(p, b_set)
    witness = ReductionWitness(
        mu=p.mu, nu=p.nu, form=form,
        trace=tuple(p.trace) if p.trace is not None else None)
    if not verify(witness, x):
        raise InternalNonzeroViolation("produced witness failed verification")
    return witness


def verify(witness: ReductionWitness, x: AlgebraElement) -> bool:
    """Recompute ``mu * x * nu``, compare with the embedded form, and
    re-classify cycle forms."""
    algebra = x.algebra
    ring = algebra.ring
    product = witness.mu * x * witness.nu
    expected = embed_form(algebra, witness.form)
    if product.is_zero() or not product.equals(expected):
        return False
    form = witness.form
    if isinstance(form, ProjectionMultiple):
        return (not ring.is_zero(form.gamma)) and not form.proj_set.is_empty()
    if any(ring.is_zero(gamma) for gamma in form.gammas):
        return False
    if len(form.exps) != len(form.gammas) - 1:
        return False
    if any(q <= 0 for q in form.exps):
        return False
    if any(a >= b for a, b in zip(form.exps, form.exps[1:])):
        return False
    cc = classify_cycle(form.cycle_set, form.beta)
    return cc.kind is CycleKind.CYCLE_WITHOUT_EXIT and cc.minimal is True


# -- spec-level step entry points (used directly by tests and tooling) -----------


def step_positive(x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Right-multiply by letters until every component is positive; returns
    the new element and the accumulated right factor."""
    if x.is_zero():
        raise ZeroInput("step_positive needs a nonzero element")
    p = _Pipeline(x)
    _phase_positive(p)
    return p.x, p.nu


def step_prefix_nest(x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Left-multiply by ``s_beta s_beta^*`` for the longest word ``beta``;
    surviving words become initial segments of ``beta``.  Returns
    ``(mu, x')``."""
    p = _Pipeline(x)
    _phase_prefix_nest(p)
    return p.mu, p.x


def step_common_projection(x: AlgebraElement) \
        -> tuple[AlgebraElement, ClopenSet, tuple[int, ...]]:
    """Right-projection cascade producing scalar coefficients over one common
    set.  Returns ``(x', A, J)`` where ``J`` lists the surviving component
    indices relative to the input's chain order."""
    before = _sorted_keys(x)
    p = _Pipeline(x)
    common = _phase_common_projection(p)
    after = set(p.x.components)
    j = tuple(i for i, k in enumerate(before) if k in after)
    return p.x, common, j


def step_strip_constant(x: AlgebraElement) \
        -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """Strip the shortest word and normalize cylinder containments; returns
    ``(mu, nu, x')`` where ``x'`` is either a plain projection multiple or
    has the shape ``gamma_1 p_B + sum gamma_i s_{b_i} p_B``."""
    p = _Pipeline(x)
    _phase_strip_z(p)
    return p.mu, p.nu, p.x


def step_cycle_pump(x: AlgebraElement) \
        -> tuple[AlgebraElement, ClopenSet | None]:
    """Pump until the common set satisfies ``B`` inside ``r(B, b_2)``.

    Returns ``(x', C)`` with the final common set, or ``(x', None)`` when the
    pumping collapsed the element to a plain projection multiple."""
    p = _Pipeline(x)
    while True:
        res = _phase_strip_z(p)
        if isinstance(res, ProjectionMultiple):
            return p.x, None
        b_set = res
        keys = _sorted_keys(p.x)
        b2 = keys[1][0]
        ran = relative_range(b_set, b2)
        if b_set.is_subset(ran):
            return p.x, b_set
        diff = b_set.difference(ran)
        p.left(p.alg.gen_p(diff) * p.alg.elem_s_star(b2), "pump")
        _phase_common_projection(p)


def step_power_align(x: AlgebraElement) -> AlgebraElement:
    """One sandwich pass killing words that do not align onto powers of the
    base word; ends with a fresh common projection."""
    p = _Pipeline(x)
    keys = _sorted_keys(p.x)
    b_set = p.x.tail_set(keys[0])
    _phase_power_align(p, b_set)
    return p.x


def step_word_gcd(x: AlgebraElement) \
        -> tuple[AlgebraElement, Word, tuple[int, ...]]:
    """Rewrite the positive words as powers of one primitive root; the words
    themselves are unchanged, so the element is returned as-is together with
    the root and the exponents."""
    rooted = _extract_root(x)
    if rooted is None:
        raise RootExtractionFailure("words are not powers of a common root")
    c, exps = rooted
    return x, c, tuple(exps)


def step_exit_kill(x: AlgebraElement) -> ReducedForm:
    """Final dichotomy: cycle form when the common set is the periodic point
    of the root, otherwise a projection multiple obtained by cutting with a
    diverging cylinder."""
    p = _Pipeline(x)
    keys = _sorted_keys(p.x)
    assert keys[0][0] == OMEGA
    b_set = p.x.tail_set(keys[0])
    _x, c, exps = step_word_gcd(x)
    return _phase_exit_kill(p, b_set, c, list(exps))
