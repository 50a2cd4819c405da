import random
from itertools import product

import pytest

from subshift_algebra.algebra import SubshiftAlgebra
from subshift_algebra.clopen import cylinder, full_set
from subshift_algebra.rings import ZZ
from subshift_algebra.shift import SftSpec, build_follower_graph
from subshift_algebra.words import OMEGA


@pytest.fixture(scope="session")
def g_full():
    return build_follower_graph(SftSpec.make("ab", []))


@pytest.fixture(scope="session")
def g_gold():
    return build_follower_graph(SftSpec.make("ab", ["bb"]))


@pytest.fixture(scope="session")
def g_y():
    return build_follower_graph(SftSpec.make("ab", ["ba"]))


@pytest.fixture(scope="session")
def all_graphs(g_full, g_gold, g_y):
    return {"full": g_full, "gold": g_gold, "y": g_y}


@pytest.fixture
def alg_full(g_full):
    return SubshiftAlgebra(g_full, ZZ)


@pytest.fixture
def alg_gold(g_gold):
    return SubshiftAlgebra(g_gold, ZZ)


@pytest.fixture
def alg_y(g_y):
    return SubshiftAlgebra(g_y, ZZ)


def W(text: str):
    """Word literal over the two-letter alphabet: 'ab' -> (0, 1)."""
    return tuple({"a": 0, "b": 1}[ch] for ch in text)


def brute_forbidden_free(w, forbidden):
    return not any(
        w[i:i + len(f)] == f
        for f in forbidden
        for i in range(len(w) - len(f) + 1)
    )


def brute_legal_words(graph, n, lookahead=None):
    """Independent language oracle: forbidden-free words of length n having a
    forbidden-free extension long enough to pump (exact for every SFT)."""
    spec = graph.spec
    k = len(spec.alphabet)
    m = spec.memory
    if lookahead is None:
        lookahead = m + k ** m + 1
    out = []
    for w in product(range(k), repeat=n):
        if not brute_forbidden_free(w, spec.forbidden):
            continue
        if any(brute_forbidden_free(w + e, spec.forbidden)
               for e in product(range(k), repeat=lookahead)):
            out.append(w)
    return out


def words_up_to(graph, n, include_empty=True):
    out = [OMEGA] if include_empty else []
    for k in range(1, n + 1):
        out.extend(graph.legal_words(k))
    return out


def random_monomial_sum(algebra, rng: random.Random, max_word=3, max_terms=3,
                        coeff_lo=-3, coeff_hi=3):
    """Random sum of monomials s_alpha p_A s_beta^*; may be zero."""
    g = algebra.graph
    pool = words_up_to(g, max_word)
    sets = [full_set(g)] + [cylinder(g, w) for w in words_up_to(g, 2, False)]
    x = algebra.zero()
    for _ in range(rng.randint(1, max_terms)):
        alpha = rng.choice(pool)
        beta = rng.choice(pool)
        a_set = rng.choice(sets)
        coeff = 0
        while coeff == 0:
            coeff = rng.randint(coeff_lo, coeff_hi)
        x = x + algebra.mono(alpha, a_set, beta).scale(algebra.ring.from_int(coeff))
    return x


def random_nonzero_element(algebra, rng, **kw):
    while True:
        x = random_monomial_sum(algebra, rng, **kw)
        if not x.is_zero():
            return x
