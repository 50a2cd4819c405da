"""Parsers and printers for shift files and algebra/set expressions.

Shift file format (two lines, order fixed)::

    alphabet: a b
    forbidden: bb, ba

The printer emits the normalized form (deduplicated, factor-pruned, sorted),
and parsing its own output reproduces it byte-identically.

Expression grammar (LL(1), whitespace-insensitive)::

    expr      := term (('+' | '-') term)*
    term      := factor ('*' factor)*
    factor    := [scalar '.'] primary
    primary   := s(word) | st(word) | p(setexpr) | 1 | 0 | '(' expr ')'
    setexpr   := setterm ('|' setterm)*
    setterm   := setunit ('&' setunit)*
    setunit   := '!' setunit | Z(word) | F(word) | C(word, word) | X
               | '(' setexpr ')'
    word      := '_' | symbol+          ('_' denotes the empty word)
    scalar    := '-'? digits ['/' digits]   (the trailing '.' is mandatory)

Scalars are ring-dependent: ``k.`` everywhere, ``k/m.`` only over the
rationals.
"""

from __future__ import annotations

from .algebra import AlgebraElement, SubshiftAlgebra
from .clopen import ClopenSet, c_set, cylinder, follower, full_set
from .errors import (BadScalarForRing, DuplicateSymbol, EmptyAlphabet,
                     ExprSyntaxError, IllegalForbiddenWord, ShiftParseError,
                     UnknownLetter)
from .rings import QQ, Ring
from .shift import SftSpec
from .words import OMEGA, Word

# -- shift files ----------------------------------------------------------------


def parse_shift(text: str) -> SftSpec:
    lines = text.splitlines()
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if len(stripped) < 1 or not stripped[0][1].startswith("alphabet:"):
        raise ShiftParseError("expected an 'alphabet:' line", 1, 1)
    lineno, alpha_line = stripped[0]
    symbols = alpha_line[len("alphabet:"):].split()
    if not symbols:
        raise EmptyAlphabet("alphabet must list at least one symbol", lineno, 1)
    for s in symbols:
        if len(s) != 1:
            raise ShiftParseError(f"alphabet symbols must be single characters: {s!r}",
                                  lineno, alpha_line.index(s) + 1)
    if len(set(symbols)) != len(symbols):
        dup = next(s for i, s in enumerate(symbols) if s in symbols[:i])
        raise DuplicateSymbol(f"duplicate alphabet symbol {dup!r}", lineno, 1)
    forbidden: list[str] = []
    if len(stripped) > 1:
        lineno2, forb_line = stripped[1]
        if not forb_line.startswith("forbidden:"):
            raise ShiftParseError("expected a 'forbidden:' line", lineno2, 1)
        body = forb_line[len("forbidden:"):].strip()
        if body:
            forbidden = [w.strip() for w in body.split(",")]
        if len(stripped) > 2:
            raise ShiftParseError("unexpected extra line", stripped[2][0], 1)
        index = set(symbols)
        for w in forbidden:
            if not w:
                raise IllegalForbiddenWord("empty forbidden word", lineno2, 1)
            for ch in w:
                if ch not in index:
                    raise IllegalForbiddenWord(
                        f"forbidden word {w!r} uses unknown symbol {ch!r}", lineno2, 1)
    return SftSpec.make(symbols, forbidden)


def format_shift(spec: SftSpec) -> str:
    alpha = " ".join(spec.alphabet)
    forb = ", ".join(spec.word_to_str(w) for w in sorted(spec.forbidden))
    return f"alphabet: {alpha}\nforbidden:{' ' + forb if forb else ''}\n"


# -- expressions ------------------------------------------------------------------

# AST nodes are tagged tuples:
#   ('s', word) ('st', word) ('p', set) ('one',) ('zero',)
#   ('scale', scalar_text, node) ('add'|'sub'|'mul', left, right)
# set nodes:
#   ('Z', word) ('F', word) ('C', w1, w2) ('X',) ('not', s) ('and'|'or', l, r)

ExprAst = tuple


class _Scanner:
    def __init__(self, text: str, spec: SftSpec):
        self.text = text
        self.pos = 0
        self.spec = spec
        self.symbol_index = {s: i for i, s in enumerate(spec.alphabet)}

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def take(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise ExprSyntaxError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def take_word(self) -> Word:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "_":
            self.pos += 1
            return OMEGA
        letters = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in (")", ",") or ch.isspace():
                break
            if ch not in self.symbol_index:
                raise UnknownLetter(f"unknown letter {ch!r} at position {self.pos}")
            letters.append(self.symbol_index[ch])
            self.pos += 1
        if not letters:
            raise ExprSyntaxError("expected a word", start)
        return tuple(letters)

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_scalar_prefix(sc: _Scanner) -> str | None:
    """Scan ``k.`` / ``k/m.`` (optionally negative); None when not present."""
    sc.skip_ws()
    save = sc.pos
    i = sc.pos
    text = sc.text
    if i < len(text) and text[i] == "-":
        i += 1
    start_digits = i
    while i < len(text) and text[i].isdigit():
        i += 1
    if i == start_digits:
        sc.pos = save
        return None
    if i < len(text) and text[i] == "/":
        i += 1
        d0 = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == d0:
            sc.pos = save
            return None
    if i < len(text) and text[i] == ".":
        scalar = text[sc.pos:i]
        sc.pos = i + 1
        return scalar
    sc.pos = save
    return None


def _parse_setunit(sc: _Scanner) -> ExprAst:
    if sc.startswith("!"):
        sc.take("!")
        return ("not", _parse_setunit(sc))
    if sc.startswith("Z("):
        sc.take("Z(")
        w = sc.take_word()
        sc.take(")")
        return ("Z", w)
    if sc.startswith("F("):
        sc.take("F(")
        w = sc.take_word()
        sc.take(")")
        return ("F", w)
    if sc.startswith("C("):
        sc.take("C(")
        w1 = sc.take_word()
        sc.take(",")
        w2 = sc.take_word()
        sc.take(")")
        return ("C", w1, w2)
    if sc.startswith("X"):
        sc.take("X")
        return ("X",)
    if sc.startswith("("):
        sc.take("(")
        inner = _parse_setexpr(sc)
        sc.take(")")
        return inner
    raise ExprSyntaxError("expected a set expression", sc.pos)


def _parse_setterm(sc: _Scanner) -> ExprAst:
    node = _parse_setunit(sc)
    while sc.startswith("&"):
        sc.take("&")
        node = ("and", node, _parse_setunit(sc))
    return node


def _parse_setexpr(sc: _Scanner) -> ExprAst:
    node = _parse_setterm(sc)
    while sc.startswith("|"):
        sc.take("|")
        node = ("or", node, _parse_setterm(sc))
    return node


def _parse_primary(sc: _Scanner) -> ExprAst:
    if sc.startswith("st("):
        sc.take("st(")
        w = sc.take_word()
        sc.take(")")
        return ("st", w)
    if sc.startswith("s("):
        sc.take("s(")
        w = sc.take_word()
        sc.take(")")
        return ("s", w)
    if sc.startswith("p("):
        sc.take("p(")
        s = _parse_setexpr(sc)
        sc.take(")")
        return ("p", s)
    if sc.startswith("1"):
        sc.take("1")
        return ("one",)
    if sc.startswith("0"):
        sc.take("0")
        return ("zero",)
    if sc.startswith("("):
        sc.take("(")
        inner = _parse_expr(sc)
        sc.take(")")
        return inner
    raise ExprSyntaxError("expected s(..), st(..), p(..), 1, 0 or '('", sc.pos)


def _parse_factor(sc: _Scanner) -> ExprAst:
    scalar = _parse_scalar_prefix(sc)
    node = _parse_primary(sc)
    if scalar is not None:
        return ("scale", scalar, node)
    return node


def _parse_term(sc: _Scanner) -> ExprAst:
    node = _parse_factor(sc)
    while sc.startswith("*"):
        sc.take("*")
        node = ("mul", node, _parse_factor(sc))
    return node


def _parse_expr(sc: _Scanner) -> ExprAst:
    node = _parse_term(sc)
    while True:
        if sc.startswith("+"):
            sc.take("+")
            node = ("add", node, _parse_term(sc))
        elif sc.startswith("-"):
            sc.take("-")
            node = ("sub", node, _parse_term(sc))
        else:
            return node


def parse_expr(text: str, spec: SftSpec) -> ExprAst:
    sc = _Scanner(text, spec)
    node = _parse_expr(sc)
    if not sc.at_end():
        raise ExprSyntaxError("trailing input", sc.pos)
    return node


def parse_set(text: str, spec: SftSpec) -> ExprAst:
    sc = _Scanner(text, spec)
    node = _parse_setexpr(sc)
    if not sc.at_end():
        raise ExprSyntaxError("trailing input", sc.pos)
    return node


def eval_set(node: ExprAst, algebra: SubshiftAlgebra) -> ClopenSet:
    g = algebra.graph
    tag = node[0]
    if tag == "Z":
        return cylinder(g, node[1])
    if tag == "F":
        return follower(g, node[1])
    if tag == "C":
        return c_set(g, node[1], node[2])
    if tag == "X":
        return full_set(g)
    if tag == "not":
        return eval_set(node[1], algebra).complement()
    if tag == "and":
        return eval_set(node[1], algebra).intersect(eval_set(node[2], algebra))
    if tag == "or":
        return eval_set(node[1], algebra).union(eval_set(node[2], algebra))
    raise AssertionError(f"bad set node {node!r}")


def eval_expr(node: ExprAst, algebra: SubshiftAlgebra) -> AlgebraElement:
    tag = node[0]
    if tag == "s":
        return algebra.elem_s(node[1])
    if tag == "st":
        return algebra.elem_s_star(node[1])
    if tag == "p":
        return algebra.gen_p(eval_set(node[1], algebra))
    if tag == "one":
        return algebra.one()
    if tag == "zero":
        return algebra.zero()
    if tag == "scale":
        ring = algebra.ring
        if "/" in node[1] and ring != QQ:
            raise BadScalarForRing(f"fraction scalar {node[1]!r} needs the rational ring")
        return eval_expr(node[2], algebra).scale(ring.parse_scalar(node[1]))
    if tag == "add":
        return eval_expr(node[1], algebra) + eval_expr(node[2], algebra)
    if tag == "sub":
        return eval_expr(node[1], algebra) - eval_expr(node[2], algebra)
    if tag == "mul":
        return eval_expr(node[1], algebra) * eval_expr(node[2], algebra)
    raise AssertionError(f"bad expression node {node!r}")


def evaluate(text: str, algebra: SubshiftAlgebra) -> AlgebraElement:
    return eval_expr(parse_expr(text, algebra.graph.spec), algebra)


def format_expr(node: ExprAst, spec: SftSpec) -> str:
    """Re-emit an AST; parsing the output yields an equal element."""

    def wfmt(w: Word) -> str:
        return spec.word_to_str(w)

    def setfmt(n: ExprAst) -> str:
        tag = n[0]
        if tag == "Z":
            return f"Z({wfmt(n[1])})"
        if tag == "F":
            return f"F({wfmt(n[1])})"
        if tag == "C":
            return f"C({wfmt(n[1])},{wfmt(n[2])})"
        if tag == "X":
            return "X"
        if tag == "not":
            return f"!({setfmt(n[1])})"
        if tag == "and":
            return f"({setfmt(n[1])}) & ({setfmt(n[2])})"
        if tag == "or":
            return f"({setfmt(n[1])}) | ({setfmt(n[2])})"
        raise AssertionError

    tag = node[0]
    if tag == "s":
        return f"s({wfmt(node[1])})"
    if tag == "st":
        return f"st({wfmt(node[1])})"
    if tag == "p":
        return f"p({setfmt(node[1])})"
    if tag == "one":
        return "1"
    if tag == "zero":
        return "0"
    if tag == "scale":
        return f"{node[1]}.({format_expr(node[2], spec)})"
    if tag == "add":
        return f"({format_expr(node[1], spec)}) + ({format_expr(node[2], spec)})"
    if tag == "sub":
        return f"({format_expr(node[1], spec)}) - ({format_expr(node[2], spec)})"
    if tag == "mul":
        return f"({format_expr(node[1], spec)}) * ({format_expr(node[2], spec)})"
    raise AssertionError
