"""Exact coefficient rings: integers, rationals, integers mod n.

Ring values are plain Python objects (``int`` or ``fractions.Fraction``);
the ring object supplies the operations, so elements stay lightweight and
hashable.  ``is_domain`` distinguishes the rings in which squares of nonzero
reduced elements are guaranteed nonzero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadScalarForRing


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Ring:
    """Commutative unital ring with exact arithmetic and decidable equality."""

    name: str
    is_domain: bool

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        return self.add(self.zero(), self.mul(self.from_int(-1), a))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def from_int(self, k: int):
        raise NotImplementedError

    def parse_scalar(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "z"
    is_domain = True

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k: int):
        return k

    def parse_scalar(self, text: str):
        try:
            return int(text)
        except ValueError:
            raise BadScalarForRing(f"not an integer scalar: {text!r}") from None


class RationalRing(Ring):
    name = "q"
    is_domain = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k: int):
        return Fraction(k)

    def parse_scalar(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise BadScalarForRing(f"not a rational scalar: {text!r}") from None

    def format(self, a) -> str:
        return str(a)


class IntegerModRing(Ring):
    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = modulus
        self.name = f"zmod:{modulus}"
        self.is_domain = _is_prime(modulus)

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def from_int(self, k: int):
        return k % self.modulus

    def parse_scalar(self, text: str):
        try:
            return int(text) % self.modulus
        except ValueError:
            raise BadScalarForRing(f"not a residue scalar: {text!r}") from None


ZZ = IntegerRing()
QQ = RationalRing()


def Zmod(n: int) -> IntegerModRing:
    return IntegerModRing(n)


def ring_from_name(name: str) -> Ring:
    if name == "z":
        return ZZ
    if name == "q":
        return QQ
    if name.startswith("zmod:"):
        return Zmod(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown ring: {name!r}")
