"""Exact scalar fields.

Two fields are supported: the rationals (scalars are `fractions.Fraction`,
always in lowest terms with positive denominator) and prime fields (scalars
are plain ints in ``[0, p)``). No floating point is ever produced or
accepted. A field is fixed per computation and never mixed.

The text form of a scalar is ``p/q`` with the denominator omitted when it
is 1; prime-field scalars print as decimal residues. Emitted text is
canonical, so parse/print round-trips exactly.
"""

import re
from fractions import Fraction

from .errors import InputError

_SCALAR_RE = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _split(text: str):
    if not isinstance(text, str):
        raise InputError(f"scalar must be a string, got {type(text).__name__}")
    if not _SCALAR_RE.match(text):
        raise InputError(f"bad scalar syntax: {text!r}")
    num, _, den = text.partition("/")
    if den == "":
        return int(num), 1
    if int(den) == 0:
        raise InputError(f"zero denominator in scalar: {text!r}")
    return int(num), int(den)


class Rationals:
    """The field of arbitrary-precision rationals."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        num, den = _split(text)
        return Fraction(num, den)

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """The field of integers modulo a prime, elements stored in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise InputError(f"field modulus must be prime, got {p}")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def from_int(self, n: int):
        return n % self.p

    def parse(self, text: str):
        num, den = _split(text)
        if den % self.p == 0:
            raise InputError(f"scalar {text!r} has denominator divisible by {self.p}")
        return num * pow(den, self.p - 2, self.p) % self.p

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()


def field_from_name(name: str):
    """Resolve a field spec string: "Q", or "F<p>" with p prime."""
    if name == "Q":
        return QQ
    m = re.match(r"^F([0-9]+)$", name)
    if not m:
        raise InputError(f"unknown field spec {name!r} (expected 'Q' or 'Fp')")
    return PrimeField(int(m.group(1)))
