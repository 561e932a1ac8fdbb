"""
Arithmetic in E/2E = GF(4) and E/4E = GR(4^2), E the Eisenstein integers.

Elements are stored as coordinate pairs (a, b) meaning a*w + b, where w is a
primitive cube root of unity.  Text syntax is the two digits "ab", so "01" is 1,
"10" is w and "33" is w^2 = -1 - w in GR(4^2).

All instances are interned: there are exactly 4 GF4 and 16 GR16 objects, and
every operation is a table lookup.
"""

from __future__ import annotations

import enum

import numpy as np


class GF4:
    """Element a*w + b of GF(4), coefficients mod 2."""

    __slots__ = ("a", "b", "code")
    _cache: list["GF4"] = []

    def __new__(cls, a: int, b: int) -> "GF4":
        return cls._cache[2 * (a % 2) + (b % 2)]

    @classmethod
    def _make(cls, code: int) -> "GF4":
        self = object.__new__(cls)
        self.a, self.b = divmod(code, 2)
        self.code = code
        return self

    @classmethod
    def parse(cls, text: str) -> "GF4":
        return _parse_pair(cls, text.strip(), 2)

    @classmethod
    def elements(cls) -> list["GF4"]:
        return list(cls._cache)

    def __add__(self, other: "GF4") -> "GF4":
        return _GF4_ADD[self.code][other.code]

    __sub__ = __add__

    def __neg__(self) -> "GF4":
        return self

    def __mul__(self, other: "GF4") -> "GF4":
        return _GF4_MUL[self.code][other.code]

    def __bool__(self) -> bool:
        return self.code != 0

    def __hash__(self) -> int:
        return self.code

    def __eq__(self, other: object) -> bool:
        return self is other

    def __lt__(self, other: "GF4") -> bool:
        return self.code < other.code

    def __reduce__(self):
        return (GF4, (self.a, self.b))

    def inverse(self) -> "GF4":
        if not self:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        return _GF4_INV[self.code]

    def __str__(self) -> str:
        return f"{self.a}{self.b}"

    def __repr__(self) -> str:
        return f"GF4('{self}')"


class GR16:
    """Element a*w + b of GR(4^2), coefficients mod 4."""

    __slots__ = ("a", "b", "code")
    _cache: list["GR16"] = []

    def __new__(cls, a: int, b: int) -> "GR16":
        return cls._cache[4 * (a % 4) + (b % 4)]

    @classmethod
    def _make(cls, code: int) -> "GR16":
        self = object.__new__(cls)
        self.a, self.b = divmod(code, 4)
        self.code = code
        return self

    @classmethod
    def parse(cls, text: str) -> "GR16":
        return _parse_pair(cls, text.strip(), 4)

    @classmethod
    def elements(cls) -> list["GR16"]:
        return list(cls._cache)

    def __add__(self, other: "GR16") -> "GR16":
        return _GR16_ADD[self.code][other.code]

    def __sub__(self, other: "GR16") -> "GR16":
        return _GR16_ADD[self.code][_GR16_NEG[other.code].code]

    def __neg__(self) -> "GR16":
        return _GR16_NEG[self.code]

    def __mul__(self, other: "GR16") -> "GR16":
        return _GR16_MUL[self.code][other.code]

    def __bool__(self) -> bool:
        return self.code != 0

    def __hash__(self) -> int:
        return self.code

    def __eq__(self, other: object) -> bool:
        return self is other

    def __lt__(self, other: "GR16") -> bool:
        return self.code < other.code

    def __reduce__(self):
        return (GR16, (self.a, self.b))

    @property
    def is_regular(self) -> bool:
        """True for non-zero-divisors, i.e. elements of additive order 4."""
        return self.a % 2 == 1 or self.b % 2 == 1

    def __str__(self) -> str:
        return f"{self.a}{self.b}"

    def __repr__(self) -> str:
        return f"GR16('{self}')"


def _parse_pair(cls, text, modulus):
    # one-digit tokens are integer constants: "3" == "03"
    if len(text) == 1:
        text = "0" + text
    if len(text) != 2 or not text.isdigit():
        raise ValueError(f"bad ring element {text!r}")
    a, b = int(text[0]), int(text[1])
    if a >= modulus or b >= modulus:
        raise ValueError(f"digit out of range mod {modulus} in {text!r}")
    return cls(a, b)


def _mul_pairs(a1, b1, a2, b2, modulus):
    # w^2 = -1 - w
    aa = a1 * a2
    return ((a1 * b2 + a2 * b1 - aa) % modulus, (b1 * b2 - aa) % modulus)


GF4._cache = [GF4._make(c) for c in range(4)]
GR16._cache = [GR16._make(c) for c in range(16)]

_GF4_ADD = [[GF4(x.a + y.a, x.b + y.b) for y in GF4._cache] for x in GF4._cache]
_GF4_MUL = [[GF4(*_mul_pairs(x.a, x.b, y.a, y.b, 2)) for y in GF4._cache] for x in GF4._cache]
_GF4_INV = [None] + [next(y for y in GF4._cache if _GF4_MUL[x.code][y.code].code == 1)
                     for x in GF4._cache[1:]]

_GR16_ADD = [[GR16(x.a + y.a, x.b + y.b) for y in GR16._cache] for x in GR16._cache]
_GR16_NEG = [GR16(-x.a, -x.b) for x in GR16._cache]
_GR16_MUL = [[GR16(*_mul_pairs(x.a, x.b, y.a, y.b, 4)) for y in GR16._cache] for x in GR16._cache]

# named constants
ZERO2, ONE2, OMEGA2, OMEGA_BAR2 = GF4(0, 0), GF4(0, 1), GF4(1, 0), GF4(1, 1)
ZERO, ONE, TWO, OMEGA = GR16(0, 0), GR16(0, 1), GR16(0, 2), GR16(1, 0)
OMEGA_BAR = OMEGA * OMEGA
PSI = TWO + OMEGA

# order fixes move enumeration: 1, -w, w^2, -1, w, -w^2
UNITS: tuple[GR16, ...] = (ONE, -OMEGA, OMEGA_BAR, -ONE, OMEGA, -OMEGA_BAR)
K4_NONZERO: tuple[GF4, ...] = (ONE2, OMEGA2, OMEGA_BAR2)
_UNIT_SET = frozenset(UNITS)


class CosetClass(enum.Enum):
    ZERO = "Zero"
    UNIT = "Unit"
    TWO_UNIT = "TwoUnit"
    PSI_UNIT = "PsiUnit"


def _classify(x):
    if x is ZERO:
        return CosetClass.ZERO
    if x in _UNIT_SET:
        return CosetClass.UNIT
    if any(x is TWO * u for u in UNITS):
        return CosetClass.TWO_UNIT
    if any(x is PSI * u for u in UNITS):
        return CosetClass.PSI_UNIT
    raise AssertionError(f"{x!r} lies in no coset")


_COSET = [_classify(x) for x in GR16._cache]
_DECOMPOSE = {}
for _u in UNITS:
    _DECOMPOSE[_u] = (_u, False)
    _DECOMPOSE[PSI * _u] = (_u, True)


def gf4_add(x: GF4, y: GF4) -> GF4:
    return x + y


def gf4_mul(x: GF4, y: GF4) -> GF4:
    return x * y


def gr16_add(x: GR16, y: GR16) -> GR16:
    return x + y


def gr16_neg(x: GR16) -> GR16:
    return -x


def gr16_mul(x: GR16, y: GR16) -> GR16:
    return x * y


def coset_class(x: GR16) -> CosetClass:
    """Which of the cosets {0}, E, 2E, psi*E contains `x`."""
    return _COSET[x.code]


def hat(x: GR16 | GF4) -> tuple[int, int]:
    """Coordinates of `x` in the basis (w, 1)."""
    return (x.a, x.b)


def unhat4(pair) -> GR16:
    return GR16(pair[0], pair[1])


def unhat2(pair) -> GF4:
    return GF4(pair[0], pair[1])


def tilde(x: GR16 | GF4) -> np.ndarray:
    """2x2 matrix of multiplication by `x` acting on hat-coordinates.

    Column 0 is hat(x*w) and column 1 is hat(x*1), so that
    tilde(x) @ hat(y) == hat(x*y) modulo 4 (or 2 over GF(4)).
    """
    if isinstance(x, GF4):
        cols = (x * OMEGA2, x)
    else:
        cols = (x * OMEGA, x)
    return np.array([[cols[0].a, cols[1].a], [cols[0].b, cols[1].b]], dtype=np.int64)


def reduce_mod2(x: GR16) -> GF4:
    return GF4(x.a, x.b)


def two_lift(y: GF4) -> GR16:
    """The image 2*y of a GF(4) element inside GR(4^2)."""
    return GR16(2 * y.a, 2 * y.b)


_TEICH = {ZERO2: ZERO, ONE2: ONE, OMEGA2: OMEGA, OMEGA_BAR2: OMEGA_BAR}


def lift(y: GF4) -> GR16:
    """Lift by name: 0, 1, w, w^2 go to the same-named elements of GR(4^2)."""
    return _TEICH[y]


def unit_decompose(x: GR16) -> tuple[GR16, bool]:
    """Write a regular `x` as beta or psi*beta with beta in E.

    Returns (beta, psi_flag).
    """
    try:
        return _DECOMPOSE[x]
    except KeyError:
        raise ValueError(f"{x!r} is not regular") from None
