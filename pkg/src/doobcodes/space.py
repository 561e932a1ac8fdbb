"""
Vertices of the Doob graph D(m, n) = Sh^m x K^n.

Two representations are supported:

* `DoobVertex`: a point of E4^m x E2^n (Shrikhande coordinates in GR(4^2),
  complete-graph coordinates in GF(4));
* `MixedVertex`: a point of Z4^(2m) x Z2^(2n') x Z4^(n''), where each
  Shrikhande coordinate is a Z4 pair, each K coordinate is either a Z2 pair or a
  single Z4 residue.

`DoobSpace` and `MixedSpace` wrap the ambient parameters and provide the
enumeration helpers the verification code relies on (all vertices, weight-1
moves, radius-1 balls, random vertices).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .rings import GF4, GR16, K4_NONZERO, UNITS, ZERO, ZERO2, hat, unhat2, unhat4

_UNIT_SET = frozenset(UNITS)


def sh_dist(x: GR16, y: GR16) -> int:
    """Distance in the Shrikhande graph (Cayley graph of GR(4^2)^+ w.r.t. the units E)."""
    d = x - y
    if d is ZERO:
        return 0
    return 1 if d in _UNIT_SET else 2


def k4_dist(x: GF4, y: GF4) -> int:
    return 0 if x is y else 1


def z4_single_dist(x: int, y: int) -> int:
    return 0 if (x - y) % 4 == 0 else 1


class MoveKind(enum.Enum):
    SH = "ShCoord"
    K4 = "K4Coord"
    Z4 = "Z4Single"


@dataclass(frozen=True)
class WeightOneMove:
    """A weight-1 error: a nonzero value placed at one coordinate.

    `index` is 0-based within its own part (Sh, K or Z4-single).  `value` is a
    unit of GR(4^2) for Sh, a nonzero GF4 for K, and 1..3 for Z4 singles.  For a
    `MixedVertex`, K moves land on the Z2 pairs (as hat(value)).
    """

    kind: MoveKind
    index: int
    value: Union[GR16, GF4, int]

    def __str__(self):
        return f"{self.kind.value}[{self.index}]={self.value}"


class AmbientMismatch(ValueError):
    pass


@dataclass(frozen=True)
class DoobVertex:
    sh: tuple
    k4: tuple

    def __post_init__(self):
        object.__setattr__(self, "sh", tuple(self.sh))
        object.__setattr__(self, "k4", tuple(self.k4))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.sh), len(self.k4))

    def _check(self, other):
        if self.shape != other.shape:
            raise AmbientMismatch(f"D{self.shape} vs D{other.shape}")

    def __add__(self, other: "DoobVertex") -> "DoobVertex":
        self._check(other)
        return DoobVertex(tuple(x + y for x, y in zip(self.sh, other.sh)),
                          tuple(x + y for x, y in zip(self.k4, other.k4)))

    def __sub__(self, other: "DoobVertex") -> "DoobVertex":
        self._check(other)
        return DoobVertex(tuple(x - y for x, y in zip(self.sh, other.sh)),
                          tuple(x - y for x, y in zip(self.k4, other.k4)))

    def __neg__(self) -> "DoobVertex":
        return DoobVertex(tuple(-x for x in self.sh), self.k4)

    def scale(self, c: GR16) -> "DoobVertex":
        """Multiply by a ring constant (acts on K coordinates through reduction mod 2)."""
        c2 = GF4(c.a, c.b)
        return DoobVertex(tuple(c * x for x in self.sh), tuple(c2 * y for y in self.k4))

    def apply(self, move: WeightOneMove) -> "DoobVertex":
        if move.kind is MoveKind.SH:
            sh = list(self.sh)
            sh[move.index] = sh[move.index] + move.value
            return DoobVertex(sh, self.k4)
        if move.kind is MoveKind.K4:
            k4 = list(self.k4)
            k4[move.index] = k4[move.index] + move.value
            return DoobVertex(self.sh, k4)
        raise ValueError("Z4-single moves do not apply to E4/E2 vertices")

    def __str__(self):
        return format_vertex(self)


@dataclass(frozen=True)
class MixedVertex:
    z4pairs: tuple
    z2pairs: tuple
    z4singles: tuple

    def __post_init__(self):
        object.__setattr__(self, "z4pairs", tuple((p[0] % 4, p[1] % 4) for p in self.z4pairs))
        object.__setattr__(self, "z2pairs", tuple((p[0] % 2, p[1] % 2) for p in self.z2pairs))
        object.__setattr__(self, "z4singles", tuple(z % 4 for z in self.z4singles))

    @property
    def shape(self) -> tuple[int, int, int]:
        return (len(self.z4pairs), len(self.z2pairs), len(self.z4singles))

    def _check(self, other):
        if self.shape != other.shape:
            raise AmbientMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "MixedVertex") -> "MixedVertex":
        self._check(other)
        return MixedVertex(
            [(p[0] + q[0], p[1] + q[1]) for p, q in zip(self.z4pairs, other.z4pairs)],
            [(p[0] + q[0], p[1] + q[1]) for p, q in zip(self.z2pairs, other.z2pairs)],
            [x + y for x, y in zip(self.z4singles, other.z4singles)],
        )

    def __sub__(self, other: "MixedVertex") -> "MixedVertex":
        return self + (-other)

    def __neg__(self) -> "MixedVertex":
        return MixedVertex([(-p[0], -p[1]) for p in self.z4pairs], self.z2pairs,
                           [-z for z in self.z4singles])

    def apply(self, move: WeightOneMove) -> "MixedVertex":
        if move.kind is MoveKind.SH:
            pairs = list(self.z4pairs)
            p = pairs[move.index]
            pairs[move.index] = (p[0] + move.value.a, p[1] + move.value.b)
            return MixedVertex(pairs, self.z2pairs, self.z4singles)
        if move.kind is MoveKind.K4:
            pairs = list(self.z2pairs)
            p = pairs[move.index]
            pairs[move.index] = (p[0] + move.value.a, p[1] + move.value.b)
            return MixedVertex(self.z4pairs, pairs, self.z4singles)
        singles = list(self.z4singles)
        singles[move.index] += move.value
        return MixedVertex(self.z4pairs, self.z2pairs, singles)

    def flat(self) -> tuple[int, ...]:
        """All coordinates as one tuple (x | y | z)."""
        return tuple(itertools.chain(itertools.chain.from_iterable(self.z4pairs),
                                     itertools.chain.from_iterable(self.z2pairs),
                                     self.z4singles))

    def __str__(self):
        return format_mixed(self)


def doob_dist(u: DoobVertex, v: DoobVertex) -> int:
    u._check(v)
    return (sum(sh_dist(x, y) for x, y in zip(u.sh, v.sh))
            + sum(x is not y for x, y in zip(u.k4, v.k4)))


def weight(v: DoobVertex) -> int:
    return (sum(sh_dist(x, ZERO) for x in v.sh)
            + sum(y is not ZERO2 for y in v.k4))


def mixed_weight(v: MixedVertex) -> int:
    return (sum(sh_dist(unhat4(p), ZERO) for p in v.z4pairs)
            + sum(p != (0, 0) for p in v.z2pairs)
            + sum(z != 0 for z in v.z4singles))


def mixed_dist(u: MixedVertex, v: MixedVertex) -> int:
    return mixed_weight(u - v)


def ball_size(m: int, n: int) -> int:
    return 6 * m + 3 * n + 1


def enumerate_moves(m: int, n: int, n4: int = 0) -> list[WeightOneMove]:
    """All weight-1 moves in canonical order: Sh, then K, then Z4 singles."""
    moves = [WeightOneMove(MoveKind.SH, i, u) for i in range(m) for u in UNITS]
    moves += [WeightOneMove(MoveKind.K4, j, y) for j in range(n) for y in K4_NONZERO]
    moves += [WeightOneMove(MoveKind.Z4, j, z) for j in range(n4) for z in (1, 2, 3)]
    return moves


def enumerate_weight_one(m: int, n: int) -> list[tuple[WeightOneMove, DoobVertex]]:
    zero = DoobSpace(m, n).zero()
    return [(mv, zero.apply(mv)) for mv in enumerate_moves(m, n)]


def enumerate_weight_one_mixed(m: int, n2: int, n4: int) -> list[tuple[WeightOneMove, MixedVertex]]:
    zero = MixedSpace(m, n2, n4).zero()
    return [(mv, zero.apply(mv)) for mv in enumerate_moves(m, n2, n4)]


def to_mixed(v: DoobVertex) -> MixedVertex:
    return MixedVertex([hat(x) for x in v.sh], [hat(y) for y in v.k4], [])


def from_mixed(v: MixedVertex) -> DoobVertex:
    if v.z4singles:
        raise ValueError("a vertex with Z4-single coordinates has no E4/E2 form")
    return DoobVertex([unhat4(p) for p in v.z4pairs], [unhat2(p) for p in v.z2pairs])


class DoobSpace:
    """The vertex set E4^m x E2^n of D(m, n)."""

    def __init__(self, m: int, n: int):
        if m < 0 or n < 0:
            raise ValueError("negative dimension")
        self.m, self.n = m, n
        self.moves = enumerate_moves(m, n)

    def __repr__(self):
        return f"DoobSpace(m={self.m}, n={self.n})"

    @property
    def size(self) -> int:
        return 16 ** self.m * 4 ** self.n

    @property
    def ball_size(self) -> int:
        return ball_size(self.m, self.n)

    def zero(self) -> DoobVertex:
        return DoobVertex((ZERO,) * self.m, (ZERO2,) * self.n)

    def vertices(self) -> Iterator[DoobVertex]:
        sh_all, k_all = GR16.elements(), GF4.elements()
        for sh in itertools.product(sh_all, repeat=self.m):
            for k4 in itertools.product(k_all, repeat=self.n):
                yield DoobVertex(sh, k4)

    def ball(self, v: DoobVertex) -> list[DoobVertex]:
        return [v] + [v.apply(mv) for mv in self.moves]

    def random_vertex(self, rng: np.random.Generator) -> DoobVertex:
        sh = rng.integers(0, 16, size=self.m)
        k4 = rng.integers(0, 4, size=self.n)
        return DoobVertex([GR16(*divmod(int(c), 4)) for c in sh],
                          [GF4(*divmod(int(c), 2)) for c in k4])

    def dist(self, u, v) -> int:
        return doob_dist(u, v)


class MixedSpace:
    """The vertex set Z4^(2m) x Z2^(2n2) x Z4^(n4) with the D(m, n2+n4) metric."""

    def __init__(self, m: int, n2: int, n4: int):
        if min(m, n2, n4) < 0:
            raise ValueError("negative dimension")
        self.m, self.n2, self.n4 = m, n2, n4
        self.moves = enumerate_moves(m, n2, n4)

    def __repr__(self):
        return f"MixedSpace(m={self.m}, n2={self.n2}, n4={self.n4})"

    @property
    def size(self) -> int:
        return 16 ** self.m * 4 ** (self.n2 + self.n4)

    @property
    def ball_size(self) -> int:
        return ball_size(self.m, self.n2 + self.n4)

    def zero(self) -> MixedVertex:
        return MixedVertex([(0, 0)] * self.m, [(0, 0)] * self.n2, [0] * self.n4)

    def vertices(self) -> Iterator[MixedVertex]:
        p4 = [(a, b) for a in range(4) for b in range(4)]
        p2 = [(a, b) for a in range(2) for b in range(2)]
        for x in itertools.product(p4, repeat=self.m):
            for y in itertools.product(p2, repeat=self.n2):
                for z in itertools.product(range(4), repeat=self.n4):
                    yield MixedVertex(x, y, z)

    def ball(self, v: MixedVertex) -> list[MixedVertex]:
        return [v] + [v.apply(mv) for mv in self.moves]

    def random_vertex(self, rng: np.random.Generator) -> MixedVertex:
        x = rng.integers(0, 4, size=(self.m, 2))
        y = rng.integers(0, 2, size=(self.n2, 2))
        z = rng.integers(0, 4, size=self.n4)
        return MixedVertex([tuple(map(int, p)) for p in x], [tuple(map(int, p)) for p in y],
                           [int(c) for c in z])

    def dist(self, u, v) -> int:
        return mixed_dist(u, v)


# -- text syntax ------------------------------------------------------------

def format_vertex(v: DoobVertex) -> str:
    return ",".join(map(str, v.sh)) + "|" + ",".join(map(str, v.k4))


def _tokens(part: str) -> list[str]:
    part = part.strip()
    return [t.strip() for t in part.split(",")] if part else []


def parse_vertex(text: str, shape: Sequence[int] | None = None) -> DoobVertex:
    """Parse "x1,...,xm|y1,...,yn" (parentheses optional)."""
    text = text.strip().strip("()")
    parts = text.split("|")
    if len(parts) != 2:
        raise ValueError(f"expected 'sh|k4', got {text!r}")
    v = DoobVertex([GR16.parse(t) for t in _tokens(parts[0])],
                   [GF4.parse(t) for t in _tokens(parts[1])])
    if shape is not None and v.shape != tuple(shape):
        raise AmbientMismatch(f"vertex has shape {v.shape}, expected {tuple(shape)}")
    return v


def format_mixed(v: MixedVertex) -> str:
    return "|".join([
        ",".join(f"{a}{b}" for a, b in v.z4pairs),
        ",".join(f"{a}{b}" for a, b in v.z2pairs),
        ",".join(str(z) for z in v.z4singles),
    ])


def parse_mixed(text: str, shape: Sequence[int] | None = None) -> MixedVertex:
    """Parse "pairs|pairs|singles"; pairs are two digits, singles one digit."""
    text = text.strip().strip("()")
    parts = text.split("|")
    if len(parts) != 3:
        raise ValueError(f"expected 'z4pairs|z2pairs|z4singles', got {text!r}")
    x = [hat(GR16.parse(t)) for t in _tokens(parts[0])]
    y = [hat(GF4.parse(t)) for t in _tokens(parts[1])]
    z = []
    for t in _tokens(parts[2]):
        if len(t) != 1 or t not in "0123":
            raise ValueError(f"bad Z4 single {t!r}")
        z.append(int(t))
    v = MixedVertex(x, y, z)
    if shape is not None and v.shape != tuple(shape):
        raise AmbientMismatch(f"vertex has shape {v.shape}, expected {tuple(shape)}")
    return v
