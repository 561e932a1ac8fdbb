"""
Linear 1-perfect codes over GR(4^2) in D(m, n).

The check matrix A = A* | A' has gamma + delta rows.  A* holds every column over
GR(4^2) that has a regular entry, whose first regular entry is 1 or psi, and whose
last gamma entries are zero divisors; A' holds every nonzero column over GF(4)
whose first nonzero entry is 1.  The code is the kernel of

    (x | y)  ->  A* x^T + 2 A' y^T.

Columns are sorted lexicographically by their digit strings.  Move and column
indices are 0-based within their part.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .rings import (GF4, GR16, UNITS, ZERO, ZERO2, two_lift, unit_decompose, PSI, ONE)
from .space import DoobSpace, DoobVertex, MoveKind, WeightOneMove, ball_size
from .params import linear_size

DEFAULT_SIZE_CAP = 2 ** 16

_UNIT_INV = {u: next(w for w in UNITS if (u * w) is ONE) for u in UNITS}


class InadmissibleSyndrome(ValueError):
    """No weight-1 move produces this syndrome; the matrix is not a perfect-code check matrix."""


@dataclass(frozen=True)
class CheckMatrixE:
    gamma: int
    delta: int
    a_star: tuple  # columns, each a tuple of GR16
    a_prime: tuple  # columns, each a tuple of GF4
    _star_index: dict = field(init=False, repr=False, compare=False)
    _prime_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a_star", tuple(tuple(c) for c in self.a_star))
        object.__setattr__(self, "a_prime", tuple(tuple(c) for c in self.a_prime))
        object.__setattr__(self, "_star_index", {c: i for i, c in enumerate(self.a_star)})
        object.__setattr__(self, "_prime_index", {c: j for j, c in enumerate(self.a_prime)})

    @property
    def rows(self) -> int:
        return self.gamma + self.delta

    @property
    def m(self) -> int:
        return len(self.a_star)

    @property
    def n(self) -> int:
        return len(self.a_prime)

    @property
    def space(self) -> DoobSpace:
        return DoobSpace(self.m, self.n)

    def __str__(self):
        rows = []
        for i in range(self.rows):
            left = " ".join(str(c[i]) for c in self.a_star)
            right = " ".join(str(c[i]) for c in self.a_prime)
            rows.append(f"{left} | {right}")
        return "\n".join(rows)


def star_column_ok(col, gamma: int) -> bool:
    """Column predicates for A*: has a regular entry, the first one is 1 or psi,
    the last `gamma` entries are zero divisors."""
    first = next((x for x in col if x.is_regular), None)
    if first is None or (first is not ONE and first is not PSI):
        return False
    return all(not x.is_regular for x in col[len(col) - gamma:]) if gamma else True


def prime_column_ok(col) -> bool:
    first = next((y for y in col if y), None)
    return first is not None and first.code == 1


def build_check_matrix(gamma: int, delta: int, size_cap: int = DEFAULT_SIZE_CAP) -> CheckMatrixE:
    m, n = linear_size(gamma, delta)
    if m + n > size_cap:
        raise ValueError(f"A_({gamma},{delta}) has {m + n} columns, over the cap {size_cap}")
    rows = gamma + delta
    a_star = [c for c in itertools.product(GR16.elements(), repeat=rows)
              if star_column_ok(c, gamma)]
    a_prime = [c for c in itertools.product(GF4.elements(), repeat=rows) if prime_column_ok(c)]
    assert (len(a_star), len(a_prime)) == (m, n)
    return CheckMatrixE(gamma, delta, a_star, a_prime)


def syndrome(M: CheckMatrixE, v: DoobVertex) -> tuple:
    if v.shape != (M.m, M.n):
        raise ValueError(f"vertex shape {v.shape} does not match matrix ({M.m}, {M.n})")
    s = [ZERO] * M.rows
    for x, col in zip(v.sh, M.a_star):
        if x is not ZERO:
            s = [si + x * ci for si, ci in zip(s, col)]
    for y, col in zip(v.k4, M.a_prime):
        if y is not ZERO2:
            s = [si + two_lift(y * ci) for si, ci in zip(s, col)]
    return tuple(s)


def is_codeword(M: CheckMatrixE, v: DoobVertex) -> bool:
    return all(x is ZERO for x in syndrome(M, v))


def move_syndrome(M: CheckMatrixE, move: WeightOneMove) -> tuple:
    if move.kind is MoveKind.SH:
        return tuple(move.value * c for c in M.a_star[move.index])
    if move.kind is MoveKind.K4:
        return tuple(two_lift(move.value * c) for c in M.a_prime[move.index])
    raise ValueError("linear codes have no Z4-single coordinates")


def decode_syndrome(M: CheckMatrixE, s) -> WeightOneMove:
    """The weight-1 move whose syndrome is `s`."""
    s = tuple(s)
    if all(x is ZERO for x in s):
        raise ValueError("zero syndrome has no error move")
    if M.gamma and any(x.is_regular for x in s[-M.gamma:]):
        raise InadmissibleSyndrome(f"regular entry among the last {M.gamma} of {_fmt(s)}")
    first = next((x for x in s if x.is_regular), None)
    if first is None:
        # order 2: s = 2t, t over GF(4)
        t = tuple(GF4(x.a // 2, x.b // 2) for x in s)
        alpha = next(y for y in t if y)
        col = tuple(alpha.inverse() * y for y in t)
        j = M._prime_index.get(col)
        if j is None:
            raise InadmissibleSyndrome(f"{_fmt(s)} not covered by A'")
        return WeightOneMove(MoveKind.K4, j, alpha)
    beta, _ = unit_decompose(first)
    col = tuple(_UNIT_INV[beta] * x for x in s)
    i = M._star_index.get(col)
    if i is None:
        raise InadmissibleSyndrome(f"{_fmt(s)} not covered by A*")
    return WeightOneMove(MoveKind.SH, i, beta)


def decode(M: CheckMatrixE, v: DoobVertex) -> DoobVertex:
    """The codeword at distance <= 1 from `v`."""
    s = syndrome(M, v)
    if all(x is ZERO for x in s):
        return v
    mv = decode_syndrome(M, s)
    return v.apply(WeightOneMove(mv.kind, mv.index, -mv.value))


def code_cardinality(m: int, n: int) -> int:
    return 16 ** m * 4 ** n // ball_size(m, n)


def flat(s) -> tuple[int, ...]:
    """Syndrome over GR(4^2) as a Z4 vector of hat coordinates."""
    return tuple(itertools.chain.from_iterable((x.a, x.b) for x in s))


def _fmt(s):
    return "(" + ",".join(map(str, s)) + ")"
