"""
Additive (Z4-linear) 1-perfect codes in Z4^(2m) x Z2^(2n') x Z4^(n'').

A check matrix D = D* | D' | D'' acts as  (x | y | z) -> D* x + 2 D' y + D'' z
(mod 4).  `expand_matrix` turns a linear check matrix A into its Z4 image B;
`build_D` then trades, for each chosen column lambda of A', the two B-pairs of
lambda (as an A* column and as an A' column) for three single Z4 columns
hat(lambda), hat(w lambda), hat(w^2 lambda).  `special_d77` is a fixed 3 x 21
matrix of a code in D(7, 7) whose coset group is Z4^3 (odd Delta).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .linear import CheckMatrixE, InadmissibleSyndrome, flat
from .rings import K4_NONZERO, OMEGA, OMEGA2, OMEGA_BAR, UNITS, lift
from .space import MixedSpace, MixedVertex, MoveKind, WeightOneMove, enumerate_moves


class MoveTableError(ValueError):
    """Two weight-1 moves share a syndrome, or a move has zero syndrome."""


@dataclass(frozen=True, eq=False)
class CheckMatrixZ:
    rows: int
    d_star: np.ndarray  # rows x 2m, mod 4
    d_prime: np.ndarray  # rows x 2n', mod 2
    d_dprime: np.ndarray  # rows x n'', mod 4
    name: Optional[str] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for attr, mod in (("d_star", 4), ("d_prime", 2), ("d_dprime", 4)):
            a = np.asarray(getattr(self, attr), dtype=np.int64).reshape(self.rows, -1) % mod
            a.flags.writeable = False
            object.__setattr__(self, attr, a)
        if self.d_star.shape[1] % 2 or self.d_prime.shape[1] % 2:
            raise ValueError("D* and D' must have an even number of columns")

    @classmethod
    def from_columns(cls, rows: int, d_star: Sequence, d_prime: Sequence, d_dprime: Sequence,
                     **kw) -> "CheckMatrixZ":
        def arr(cols):
            return np.array(cols, dtype=np.int64).reshape(len(cols), rows).T if len(cols) \
                else np.zeros((rows, 0), dtype=np.int64)
        return cls(rows, arr(d_star), arr(d_prime), arr(d_dprime), **kw)

    @property
    def m(self) -> int:
        return self.d_star.shape[1] // 2

    @property
    def n_prime(self) -> int:
        return self.d_prime.shape[1] // 2

    @property
    def n_dprime(self) -> int:
        return self.d_dprime.shape[1]

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.m, self.n_prime, self.n_dprime)

    @property
    def space(self) -> MixedSpace:
        return MixedSpace(*self.shape)

    def columns(self) -> tuple[list, list, list]:
        return tuple([tuple(int(v) for v in c) for c in part.T]
                     for part in (self.d_star, self.d_prime, self.d_dprime))

    def __eq__(self, other):
        if not isinstance(other, CheckMatrixZ):
            return NotImplemented
        return (self.rows == other.rows
                and all(np.array_equal(a, b) for a, b in zip(
                    (self.d_star, self.d_prime, self.d_dprime),
                    (other.d_star, other.d_prime, other.d_dprime))))

    __hash__ = None

    @cached_property
    def move_table(self) -> dict:
        return build_move_table(self)

    def __str__(self):
        return "\n".join(
            " ".join(map(str, self.d_star[i])) + " | " + " ".join(map(str, self.d_prime[i]))
            + " | " + " ".join(map(str, self.d_dprime[i]))
            for i in range(self.rows))


def expand_matrix(A: CheckMatrixE) -> CheckMatrixZ:
    """Replace every entry x of A by its 2x2 multiplication matrix."""
    d_star = []
    for col in A.a_star:
        d_star.append(flat(x * OMEGA for x in col))
        d_star.append(flat(col))
    d_prime = []
    for col in A.a_prime:
        d_prime.append(flat(y * OMEGA2 for y in col))
        d_prime.append(flat(col))
    return CheckMatrixZ.from_columns(2 * A.rows, d_star, d_prime, [],
                                     meta={"gamma": A.gamma, "delta": A.delta, "lambdas": []})


def eligible_lambdas(A: CheckMatrixE) -> list[int]:
    """Indices of A' columns that vanish in the last gamma positions."""
    g = A.gamma
    return [j for j, col in enumerate(A.a_prime) if not g or not any(col[-g:])]


def select_lambdas(A: CheckMatrixE, n_dprime: int, explicit: Optional[Sequence[int]] = None) -> tuple:
    """Choose n''/3 columns of A'; by default the lexicographically last eligible ones."""
    if n_dprime % 3:
        raise ValueError(f"n''={n_dprime} is not divisible by 3")
    q = n_dprime // 3
    ok = eligible_lambdas(A)
    if explicit is not None:
        sel = tuple(explicit)
        if len(sel) != q or len(set(sel)) != q:
            raise ValueError(f"need {q} distinct lambda indices, got {sel}")
        bad = [j for j in sel if j not in ok]
        if bad:
            raise ValueError(f"A' columns {bad} are nonzero in the last gamma rows")
        return sel
    if q > len(ok):
        raise ValueError(f"only {len(ok)} eligible columns, need {q}")
    return tuple(ok[len(ok) - q:]) if q else ()


def build_D(A: CheckMatrixE, selection: Sequence[int]) -> CheckMatrixZ:
    """Column surgery on B = expand(A) producing a code with n'' = 3 |selection|."""
    B = expand_matrix(A)
    drop_star, drop_prime, dprime = set(), set(), []
    for j in selection:
        lam = A.a_prime[j]
        lam4 = tuple(lift(y) for y in lam)
        i = A._star_index[lam4]
        drop_star |= {2 * i, 2 * i + 1}
        drop_prime |= {2 * j, 2 * j + 1}
        for c in (None, OMEGA, OMEGA_BAR):
            dprime.append(flat(lam4 if c is None else (c * x for x in lam4)))
    keep_star = [c for c in range(B.d_star.shape[1]) if c not in drop_star]
    keep_prime = [c for c in range(B.d_prime.shape[1]) if c not in drop_prime]
    d_dp = np.array(dprime, dtype=np.int64).T if dprime else np.zeros((B.rows, 0), dtype=np.int64)
    return CheckMatrixZ(B.rows, B.d_star[:, keep_star], B.d_prime[:, keep_prime], d_dp,
                        meta={"gamma": A.gamma, "delta": A.delta, "lambdas": list(selection)})


def syndrome_z(M: CheckMatrixZ, v: MixedVertex) -> tuple[int, ...]:
    if v.shape != M.shape:
        raise ValueError(f"vertex shape {v.shape} does not match matrix {M.shape}")
    s = np.zeros(M.rows, dtype=np.int64)
    if M.m:
        s += M.d_star @ np.array(v.z4pairs, dtype=np.int64).reshape(-1)
    if M.n_prime:
        s += 2 * (M.d_prime @ np.array(v.z2pairs, dtype=np.int64).reshape(-1))
    if M.n_dprime:
        s += M.d_dprime @ np.array(v.z4singles, dtype=np.int64)
    return tuple(int(x) for x in s % 4)


def is_codeword_z(M: CheckMatrixZ, v: MixedVertex) -> bool:
    return not any(syndrome_z(M, v))


def move_syndrome_z(M: CheckMatrixZ, move: WeightOneMove) -> tuple[int, ...]:
    i = move.index
    if move.kind is MoveKind.SH:
        x = move.value
        s = x.a * M.d_star[:, 2 * i] + x.b * M.d_star[:, 2 * i + 1]
    elif move.kind is MoveKind.K4:
        y = move.value
        s = 2 * (y.a * M.d_prime[:, 2 * i] + y.b * M.d_prime[:, 2 * i + 1])
    else:
        s = move.value * M.d_dprime[:, i]
    return tuple(int(v) for v in s % 4)


def move_syndromes(M: CheckMatrixZ) -> list[tuple[WeightOneMove, tuple]]:
    return [(mv, move_syndrome_z(M, mv)) for mv in enumerate_moves(*M.shape)]


def build_move_table(M: CheckMatrixZ) -> dict:
    """Map each weight-1 syndrome to its move; fails on collisions or zero syndromes."""
    table = {}
    for mv, s in move_syndromes(M):
        if not any(s):
            raise MoveTableError(f"move {mv} has zero syndrome")
        if s in table:
            raise MoveTableError(f"moves {table[s]} and {mv} share syndrome {s}")
        table[s] = mv
    return table


def decode_z(M: CheckMatrixZ, v: MixedVertex) -> MixedVertex:
    s = syndrome_z(M, v)
    if not any(s):
        return v
    mv = M.move_table.get(s)
    if mv is None:
        raise InadmissibleSyndrome(f"syndrome {s} is not covered by any weight-1 move")
    if mv.kind is MoveKind.Z4:
        return v.apply(WeightOneMove(mv.kind, mv.index, -mv.value % 4))
    return v.apply(WeightOneMove(mv.kind, mv.index, -mv.value))


def covered_syndromes_b(A: CheckMatrixE, j: int) -> list[tuple]:
    """Syndromes covered in B = expand(A) by the A* and A' copies of lambda = A'[j]."""
    B = expand_matrix(A)
    lam4 = tuple(lift(y) for y in A.a_prime[j])
    i = A._star_index[lam4]
    out = [move_syndrome_z(B, WeightOneMove(MoveKind.SH, i, u)) for u in UNITS]
    out += [move_syndrome_z(B, WeightOneMove(MoveKind.K4, j, y)) for y in K4_NONZERO]
    return out


def covered_syndromes_d(D: CheckMatrixZ, position: int) -> list[tuple]:
    """Syndromes covered by the three D'' columns added for the `position`-th lambda."""
    return [move_syndrome_z(D, WeightOneMove(MoveKind.Z4, 3 * position + c, z))
            for c in range(3) for z in (1, 2, 3)]


# fmt: off
_D77_ROWS = [
    [1, 2, 2, 2, 0, 3, 3, 2, 0, 3, 1, 3, 1, 1,   1, 0, 0, 1, 2, 3, 1],
    [0, 3, 3, 0, 2, 3, 1, 1, 3, 3, 3, 0, 0, 2,   0, 1, 0, 3, 3, 3, 2],
    [2, 2, 0, 3, 3, 2, 0, 3, 1, 3, 1, 1, 1, 2,   0, 0, 1, 2, 3, 1, 1],
]
# fmt: on


def special_d77() -> CheckMatrixZ:
    """Check matrix of an additive 1-perfect code in D(7, 7) with n' = 0, n'' = 7."""
    a = np.array(_D77_ROWS, dtype=np.int64)
    return CheckMatrixZ(3, a[:, :14], np.zeros((3, 0), dtype=np.int64), a[:, 14:], name="d77")
