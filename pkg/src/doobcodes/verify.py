"""
Executable perfectness checks.

* `verify_coverage`: for a kernel code given by a check matrix.  Passes iff the
  weight-1 syndromes are nonzero and pairwise distinct and the subgroup they
  generate has exactly ball-size elements.  Distinct syndromes give minimum
  distance >= 3; the subgroup order is the index of the code, so together the
  balls tile the space.  Nothing is enumerated over the vertex set.
* `verify_exhaustive`: counts, for every vertex of a small space, the codewords
  in its radius-1 ball.
* `verify_sampled`: the same census at seeded random vertices.

`enumerate_kernel` lists the codewords of a small kernel code by meeting in the
middle over two halves of the coordinates.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from . import additive, linear
from .additive import CheckMatrixZ
from .linear import CheckMatrixE
from .rings import GF4, GR16, K4_NONZERO, UNITS
from .space import (DoobSpace, DoobVertex, MixedSpace, MixedVertex, MoveKind, WeightOneMove,
                    enumerate_moves)

WORKERS_ENV = "DOOBCODES_WORKERS"
DEFAULT_EXHAUSTIVE_CAP = 2 ** 20
SAMPLE_CHUNK = 1000


class _Report:
    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = type(self).__name__
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)

    def __bool__(self):
        return self.verdict


@dataclass
class CoverageReport(_Report):
    total_moves: int
    distinct_syndromes: int
    zero_syndrome_moves: int
    subgroup_order: int
    expected_ball_size: int
    duplicates: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return (self.distinct_syndromes == self.total_moves and self.zero_syndrome_moves == 0
                and self.subgroup_order == self.expected_ball_size)

    def to_dict(self):
        d = super().to_dict()
        d["verdict"] = "pass" if self.verdict else "fail"
        return d

    def summary(self) -> str:
        return (f"coverage: {'PASS' if self.verdict else 'FAIL'}  moves={self.total_moves} "
                f"distinct={self.distinct_syndromes} zero={self.zero_syndrome_moves} "
                f"subgroup={self.subgroup_order} ball={self.expected_ball_size}")


@dataclass
class PartitionReport(_Report):
    space_size: int
    codeword_count: int
    ball_size: int
    uncovered: int
    multiply_covered: int

    @property
    def verdict(self) -> bool:
        return (self.uncovered == 0 and self.multiply_covered == 0
                and self.codeword_count * self.ball_size == self.space_size)

    def to_dict(self):
        d = super().to_dict()
        d["verdict"] = "pass" if self.verdict else "fail"
        return d

    def summary(self) -> str:
        return (f"exhaustive: {'PASS' if self.verdict else 'FAIL'}  vertices={self.space_size} "
                f"codewords={self.codeword_count} uncovered={self.uncovered} "
                f"multiply_covered={self.multiply_covered}")


@dataclass
class SampleReport(_Report):
    samples: int
    seed: int
    failures: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.failures

    def to_dict(self):
        d = super().to_dict()
        d["failures"] = [(str(v), c) for v, c in self.failures]
        d["verdict"] = "pass" if self.verdict else "fail"
        return d

    def summary(self) -> str:
        return (f"sampled: {'PASS' if self.verdict else 'FAIL'}  samples={self.samples} "
                f"seed={self.seed} failures={len(self.failures)}")


# -- coverage -----------------------------------------------------------------

def weight_one_syndromes(matrix) -> list[tuple[WeightOneMove, tuple]]:
    """Every weight-1 move with its syndrome as a flat Z4 tuple."""
    if isinstance(matrix, CheckMatrixE):
        return [(mv, linear.flat(linear.move_syndrome(matrix, mv)))
                for mv in enumerate_moves(matrix.m, matrix.n)]
    if isinstance(matrix, CheckMatrixZ):
        return additive.move_syndromes(matrix)
    raise TypeError(f"not a check matrix: {type(matrix).__name__}")


def subgroup_closure(generators, length: int) -> set:
    """The additive subgroup of Z4^length generated by `generators`."""
    group = {(0,) * length}
    for g in generators:
        if g in group:
            continue
        shifted = set(group)
        step = group
        for _ in range(3):
            step = {tuple((a + b) % 4 for a, b in zip(x, g)) for x in step}
            shifted |= step
        group = shifted
    return group


def verify_coverage(matrix) -> CoverageReport:
    pairs = weight_one_syndromes(matrix)
    if isinstance(matrix, CheckMatrixE):
        length, ball = 2 * matrix.rows, 6 * matrix.m + 3 * matrix.n + 1
    else:
        length, ball = matrix.rows, matrix.space.ball_size
    seen: dict = {}
    dups = []
    zero = 0
    for mv, s in pairs:
        if not any(s):
            zero += 1
        if s in seen:
            dups.append((str(seen[s]), str(mv)))
        else:
            seen[s] = mv
    group = subgroup_closure((s for _, s in pairs), length)
    return CoverageReport(total_moves=len(pairs), distinct_syndromes=len(seen),
                          zero_syndrome_moves=zero, subgroup_order=len(group),
                          expected_ball_size=ball, duplicates=dups)


# -- exhaustive / sampled -----------------------------------------------------

def verify_exhaustive(is_member: Callable, space, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> PartitionReport:
    """Count codewords in every radius-1 ball of `space` (at most `cap` vertices)."""
    if space.size > cap:
        raise ValueError(f"space has {space.size} vertices, over the cap {cap}")
    counts: dict = {}
    codewords = 0
    for v in space.vertices():
        if is_member(v):
            codewords += 1
            for w in space.ball(v):
                counts[w] = counts.get(w, 0) + 1
    # ball membership is symmetric, so counts[w] is the census at w
    uncovered = space.size - len(counts)
    multiply = sum(1 for c in counts.values() if c > 1)
    return PartitionReport(space_size=space.size, codeword_count=codewords,
                           ball_size=space.ball_size, uncovered=uncovered,
                           multiply_covered=multiply)


def ball_census(is_member: Callable, space, v) -> int:
    return sum(1 for w in space.ball(v) if is_member(w))


def _census_chunk(is_member, space, seed_seq, count):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    bad = []
    for _ in range(count):
        v = space.random_vertex(rng)
        c = ball_census(is_member, space, v)
        if c != 1:
            bad.append((v, c))
    return bad


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def verify_sampled(is_member: Callable, space, samples: int, seed: int,
                   workers: Optional[int] = None) -> SampleReport:
    """Ball census at `samples` random vertices.

    Samples are drawn in fixed chunks, each from its own child of
    SeedSequence(seed), so the result does not depend on the worker count.
    """
    root = np.random.SeedSequence(seed)
    sizes = [SAMPLE_CHUNK] * (samples // SAMPLE_CHUNK)
    if samples % SAMPLE_CHUNK:
        sizes.append(samples % SAMPLE_CHUNK)
    children = root.spawn(len(sizes))
    workers = workers or worker_count()
    jobs = list(zip(children, sizes))
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda j: _census_chunk(is_member, space, *j), jobs))
    else:
        results = [_census_chunk(is_member, space, *j) for j in jobs]
    failures = [f for chunk in results for f in chunk]
    return SampleReport(samples=samples, seed=seed, failures=failures)


# -- enumeration of kernel codes ------------------------------------------------

def _coordinate_tables(matrix):
    """Per coordinate: list of (value, flat syndrome contribution), zero first."""
    tables = []
    if isinstance(matrix, CheckMatrixE):
        for i in range(matrix.m):
            tables.append([(x, linear.flat(x * c for c in matrix.a_star[i])) for x in GR16.elements()])
        for j in range(matrix.n):
            tables.append([(y, linear.flat(linear.two_lift(y * c) for c in matrix.a_prime[j]))
                           for y in GF4.elements()])
        return tables
    Ds, Dp, Ddp = matrix.d_star, matrix.d_prime, matrix.d_dprime
    for i in range(matrix.m):
        tables.append([((a, b), tuple(int(t) for t in (a * Ds[:, 2 * i] + b * Ds[:, 2 * i + 1]) % 4))
                       for a in range(4) for b in range(4)])
    for j in range(matrix.n_prime):
        tables.append([((a, b), tuple(int(t) for t in 2 * (a * Dp[:, 2 * j] + b * Dp[:, 2 * j + 1]) % 4))
                       for a in range(2) for b in range(2)])
    for j in range(matrix.n_dprime):
        tables.append([(z, tuple(int(t) for t in z * Ddp[:, j] % 4)) for z in range(4)])
    return tables


def _assemble(matrix, values):
    if isinstance(matrix, CheckMatrixE):
        return DoobVertex(values[:matrix.m], values[matrix.m:])
    m, n2 = matrix.m, matrix.n_prime
    return MixedVertex(values[:m], values[m:m + n2], values[m + n2:])


def _half(tables, length):
    out = {}
    for combo in itertools.product(*tables):
        s = [0] * length
        for _, contrib in combo:
            s = [(a + b) % 4 for a, b in zip(s, contrib)]
        out.setdefault(tuple(s), []).append(tuple(v for v, _ in combo))
    return out


def kernel_size(matrix) -> int:
    space = matrix.space
    return space.size // len(subgroup_closure((s for _, s in weight_one_syndromes(matrix)),
                                              _syndrome_length(matrix)))


def _syndrome_length(matrix):
    return 2 * matrix.rows if isinstance(matrix, CheckMatrixE) else matrix.rows


def enumerate_kernel(matrix, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> list:
    """All codewords of the kernel code of `matrix` (refuses above `cap`)."""
    size = kernel_size(matrix)
    if size > cap:
        raise ValueError(f"code has {size} codewords, over the cap {cap}")
    tables = _coordinate_tables(matrix)
    length = _syndrome_length(matrix)
    # split so both halves have about sqrt(|V|) points
    logs = [np.log2(len(t)) for t in tables]
    total, acc, cut = sum(logs), 0.0, 0
    while cut < len(tables) and acc + logs[cut] <= total / 2:
        acc += logs[cut]
        cut += 1
    left, right = _half(tables[:cut], length), _half(tables[cut:], length)
    words = []
    for s, rights in right.items():
        neg = tuple((-x) % 4 for x in s)
        for lv in left.get(neg, ()):
            for rv in rights:
                words.append(_assemble(matrix, list(lv + rv)))
    assert len(words) == size
    return words
