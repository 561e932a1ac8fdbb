"""
Nonlinear 1-perfect codes in D(m, n) from a product of small block codes.

A k x r grid of blocks is used.  Each block is either a "hamming5" block (three
GF(4) coordinates) or a "doob13" block (one GR(4^2) and one GF(4) coordinate).
Each block type carries two functions f, g into GF(4) such that
{(x, f(x), g(x))} is 1-perfect in a 1024-point space (H(5,4), resp. D(1,3)).
With row sums f_i of the f's, column sums g_j of the g's and two quaternary
Hamming codes C' (length k), C'' (length r), the code is

    C = {(X, f(X) + c', g(X) + c'')}.

Vertex layout (as a `DoobVertex` of D(m, 3kr - 2m + k + r)):
sh holds the Shrikhande coordinate of every doob13 block in row-major order;
k4 holds, block by block in row-major order, the K coordinate of a doob13 block
or the three coordinates of a hamming5 block, followed by u (k entries) and
v (r entries).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .linear import build_check_matrix
from .params import _log
from .rings import GF4, GR16, K4_NONZERO, OMEGA2, OMEGA_BAR2, ONE2, UNITS, ZERO2
from .space import DoobSpace, DoobVertex, sh_dist

# phi: Z4 -> GF(4)
PHI: tuple[GF4, ...] = (ZERO2, ONE2, OMEGA2, OMEGA_BAR2)
PHI_INV = {y: z for z, y in enumerate(PHI)}


class BlockKind(enum.Enum):
    HAMMING5 = "hamming5"
    DOOB13 = "doob13"


def f0(x: GF4, y: GF4, z: GF4) -> GF4:
    return x + y + z


def g0(x: GF4, y: GF4, z: GF4) -> GF4:
    return x + OMEGA2 * y + OMEGA_BAR2 * z


def f1(w: GR16, t: GF4) -> GF4:
    x, y, z = w.a, w.b, PHI_INV[t]
    return PHI[(x + y + z) % 4]


def g1(w: GR16, t: GF4) -> GF4:
    x, y, z = w.a, w.b, PHI_INV[t]
    return PHI[(x + 2 * y + 3 * z) % 4]


def block_functions():
    """(f0, g0, f1, g1)."""
    return f0, g0, f1, g1


def _block_points(kind):
    if kind is BlockKind.HAMMING5:
        return list(itertools.product(GF4.elements(), repeat=3))
    return list(itertools.product(GR16.elements(), GF4.elements()))


def _block_dist(kind, p, q):
    if kind is BlockKind.HAMMING5:
        return sum(a is not b for a, b in zip(p, q))
    return sh_dist(p[0], q[0]) + (p[1] is not q[1])


class BlockCode:
    """{(x, f(x), g(x))} for one block type, with a full nearest-codeword table."""

    def __init__(self, kind: BlockKind):
        self.kind = kind
        if kind is BlockKind.HAMMING5:
            self.f, self.g = (lambda p: f0(*p)), (lambda p: g0(*p))
        else:
            self.f, self.g = (lambda p: f1(*p)), (lambda p: g1(*p))
        self.points = _block_points(kind)
        self.codewords = [(p, self.f(p), self.g(p)) for p in self.points]
        self.decode_table = self._build_table()

    def _build_table(self):
        table = {}
        for p, fp, gp in self.codewords:
            word = (p, fp, gp)
            for nb in self._ball(word):
                if nb in table:
                    raise AssertionError(f"{self.kind.value}: balls overlap at {nb}")
                table[nb] = word
        if len(table) != 1024:
            raise AssertionError(f"{self.kind.value}: balls cover {len(table)} of 1024 points")
        return table

    def _ball(self, word):
        p, a, b = word
        yield word
        if self.kind is BlockKind.HAMMING5:
            for i in range(3):
                for e in K4_NONZERO:
                    q = list(p)
                    q[i] = q[i] + e
                    yield (tuple(q), a, b)
        else:
            for u in UNITS:
                yield ((p[0] + u, p[1]), a, b)
            for e in K4_NONZERO:
                yield ((p[0], p[1] + e), a, b)
        for e in K4_NONZERO:
            yield (p, a + e, b)
            yield (p, a, b + e)

    def dist(self, w1, w2) -> int:
        return (_block_dist(self.kind, w1[0], w2[0]) + (w1[1] is not w2[1])
                + (w1[2] is not w2[2]))

    def __len__(self):
        return len(self.codewords)


_BLOCK_CODES: dict = {}


def build_block_code(kind: BlockKind | str) -> BlockCode:
    kind = BlockKind(kind)
    if kind not in _BLOCK_CODES:
        _BLOCK_CODES[kind] = BlockCode(kind)
    return _BLOCK_CODES[kind]


class ComponentCode:
    """Quaternary Hamming code of length k (the zero code when k = 1)."""

    def __init__(self, k: int):
        delta = _log(4, 3 * k + 1)
        if not delta:
            raise ValueError(f"3k+1 = {3 * k + 1} is not a power of 4")
        self.k = k
        self.columns = build_check_matrix(0, delta).a_prime
        self._index = {c: j for j, c in enumerate(self.columns)}
        self.rows = delta

    @property
    def name(self) -> str:
        return f"hamming-{self.k}"

    def syndrome(self, word) -> tuple:
        s = [ZERO2] * self.rows
        for y, col in zip(word, self.columns):
            if y is not ZERO2:
                s = [a + y * c for a, c in zip(s, col)]
        return tuple(s)

    def __contains__(self, word) -> bool:
        return not any(self.syndrome(word))

    def decode(self, word) -> tuple[tuple, Optional[tuple[int, GF4]]]:
        """(codeword, error) with error = (position, value) or None."""
        s = self.syndrome(word)
        if not any(s):
            return tuple(word), None
        alpha = next(y for y in s if y)
        col = tuple(alpha.inverse() * y for y in s)
        j = self._index[col]
        c = list(word)
        c[j] = c[j] - alpha
        return tuple(c), (j, alpha)

    def codewords(self) -> list[tuple]:
        return [w for w in itertools.product(GF4.elements(), repeat=self.k) if w in self]

    def __len__(self):
        return 4 ** self.k // (3 * self.k + 1)


def hamming_component(k: int) -> ComponentCode:
    return ComponentCode(k)


@dataclass(frozen=True)
class ProductCodeSpec:
    k: int
    r: int
    doob_cells: tuple  # (i, j) grid cells holding doob13 blocks, sorted row-major

    def __post_init__(self):
        cells = tuple(sorted({tuple(c) for c in self.doob_cells}))
        if any(not (0 <= i < self.k and 0 <= j < self.r) for i, j in cells):
            raise ValueError("doob cell outside the k x r grid")
        object.__setattr__(self, "doob_cells", cells)
        ComponentCode(self.k), ComponentCode(self.r)

    @classmethod
    def row_major(cls, k: int, r: int, m: int) -> "ProductCodeSpec":
        if not 0 <= m <= k * r:
            raise ValueError(f"m={m} outside 0..{k * r}")
        cells = [(i, j) for i in range(k) for j in range(r)][:m]
        return cls(k, r, tuple(cells))

    @property
    def m(self) -> int:
        return len(self.doob_cells)

    @property
    def n(self) -> int:
        return 3 * self.k * self.r - 2 * self.m + self.k + self.r

    @property
    def is_row_major(self) -> bool:
        return self.doob_cells == ProductCodeSpec.row_major(self.k, self.r, self.m).doob_cells

    @cached_property
    def cells(self) -> list[tuple[int, int, BlockKind]]:
        doob = set(self.doob_cells)
        return [(i, j, BlockKind.DOOB13 if (i, j) in doob else BlockKind.HAMMING5)
                for i in range(self.k) for j in range(self.r)]

    @cached_property
    def c1(self) -> ComponentCode:
        return ComponentCode(self.k)

    @cached_property
    def c2(self) -> ComponentCode:
        return ComponentCode(self.r)

    @property
    def space(self) -> DoobSpace:
        return DoobSpace(self.m, self.n)

    # -- layout -------------------------------------------------------------

    def split(self, v: DoobVertex):
        """DoobVertex -> (blocks, u, v) with blocks in row-major cell order."""
        if v.shape != (self.m, self.n):
            raise ValueError(f"vertex shape {v.shape} does not match D({self.m},{self.n})")
        sh, k4 = iter(v.sh), iter(v.k4)
        blocks = []
        for _, _, kind in self.cells:
            if kind is BlockKind.DOOB13:
                blocks.append((next(sh), next(k4)))
            else:
                blocks.append((next(k4), next(k4), next(k4)))
        u = tuple(itertools.islice(k4, self.k))
        w = tuple(k4)
        return blocks, u, w

    def join(self, blocks, u, w) -> DoobVertex:
        sh, k4 = [], []
        for (_, _, kind), b in zip(self.cells, blocks):
            if kind is BlockKind.DOOB13:
                sh.append(b[0])
                k4.append(b[1])
            else:
                k4.extend(b)
        return DoobVertex(sh, k4 + list(u) + list(w))


def _block_code_for(kind):
    return build_block_code(kind)


def parity_f(spec: ProductCodeSpec, blocks) -> tuple:
    out = [ZERO2] * spec.k
    for (i, _, kind), b in zip(spec.cells, blocks):
        out[i] = out[i] + _block_code_for(kind).f(b)
    return tuple(out)


def parity_g(spec: ProductCodeSpec, blocks) -> tuple:
    out = [ZERO2] * spec.r
    for (_, j, kind), b in zip(spec.cells, blocks):
        out[j] = out[j] + _block_code_for(kind).g(b)
    return tuple(out)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def product_membership(spec: ProductCodeSpec, X: DoobVertex) -> bool:
    blocks, u, w = spec.split(X)
    return (_sub(u, parity_f(spec, blocks)) in spec.c1
            and _sub(w, parity_g(spec, blocks)) in spec.c2)


def product_decode(spec: ProductCodeSpec, X: DoobVertex) -> DoobVertex:
    """A codeword within distance 1 of X."""
    blocks, u, w = spec.split(X)
    fx, gx = parity_f(spec, blocks), parity_g(spec, blocks)
    c1, e1 = spec.c1.decode(_sub(u, fx))
    c2, e2 = spec.c2.decode(_sub(w, gx))
    if e1 is None or e2 is None:
        return spec.join(blocks, _add(fx, c1), _add(gx, c2))
    (i, y1), (j, y2) = e1, e2
    pos = i * spec.r + j
    kind = spec.cells[pos][2]
    code = _block_code_for(kind)
    x = blocks[pos]
    y = (x, code.f(x) + y1, code.g(x) + y2)
    z = code.decode_table[y]
    if z[1] is not y[1] or z[2] is not y[2]:
        raise AssertionError("block decoder changed a tail coordinate")
    blocks = list(blocks)
    blocks[pos] = z[0]
    # u, w unchanged: the new block shifts f_i by y1 and g_j by y2
    return spec.join(blocks, u, w)


def product_cardinality(spec: ProductCodeSpec) -> int:
    return 64 ** (spec.k * spec.r) * len(spec.c1) * len(spec.c2)


def product_codewords(spec: ProductCodeSpec) -> Iterable[DoobVertex]:
    """Every codeword; only sensible for small specs."""
    per_cell = [_block_points(kind) for _, _, kind in spec.cells]
    c1s, c2s = spec.c1.codewords(), spec.c2.codewords()
    for blocks in itertools.product(*per_cell):
        fx, gx = parity_f(spec, blocks), parity_g(spec, blocks)
        for c1 in c1s:
            for c2 in c2s:
                yield spec.join(blocks, _add(fx, c1), _add(gx, c2))


# -- text layout (blocks | u | v) -----------------------------------------------

def format_product_word(spec: ProductCodeSpec, X: DoobVertex) -> str:
    blocks, u, w = spec.split(X)
    toks = [str(t) for b in blocks for t in b]
    return "|".join([",".join(toks), ",".join(map(str, u)), ",".join(map(str, w))])


def parse_product_word(spec: ProductCodeSpec, text: str) -> DoobVertex:
    parts = text.strip().strip("()").split("|")
    if len(parts) != 3:
        raise ValueError(f"expected 'blocks|u|v', got {text!r}")
    toks = [t.strip() for t in parts[0].split(",")] if parts[0].strip() else []
    it = iter(toks)
    blocks = []
    try:
        for _, _, kind in spec.cells:
            if kind is BlockKind.DOOB13:
                blocks.append((GR16.parse(next(it)), GF4.parse(next(it))))
            else:
                blocks.append(tuple(GF4.parse(next(it)) for _ in range(3)))
    except StopIteration:
        raise ValueError("too few block coordinates") from None
    if next(it, None) is not None:
        raise ValueError("too many block coordinates")
    u = [GF4.parse(t) for t in parts[1].split(",") if t.strip()]
    w = [GF4.parse(t) for t in parts[2].split(",") if t.strip()]
    if len(u) != spec.k or len(w) != spec.r:
        raise ValueError(f"need {spec.k} u and {spec.r} v coordinates")
    return spec.join(blocks, u, w)
