import itertools
from collections import deque

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from doobcodes.rings import GF4, GR16, OMEGA2, OMEGA_BAR, OMEGA_BAR2, PSI, UNITS, ZERO, ZERO2, ONE
from doobcodes.space import (AmbientMismatch, DoobSpace, DoobVertex, MixedSpace, MixedVertex,
                             MoveKind, ball_size, doob_dist, enumerate_weight_one,
                             enumerate_weight_one_mixed, from_mixed, k4_dist, mixed_dist,
                             mixed_weight, parse_mixed, parse_vertex, sh_dist, to_mixed, weight)


def bfs_distances(source):
    """Distances in the Cayley graph of GR(4^2)^+ generated by the units."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for u in UNITS:
            y = x + u
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def test_sh_dist_matches_bfs():
    for x in GR16.elements():
        d = bfs_distances(x)
        assert len(d) == 16
        for y in GR16.elements():
            assert sh_dist(x, y) == d[y]


def test_sh_and_k4_examples():
    assert sh_dist(ZERO, ZERO) == 0
    assert sh_dist(ZERO, ONE) == 1
    assert sh_dist(ZERO, PSI) == 2
    assert k4_dist(ZERO2, ZERO2) == 0
    assert k4_dist(ZERO2, OMEGA2) == 1
    assert k4_dist(GF4(0, 1), OMEGA_BAR2) == 1


def test_shrikhande_strongly_regular():
    # srg(16, 6, 2, 2)
    for x in GR16.elements():
        for y in GR16.elements():
            if x is y:
                continue
            common = sum(sh_dist(x, z) == 1 and sh_dist(y, z) == 1 for z in GR16.elements())
            assert common == 2


def test_doob_dist_examples():
    u = DoobVertex([ZERO], [ZERO2])
    assert doob_dist(u, u) == 0
    assert doob_dist(u, DoobVertex([PSI], [OMEGA2])) == 3
    z = DoobVertex([ZERO, ZERO], [ZERO2])
    assert doob_dist(z, DoobVertex([ONE, ZERO], [ZERO2])) == 1
    with pytest.raises(AmbientMismatch):
        doob_dist(u, z)


def test_doob_metric_exhaustive_d11():
    V = list(DoobSpace(1, 1).vertices())
    assert len(V) == 64
    D = {(a, b): doob_dist(a, b) for a in V for b in V}
    for a in V:
        for b in V:
            assert (D[a, b] == 0) == (a == b)
            assert D[a, b] == D[b, a]
            assert 0 <= D[a, b] <= 3
    for a, b, c in itertools.product(V[::3], V, V[::5]):
        assert D[a, c] <= D[a, b] + D[b, c]


@pytest.mark.parametrize("m, n", [(1, 1), (1, 3)])
def test_regular_degree(m, n):
    S = DoobSpace(m, n)
    V = list(S.vertices())
    for v in V[::7]:
        nbrs = [w for w in V if doob_dist(v, w) == 1]
        assert len(nbrs) == 6 * m + 3 * n
        assert set(nbrs) == set(S.ball(v)[1:])


def test_weights():
    assert weight(DoobSpace(2, 3).zero()) == 0
    assert mixed_weight(MixedVertex([(0, 3)], [], [])) == 1
    assert mixed_weight(MixedVertex([], [], [2])) == 1
    assert mixed_weight(MixedVertex([(1, 2)], [(1, 1)], [3])) == 4


@pytest.mark.parametrize("m, n, count", [(0, 1, 3), (2, 1, 15), (1, 3, 15), (8, 5, 63)])
def test_enumerate_weight_one(m, n, count):
    moves = enumerate_weight_one(m, n)
    assert len(moves) == count
    vertices = [v for _, v in moves]
    assert len(set(vertices)) == count
    assert all(weight(v) == 1 for v in vertices)


def test_enumerate_weight_one_mixed():
    moves = enumerate_weight_one_mixed(7, 0, 7)
    assert len(moves) == 63
    assert len({v for _, v in moves}) == 63
    assert all(mixed_weight(v) == 1 for _, v in moves)


def test_move_order():
    moves = [mv for mv, _ in enumerate_weight_one(1, 1)]
    assert [mv.value for mv in moves[:6]] == list(UNITS)
    assert [mv.kind for mv in moves] == [MoveKind.SH] * 6 + [MoveKind.K4] * 3


@pytest.mark.parametrize("m, n, size", [(1, 3, 16), (2, 1, 16), (5, 11, 64)])
def test_ball_size(m, n, size):
    assert ball_size(m, n) == size


def test_convert_examples():
    z = DoobSpace(1, 1).zero()
    assert to_mixed(z) == MixedSpace(1, 1, 0).zero()
    v = DoobVertex([PSI], [OMEGA_BAR2])
    assert to_mixed(v) == MixedVertex([(1, 2)], [(1, 1)], [])
    with pytest.raises(ValueError):
        from_mixed(MixedVertex([], [], [1]))


def test_convert_preserves_distance_d11():
    V = list(DoobSpace(1, 1).vertices())
    for a in V:
        assert from_mixed(to_mixed(a)) == a
        for b in V:
            assert mixed_dist(to_mixed(a), to_mixed(b)) == doob_dist(a, b)


vertices_23 = st.builds(
    DoobVertex,
    st.lists(st.sampled_from(GR16.elements()), min_size=2, max_size=2),
    st.lists(st.sampled_from(GF4.elements()), min_size=3, max_size=3),
)


@given(vertices_23)
@settings(max_examples=200)
def test_convert_round_trip(v):
    assert from_mixed(to_mixed(v)) == v
    assert parse_vertex(str(v)) == v


@given(vertices_23, vertices_23)
@settings(max_examples=200)
def test_distance_translation_invariant(u, v):
    assert doob_dist(u, v) == weight(u - v)


def test_vertex_text_syntax():
    v = parse_vertex("30,00|1")
    assert v == DoobVertex([GR16(3, 0), ZERO], [GF4(0, 1)])
    assert str(v) == "30,00|01"
    assert parse_vertex("(12 | 11)") == DoobVertex([PSI], [OMEGA_BAR2])
    m = parse_mixed("01,33|10|2,0")
    assert m == MixedVertex([(0, 1), (3, 3)], [(1, 0)], [2, 0])
    assert str(m) == "01,33|10|2,0"
    for bad in ("01,33", "0x|", "01|21"):
        with pytest.raises(ValueError):
            parse_vertex(bad)
    with pytest.raises(AmbientMismatch):
        parse_vertex("01|01", shape=(2, 1))


def test_random_vertex_deterministic():
    S = MixedSpace(2, 1, 3)
    a = [S.random_vertex(np.random.default_rng(5)) for _ in range(3)]
    b = [S.random_vertex(np.random.default_rng(5)) for _ in range(3)]
    assert a == b
    assert all(v.shape == (2, 1, 3) for v in a)
