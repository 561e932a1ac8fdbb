import itertools

import numpy as np
import pytest
from conftest import ring_expr

from doobcodes.rings import (GF4, GR16, CosetClass, OMEGA, OMEGA2, OMEGA_BAR, OMEGA_BAR2, ONE,
                             ONE2, PSI, TWO, UNITS, ZERO, ZERO2, coset_class, gf4_add, gf4_mul,
                             gr16_add, gr16_mul, gr16_neg, hat, lift, reduce_mod2, tilde,
                             two_lift, unhat2, unhat4, unit_decompose)

E4 = GR16.elements()
E2 = GF4.elements()


def el(s):
    return GR16.parse(s)


def test_element_counts_and_interning():
    assert len(set(E4)) == 16 and len(set(E2)) == 4
    assert GR16(5, -1) is GR16(1, 3)
    assert GR16.parse("12") is PSI


def test_gf4_examples():
    assert gf4_add(ZERO2, OMEGA2) is OMEGA2
    assert gf4_add(OMEGA2, OMEGA2) is ZERO2
    assert gf4_add(OMEGA2, OMEGA_BAR2) is ONE2
    assert gf4_mul(OMEGA2, OMEGA2) is OMEGA_BAR2
    assert gf4_mul(OMEGA2, OMEGA_BAR2) is ONE2
    for x in E2:
        assert gf4_mul(ZERO2, x) is ZERO2


def test_gr16_examples():
    assert gr16_add(PSI, PSI) is GR16(2, 0)
    for x in E4:
        assert x + gr16_neg(x) is ZERO
    assert ONE + (-OMEGA_BAR) is PSI
    assert gr16_mul(OMEGA, ONE) is OMEGA
    assert gr16_mul(OMEGA, OMEGA) is OMEGA_BAR
    assert str(OMEGA_BAR) == "33"
    assert PSI * PSI is OMEGA_BAR


@pytest.mark.parametrize("F, one, w", [(GR16, ONE, OMEGA), (GF4, ONE2, OMEGA2)])
def test_cube_root_identities(F, one, w):
    assert w * w * w is one
    assert one + w + w * w is F(0, 0)


def test_ring_axioms_exhaustive():
    for x, y in itertools.product(E4, repeat=2):
        assert x * y is y * x and x + y is y + x
    for x, y, z in itertools.product(E4, repeat=3):
        assert x * (y + z) is x * y + x * z
        assert (x * y) * z is x * (y * z)


@pytest.mark.parametrize("expr, cls", [
    ("2+1", CosetClass.UNIT),
    ("2w", CosetClass.TWO_UNIT),
    ("2wb+1", CosetClass.PSI_UNIT),
])
def test_coset_examples(expr, cls):
    assert coset_class(ring_expr(expr)) is cls


def test_coset_sizes_and_listing():
    sizes = {c: sum(coset_class(x) is c for x in E4) for c in CosetClass}
    assert [sizes[c] for c in (CosetClass.ZERO, CosetClass.UNIT, CosetClass.TWO_UNIT,
                               CosetClass.PSI_UNIT)] == [1, 6, 3, 6]
    # membership listings, element by element
    w, wb, two = OMEGA, OMEGA_BAR, TWO
    units = {ONE, two * w + w, wb, two + ONE, w, two * wb + wb}
    assert units == set(UNITS)
    assert {x for x in E4 if coset_class(x) is CosetClass.TWO_UNIT} == {two, two * w, two * wb}
    psi_set = {two + w, two * w + ONE, two * w + wb, two * wb + w, two * wb + ONE, two + wb}
    assert {x for x in E4 if coset_class(x) is CosetClass.PSI_UNIT} == psi_set


def test_order_two_characterisation():
    for x in E4:
        c = coset_class(x)
        assert (x + x is ZERO) == (c in (CosetClass.ZERO, CosetClass.TWO_UNIT))
        assert x.is_regular == (c in (CosetClass.UNIT, CosetClass.PSI_UNIT))


def test_hat_examples_and_generating_set():
    assert hat(ONE) == (0, 1) and hat(OMEGA) == (1, 0) and hat(OMEGA_BAR) == (3, 3)
    assert [f"{a}{b}" for a, b in map(hat, UNITS)] == ["01", "30", "33", "03", "10", "11"]


def test_hat_is_additive_bijection():
    assert len({hat(x) for x in E4}) == 16
    for x, y in itertools.product(E4, repeat=2):
        hx, hy = hat(x), hat(y)
        assert hat(x + y) == ((hx[0] + hy[0]) % 4, (hx[1] + hy[1]) % 4)
        assert unhat4(hat(x)) is x
    for y in E2:
        assert unhat2(hat(y)) is y


def test_tilde_examples():
    assert (tilde(ONE) == np.eye(2, dtype=int)).all()
    assert (tilde(OMEGA) == np.array([[3, 1], [3, 0]])).all()
    assert (tilde(TWO) == 2 * np.eye(2, dtype=int)).all()


def test_tilde_represents_multiplication():
    for x, y in itertools.product(E4, repeat=2):
        assert tuple(tilde(x) @ np.array(hat(y)) % 4) == hat(x * y)
        assert ((tilde(x) @ tilde(y)) % 4 == tilde(x * y)).all()
    for x, y in itertools.product(E2, repeat=2):
        assert tuple(tilde(x) @ np.array(hat(y)) % 2) == hat(x * y)


def test_reduce_mod2():
    assert reduce_mod2(TWO) is ZERO2
    assert reduce_mod2(PSI) is OMEGA2
    assert reduce_mod2(OMEGA_BAR) is OMEGA_BAR2
    for x, y in itertools.product(E4, repeat=2):
        assert reduce_mod2(x + y) is reduce_mod2(x) + reduce_mod2(y)
        assert reduce_mod2(x * y) is reduce_mod2(x) * reduce_mod2(y)


def test_two_lift():
    assert two_lift(ONE2) is TWO
    assert two_lift(OMEGA_BAR2) is GR16(2, 2)
    assert two_lift(ZERO2) is ZERO
    for y in E2:
        assert two_lift(y) + two_lift(y) is ZERO
        assert two_lift(y) is TWO * lift(y)


def test_unit_decompose():
    assert unit_decompose(OMEGA) == (OMEGA, False)
    assert unit_decompose(PSI) == (ONE, True)
    target = TWO * OMEGA_BAR + ONE
    brute = [u for u in UNITS if PSI * u is target]
    assert len(brute) == 1
    assert unit_decompose(target) == (brute[0], True)
    for x in E4:
        if x.is_regular:
            beta, flag = unit_decompose(x)
            assert beta in UNITS
            assert (PSI * beta if flag else beta) is x
        else:
            with pytest.raises(ValueError):
                unit_decompose(x)


def test_parse_and_format():
    assert str(PSI) == "12"
    assert GF4.parse("11") is OMEGA_BAR2
    assert GR16.parse("3") is GR16(0, 3)
    for bad in ("4", "123", "x1", ""):
        with pytest.raises(ValueError):
            GR16.parse(bad)
    with pytest.raises(ValueError):
        GF4.parse("02")
