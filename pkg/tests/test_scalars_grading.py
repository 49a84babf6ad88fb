from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import builders as B
from colourlie import QQ, AbelianGroup, CommutationFactor, Field, Fp
from colourlie.scalars import FieldError

F7 = Field.prime(7)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_fp_matches_integer_arithmetic(a, b):
    x, y = F7(a), F7(b)
    assert x + y == F7(a + b)
    assert x - y == F7(a - b)
    assert x * y == F7(a * b)
    if b % 7:
        assert (x / y) * y == x


@pytest.mark.parametrize("p", [2, 3, 4, 9, 1])
def test_small_or_composite_characteristic_rejected(p):
    with pytest.raises(FieldError):
        Field.prime(p)


def test_parse_and_format():
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert F7.parse("3/4") == F7(3) / F7(4) == F7(6)
    assert F7.format(F7(-1)) == "6"
    with pytest.raises(FieldError):
        F7.parse("1/7")
    with pytest.raises(FieldError):
        QQ.parse("one")


def test_fp_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Fp(0, 7).inverse()


def test_mixing_characteristics_is_an_error():
    with pytest.raises((FieldError, TypeError, ValueError)):
        Fp(1, 7) + Fp(1, 11)


def test_group_reduces_torsion():
    g = AbelianGroup(1, (2, 3))
    assert g.elem((5, 3, 7)) == (5, 1, 1)
    assert g.add(g.elem((1, 1, 2)), g.elem((-1, 1, 1))) == g.zero()
    assert AbelianGroup(1, ()).elem(4) == (4,)


cfs = [B.cf_super(), B.cf_klein(), B.cf_integer(), B.cf_super(F7)]


@pytest.mark.parametrize("cf", cfs)
@given(st.randoms(use_true_random=False))
def test_commutation_factor_axioms(cf, rnd):
    g = cf.group
    a, b, c = (g.random_elem(rnd) for _ in range(3))
    one = cf.field.one
    assert cf(a, b) * cf(b, a) == one
    assert cf(g.add(a, b), c) == cf(a, c) * cf(b, c)
    assert cf(a, g.add(b, c)) == cf(a, b) * cf(a, c)
    assert cf.parity(a) in (1, -1)


@pytest.mark.parametrize("cf", cfs)
def test_builder_factors_validate(cf):
    assert cf.validate().ok


def test_invalid_factors_fail_validation():
    # eps(g, g) = 2 on Z is not +-1
    assert not CommutationFactor(AbelianGroup(1, ()), [[2]]).validate().ok
    # on Z/3 a value of -1 is not a cube root of unity
    assert not CommutationFactor(AbelianGroup(0, (3,)), [[-1]]).validate().ok
    # eps(a, b) eps(b, a) must be 1
    assert not CommutationFactor(AbelianGroup(2, ()), [[1, 2], [2, 1]]).validate().ok
