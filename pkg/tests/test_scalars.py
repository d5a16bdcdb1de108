from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gr1n.errors import DivisionByZero, PoleAtPoint
from gr1n.scalars import (Cyclotomic, FactoredScalar, LinearForm, ParamPoint, as_rational,
                          cyclotomic_arith, root_sum)
from oracles import _z, sympy_cyclotomic, sympy_equal

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def cyclo(r):
    deg = int(sympy.totient(r))
    return st.lists(small_q, min_size=deg, max_size=deg).map(lambda cs: Cyclotomic(r, cs))


rs = st.sampled_from([1, 2, 3, 4, 5, 6, 8])


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational("−2/7") == Fraction(-2, 7)


def test_invert_one_plus_zeta_r5():
    a = Cyclotomic.rational(5, 1) + Cyclotomic.zeta(5)
    assert a * a.inverse() == Cyclotomic.rational(5, 1)


def test_zeta_power_r():
    for r in (1, 2, 3, 5, 6):
        assert Cyclotomic.zeta(r, r) == Cyclotomic.rational(r, 1)
        assert Cyclotomic.zeta(r) ** r == Cyclotomic.rational(r, 1)


def test_zero_inverse_raises():
    with pytest.raises(DivisionByZero):
        Cyclotomic.rational(3, 0).inverse()


def test_root_sum_matches_explicit_sum():
    for r in (1, 2, 3, 4, 5):
        for m in range(-6, 7):
            explicit = sum((Cyclotomic.zeta(r, l * m) for l in range(r)), Cyclotomic.rational(r, 0))
            assert explicit == Cyclotomic.rational(r, root_sum(r, m))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_ops_against_sympy(data):
    r = data.draw(rs)
    a, b = data.draw(cyclo(r)), data.draw(cyclo(r))
    A, B = sympy_cyclotomic(a), sympy_cyclotomic(b)
    assert sympy_equal(a + b, A + B, r)
    assert sympy_equal(a * b, A * B, r)
    assert sympy_equal(a - b, A - B, r)
    if b:
        # (a / b) * b == a checked through sympy as well
        assert sympy_equal((a / b) * b, A, r)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_conjugate_is_involutive_automorphism(data):
    r = data.draw(rs)
    a, b = data.draw(cyclo(r)), data.draw(cyclo(r))
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).is_real()
    # conjugation sends z to z^{r-1}
    assert sympy_equal(a.conjugate(), sympy_cyclotomic(a).subs(_z, _z ** (r - 1)), r)


def test_cyclotomic_arith_dispatch():
    a = Cyclotomic.zeta(3)
    assert cyclotomic_arith(a, a, "mul") == Cyclotomic.zeta(3, 2)
    assert cyclotomic_arith(a, None, "invert") == Cyclotomic.zeta(3, 2)


def test_param_point_sum_zero():
    with pytest.raises(ValueError):
        ParamPoint(2, 1, 0, (1, 1))
    p = ParamPoint.from_free(3, 1, "1/2", ["1/3", "1/6"])
    assert p.d[0] == Fraction(-1, 2)
    assert ParamPoint.from_json(p.to_json()) == p


def test_normalized_point_scales_everything():
    p = ParamPoint.from_free(2, 2, 1, [3])
    q = p.normalized()
    assert q.kappa == 1 and q.c0 == Fraction(1, 2) and q.d == (Fraction(-3, 2), Fraction(3, 2))


forms = st.builds(
    lambda c, k, c0, d1, d2: LinearForm(3, c, k, c0, (d1, d2)),
    small_q, small_q, small_q, small_q, small_q)
points = st.builds(lambda k, c0, d1, d2: ParamPoint.from_free(3, k, c0, [d1, d2]),
                   small_q, small_q, small_q, small_q)


@given(forms, forms, points)
def test_linear_form_evaluation_is_linear(a, b, p):
    assert (a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p)
    assert (a * Fraction(3, 2)).evaluate(p) == Fraction(3, 2) * a.evaluate(p)


@given(forms)
def test_linear_form_json_roundtrip(a):
    assert LinearForm.from_json(a.to_json(), 3) == a


def test_d0_is_eliminated():
    p = ParamPoint.from_free(3, 1, 0, [2, 5])
    assert LinearForm.d(3, 0).evaluate(p) == -7
    assert LinearForm.d(3, 3).evaluate(p) == -7


@settings(max_examples=80)
@given(st.lists(st.tuples(forms, st.integers(-2, 2)), max_size=4), small_q, points)
def test_factored_scalar_evaluates_as_product(factors, const, p):
    fs = FactoredScalar(const, factors)
    expected = Fraction(const)
    for f, e in factors:
        v = f.evaluate(p)
        if v == 0 and e < 0:
            if const != 0:
                with pytest.raises(PoleAtPoint):
                    fs.evaluate(p)
            return
        expected *= v ** e
    assert fs.evaluate(p) == expected
    assert FactoredScalar.from_json(fs.to_json(), 3) == fs


def test_factored_text_rendering():
    K, C = LinearForm.kappa(1), LinearForm.c0(1)
    s = FactoredScalar(1, [(K, 1), (K - C * 2, 1), (K - C, -1)])
    assert str(s) == "κ · (κ − 2c₀) · (κ − c₀)^{-1}"


def test_factored_merges_and_normalizes():
    K, C = LinearForm.kappa(1), LinearForm.c0(1)
    a = FactoredScalar(1, [(K * 2 - C * 2, 1)])
    b = FactoredScalar(1, [(K - C, -1)])
    assert a * b == FactoredScalar(2)


def test_is_zero_at():
    K, C = LinearForm.kappa(1), LinearForm.c0(1)
    s = FactoredScalar(1, [(K - C * 2, 1), (K - C, -1)])
    assert s.is_zero_at(ParamPoint(1, 1, Fraction(1, 2), (0,)))
    assert not s.is_zero_at(ParamPoint(1, 1, Fraction(1, 3), (0,)))
    with pytest.raises(PoleAtPoint):
        s.is_zero_at(ParamPoint(1, 1, 1, (0,)))
