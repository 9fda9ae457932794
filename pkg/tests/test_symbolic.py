from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from instances import flagship
from sphroot.engine import interior_derivation
from sphroot.symbolic import (INF, ONE, T, Derivation, GradedElement, NotARoot, RatFunc, commutator,
                              commutator_vanishes, derivations_equal, preserves_at_degree, vertical_lnd)
from sphroot.type1 import Coloring, horizontal_lnd, kernel_generator, sl2_triple

F = Fraction
t = RatFunc.t()


def mono(f, m):
    return GradedElement.mono(f if isinstance(f, RatFunc) else RatFunc.const(f), m)


# the coordinates of the quadric x1 x4 - x2 x3 = 1
U1, U2 = mono(1, (-1, 0)), mono(1, (0, -1))
U3, U4 = mono(t - 1, (0, 1)), mono(t, (1, 0))


def test_orders():
    assert (t * (t - 1) ** 2).ord_at(1) == 2
    assert (1 / t).ord_at(0) == -1
    assert ((t ** 2 + 1) / t).ord_at(INF) == -1
    assert RatFunc.from_coeffs([1, 0, 1], [0, 1]) == (t ** 2 + 1) / t
    assert RatFunc.const(0).ord_at(0) is None


def test_rational_functions_reduce():
    f = (t ** 2 - 1) / (t - 1)
    assert f == t + 1
    assert (f - t - 1).is_zero()
    assert RatFunc.linear_power(1, -2) * (t - 1) ** 2 == ONE


def test_derivative_and_compose():
    assert (t ** 3).derivative() == 3 * t ** 2
    assert (1 / t).derivative() == -1 / t ** 2
    assert (t ** 2).compose(1 - t) == (1 - t) ** 2


def test_quadric_relation():
    one = U1 * U4 - U2 * U3
    assert (one - mono(1, (0, 0))).is_zero()


def test_lowering_operator():
    dm, dp, delta = sl2_triple(flagship())
    assert (dm(U1) - U2).is_zero()
    assert (dm(U3) - U4).is_zero()
    assert (dp(U2) - U1).is_zero()
    assert dm(mono(1, (0, 0))).is_zero()
    assert (delta(U1) - U1).is_zero()


def test_vertical_lnd():
    d = vertical_lnd((0, 0, -1), (0, 0, 1), ONE)
    assert (d(mono(1, (0, 0, 1))) - mono(1, (0, 0, 0))).is_zero()
    assert d(mono(1, (1, 0, 0))).is_zero()
    assert d(mono(t, (0, 0, 0))).is_zero()


def test_vertical_lnd_constant_multiplier():
    d = vertical_lnd((0, 0, -1), (0, 0, 1), RatFunc.const(5))
    assert (d(mono(t, (0, 0, 2))) - mono(10 * t, (0, 0, 1))).is_zero()


def test_vertical_lnd_needs_a_root():
    with pytest.raises(NotARoot):
        vertical_lnd((0, 0, 1), (0, 0, 1), ONE)


def case2_coloring():
    d = flagship()
    return Coloring(((F(0), d.v0), (F(1), d.v1)), F(0))


def test_horizontal_lnd_of_the_quadric():
    h = horizontal_lnd(case2_coloring(), (1, 1), 2)
    assert (h(U1) - U3).is_zero()
    assert (h(U2) - U4).is_zero()
    assert h(U3).is_zero()
    assert h(U4).is_zero()


def test_horizontal_lnd_matches_interior_formula():
    h = horizontal_lnd(case2_coloring(), (1, 1), 2)
    ok, wit = derivations_equal(h, interior_derivation(flagship(), (1, 1), 2))
    assert ok, wit


def test_interior_case_one_on_the_quadric():
    d = interior_derivation(flagship(), (-1, -1), 1)
    assert (d(U3) - U1).is_zero()
    assert (d(U4) - U2).is_zero()
    assert d(U1).is_zero() and d(U2).is_zero()


def test_horizontal_lnd_kills_its_kernel():
    d = flagship()
    h = horizontal_lnd(case2_coloring(), (1, 1), 2)
    omega = [(0, 1), (1, 0), (1, 1), (2, 1), (1, 2)]
    for m in omega:
        phi = RatFunc.linear_power(1, -int(d.v1[0] * m[0] + d.v1[1] * m[1])) * \
            RatFunc.linear_power(0, -int(d.v0[0] * m[0] + d.v0[1] * m[1]))
        assert h(GradedElement.mono(phi, m)).is_zero()


def test_commutators_of_the_triple():
    dm, dp, delta = sl2_triple(flagship())
    ok, _ = derivations_equal(commutator(dp, dm), delta)
    assert ok
    ok, wit = derivations_equal(commutator(dp, dm), delta.scaled(-1))
    assert not ok and wit


def test_interior_derivation_commutes_with_lowering():
    dm, dp, delta = sl2_triple(flagship())
    d = interior_derivation(flagship(), (1, 1), 2)
    for x in (dm, dp):
        assert commutator_vanishes(d, x)[0]


def test_preservation():
    d = flagship()
    dm, dp, _ = sl2_triple(d)
    assert preserves_at_degree(dm, d.divisor, 3)[0]
    ok, wit = preserves_at_degree(vertical_lnd((1, 0), (-1, 0), ONE), d.divisor, 3)
    assert not ok and "non-section" in wit
    zero = Derivation.homogeneous(2, (0, 0), 0, [RatFunc.const(0)] * 2, "zero")
    assert preserves_at_degree(zero, d.divisor, 3)[0]


def test_local_nilpotency():
    d = flagship()
    dm, dp, _ = sl2_triple(d)
    for x in (U1, U2, U3, U4, U1 * U3 + U4 * U4):
        for op in (dm, dp):
            y = x
            for _ in range(6):
                y = op(y)
            assert y.is_zero()


# properties

coeffs = st.integers(-3, 3)


@st.composite
def ratfuncs(draw):
    num = draw(st.lists(coeffs, min_size=1, max_size=3))
    k = draw(st.integers(-2, 2))
    f = RatFunc.from_coeffs(num) * RatFunc.linear_power(draw(st.sampled_from((0, 1))), k)
    return f if not f.is_zero() else ONE


@st.composite
def elements(draw):
    x = GradedElement()
    for _ in range(draw(st.integers(1, 3))):
        x = x + GradedElement.mono(draw(ratfuncs()), draw(st.tuples(coeffs, coeffs)))
    return x


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), st.sampled_from(range(3)))
def test_leibniz(x, y, which):
    der = sl2_triple(flagship())[which]
    lhs = der(x * y)
    rhs = der(x) * y + x * der(y)
    assert (lhs - rhs).is_zero()


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), st.tuples(coeffs, coeffs), st.sampled_from([(1, 1, 2), (-1, -1, 1)]))
def test_homogeneity(f, m, spec):
    theta, case = spec[:2], spec[2]
    der = interior_derivation(flagship(), theta, case)
    img = der(GradedElement.mono(f, m))
    assert set(img.terms) <= {(m[0] + theta[0], m[1] + theta[1])}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(0, -1), (1, 0), (1, -1), (2, -1), (0, -3)]))
def test_kernel_generators_are_killed(m):
    d = flagship()
    dm, dp, _ = sl2_triple(d)
    assert dm(GradedElement.mono(kernel_generator(d, "minus", m), m)).is_zero()
