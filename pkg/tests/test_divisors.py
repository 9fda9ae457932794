from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from instances import flagship, p1_instance
from sphroot.divisors import (A1, INF, P1, DomainError, PolyDivisor, canonical_generator,
                              divisor_degree, divisor_quasifan, floor_divisor, horizontal_rays,
                              pd_degree, pd_evaluate, pd_is_proper, principal_divisor_parts,
                              section_basis, section_contains, weight_box)
from sphroot.lattice import Cone, LatticeError, Polyhedron
from sphroot.symbolic import RatFunc

F = Fraction
t = RatFunc.t()
ZERO2 = Cone.zero(2)


def box_divisor():
    return flagship().divisor


def spec_p1(delta_inf=((3, 3),)):
    sigma = Cone.of([(1, 2), (2, 1)], 2)
    return PolyDivisor(P1, sigma, {
        F(0): Polyhedron.of([(0, 0), (-1, 0)], sigma),
        F(1): Polyhedron.of([(0, 0), (0, -1)], sigma),
        INF: Polyhedron.of(list(delta_inf), sigma),
    })


def test_evaluate():
    d = box_divisor()
    assert pd_evaluate(d, (1, 1)) == {F(0): -1, F(1): -1}
    assert pd_evaluate(d, (0, 0)) == {}
    assert pd_evaluate(d, (1, 0)) == {F(0): -1}


def test_evaluate_outside_weight_cone():
    d = p1_instance().divisor
    with pytest.raises(DomainError):
        pd_evaluate(d, (-1, -1))


def test_degree_of_box():
    deg = pd_degree(box_divisor())
    assert set(deg.vertices) == {(0, 0), (-1, 0), (0, -1), (-1, -1)}
    assert deg.recession == ZERO2


def test_degree_single_coefficient():
    p = Polyhedron.of([(0, 0), (2, 1)], ZERO2)
    assert pd_degree(PolyDivisor(A1, ZERO2, {F(0): p})) == p


def test_degree_of_projective_instance():
    deg = pd_degree(spec_p1())
    # (3,3) = (2,2) + (1,1) sits on the tail, so only three points are vertices
    assert set(deg.vertices) == {(2, 3), (3, 2), (2, 2)}
    assert deg.contains((3, 3))
    assert deg.recession == Cone.of([(1, 2), (2, 1)], 2)


def test_affine_line_is_always_proper():
    assert pd_is_proper(box_divisor()).proper
    assert pd_is_proper(flagship().divisor).status == "proper"


def test_projective_instance_is_proper():
    rep = pd_is_proper(spec_p1())
    assert rep.proper and rep.reasons == []


def test_tail_at_infinity_is_improper():
    rep = pd_is_proper(spec_p1(delta_inf=((0, 0),)))
    assert not rep.proper
    assert any("(-1,0)" in r for r in rep.reasons)


def test_section_membership():
    d = box_divisor()
    assert section_contains(d, (1, 0), t)
    assert not section_contains(d, (1, 0), RatFunc.const(1))
    assert section_contains(d, (0, 1), t - 1)
    assert section_contains(d, (0, 1), RatFunc.const(0))


def test_section_membership_at_infinity():
    d = spec_p1()
    # floor D(m) = -[0] - 2[1] + 9[inf] at m = (1, 2): degree at most 9 overall
    m = (1, 2)
    floors = floor_divisor(pd_evaluate(d, m))
    assert floors == {F(0): -1, F(1): -2, INF: 9}
    assert divisor_degree(floors) == 6
    g = RatFunc.linear_power(0, 1) * RatFunc.linear_power(1, 2)
    assert section_contains(d, m, g * t ** 6)
    assert not section_contains(d, m, g * t ** 7)
    assert not section_contains(d, m, RatFunc.linear_power(1, 2))


def test_canonical_generator():
    assert canonical_generator((-1, 0), (0, 0), (0, -1)) == RatFunc.const(1)
    assert canonical_generator((0, 0), (0, -1), (0, 1)) == t - 1
    assert canonical_generator((-1, 0), (0, 0), (1, 0)) == t
    with pytest.raises(LatticeError):
        canonical_generator((0, 0), (F(1, 2), 0), (1, 0))


def test_quasifan_of_box_divisor():
    fan = divisor_quasifan(box_divisor())
    quads = {Cone.of([(sx, 0), (0, sy)], 2, "M") for sx in (1, -1) for sy in (1, -1)}
    assert set(fan.cones) == quads


def test_quasifan_of_translates_is_one_cone():
    sigma = Cone.of([(1, 0), (1, 2)], 2)
    d = PolyDivisor(A1, sigma, {F(0): Polyhedron.of([(1, 1)], sigma), F(2): Polyhedron.of([(0, -3)], sigma)})
    assert divisor_quasifan(d).cones == (sigma.dual(),)


def test_quasifan_of_one_segment():
    d = PolyDivisor(A1, ZERO2, {F(0): Polyhedron.of([(0, 0), (-1, 0)], ZERO2)})
    fan = divisor_quasifan(d)
    assert set(fan.cones) == {Cone.from_inequalities([(1, 0)], 2, "M"), Cone.from_inequalities([(-1, 0)], 2, "M")}


def test_principal_parts_of_u3():
    parts = principal_divisor_parts(box_divisor(), t - 1, (0, 1))
    assert parts.horizontal == {}
    assert parts.vertical[(F(1), (0, -1))] == 0
    assert parts.vertical[(F(1), (0, 0))] == 1
    assert parts.vertical[(F(0), (0, 0))] == 0
    assert parts.vertical[(F(0), (-1, 0))] == 0


def test_principal_parts_vanish_on_units():
    d = PolyDivisor(A1, Cone.of([(1, 0)], 2), {F(0): Polyhedron.of([(0, 0), (0, 1)], Cone.of([(1, 0)], 2))})
    parts = principal_divisor_parts(d, RatFunc.const(1), (0, 0))
    assert all(v == 0 for v in parts.horizontal.values())
    assert all(v == 0 for v in parts.vertical.values())


def test_horizontal_rays_skip_rays_meeting_the_degree():
    orth = Cone.of([(1, 0), (0, 1)], 2)
    d = PolyDivisor(P1, orth, {F(0): Polyhedron.of([(0, 0)], orth), INF: Polyhedron.of([(1, 0)], orth)})
    assert horizontal_rays(d) == [(0, 1)]
    parts = principal_divisor_parts(d, RatFunc.const(1), (1, 1))
    assert set(parts.horizontal) == {(0, 1)}


def test_non_section_rejected():
    with pytest.raises(DomainError):
        principal_divisor_parts(box_divisor(), RatFunc.const(1), (1, 0))


# properties

weights = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@settings(max_examples=80, deadline=None)
@given(weights, weights)
def test_evaluation_is_linear_on_cells(m, n):
    d = p1_instance().divisor
    cone = d.weight_cone
    if not (cone.contains(m) and cone.contains(n)):
        return
    a, b = pd_evaluate(d, m), pd_evaluate(d, n)
    s = pd_evaluate(d, tuple(x + y for x, y in zip(m, n)))
    fan = divisor_quasifan(d)
    shared = [c for c in fan.cones if c.contains(m) and c.contains(n)]
    for z in d.points():
        lhs, rhs = s.get(z, 0), a.get(z, 0) + b.get(z, 0)
        if shared:
            assert lhs == rhs
        else:
            assert lhs >= rhs


@settings(max_examples=60, deadline=None)
@given(weights, weights, st.integers(0, 3), st.integers(0, 3))
def test_sections_multiply(m, n, i, j):
    d = p1_instance().divisor
    fm, fn = section_basis(d, m, 3), section_basis(d, n, 3)
    if not fm or not fn:
        return
    f, g = fm[min(i, len(fm) - 1)], fn[min(j, len(fn) - 1)]
    assert section_contains(d, m, f) and section_contains(d, n, g)
    assert section_contains(d, tuple(x + y for x, y in zip(m, n)), f * g)


def test_big_on_interior_weights():
    d = p1_instance().divisor
    assert pd_is_proper(d).proper
    for m in weight_box(d, 4):
        if d.weight_cone.relint_contains(m):
            assert divisor_degree(floor_divisor(pd_evaluate(d, m))) >= 0


def test_section_check_agrees_with_orders():
    # [DERIVED] the definition: ord_z f + floor D(m)_z >= 0 at every point
    d = spec_p1()
    for m in product(range(0, 4), repeat=2):
        if not d.weight_cone.contains(m):
            continue
        floors = floor_divisor(pd_evaluate(d, m))
        for a, b, k in product(range(0, 3), range(0, 3), range(0, 8)):
            f = RatFunc.linear_power(0, a) * RatFunc.linear_power(1, b) * t ** k
            want = all(f.ord_at(z) + floors.get(z, 0) >= 0 for z in (F(0), F(1), INF))
            assert section_contains(d, m, f) == want
