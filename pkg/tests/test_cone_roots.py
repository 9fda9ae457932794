import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_force_roots, brute_force_semisimple
from sphroot.cone_roots import (StructuralError, distinguished_ray, enumerate_roots, is_root,
                                roots_of_cone, semisimple_roots)
from sphroot.lattice import Cone, Sublattice, dot


def test_orthant_families():
    desc = roots_of_cone(Cone.of([(1, 0), (0, 1)], 2))
    assert len(desc.families) == 2
    assert enumerate_roots(desc, 2) == [(-1, 0), (-1, 1), (-1, 2), (0, -1), (1, -1), (2, -1)]


def test_lattice_excludes_half_integral_points():
    c = Cone.of([(1, 0), (1, 2)], 2)
    fam = next(f for f in roots_of_cone(c).families if f.ray == (1, 0))
    assert fam.enumerate(3) == [(-1, 1), (-1, 2), (-1, 3)]
    assert not fam.contains((-1, 0))


def test_zero_cone_has_no_roots():
    desc = roots_of_cone(Cone.zero(3))
    assert desc.is_empty() and enumerate_roots(desc, 3) == []


def test_lineality_rejected():
    with pytest.raises(StructuralError):
        roots_of_cone(Cone.of([(1, 0), (-1, 0)], 2))


def test_semisimple_roots_of_orthant():
    c = Cone.of([(1, 0), (0, 1)], 2)
    got = enumerate_roots(semisimple_roots(c), 5)
    assert got == brute_force_semisimple(c, 5) == [(-1, 1), (1, -1)]


def test_semisimple_roots_of_two_dim_cone():
    c = Cone.of([(1, 0), (1, 2)], 2)
    assert enumerate_roots(semisimple_roots(c), 2) == [(-1, 1), (1, -1)]


def test_semisimple_roots_of_padded_cone():
    c = Cone.of([(1, 0, 0), (0, 1, 0)], 3)
    got = set(enumerate_roots(semisimple_roots(c), 1))
    assert {(-1, 1, k) for k in (-1, 0, 1)} | {(1, -1, k) for k in (-1, 0, 1)} <= got


def test_distinguished_ray():
    c = Cone.of([(1, 0), (1, 2)], 2)
    assert distinguished_ray(c, (-1, 1)) == (1, 0)
    assert distinguished_ray(c, (1, -1)) == (1, 2)
    assert distinguished_ray(c, (0, 0)) is None
    assert is_root(c, (-1, 5)) and not is_root(c, (-1, 0))


def test_roots_in_sublattice():
    c = Cone.of([(1, 0), (0, 1)], 2)
    lat = Sublattice.generated_by([(2, 0), (0, 1)], 2)
    desc = roots_of_cone(c, lat)
    assert enumerate_roots(desc, 3) == brute_force_roots(c, 3, lat)


@st.composite
def strongly_convex_cones(draw, max_rank=4):
    n = draw(st.integers(1, max_rank))
    # generators in an open halfspace keep the cone strongly convex
    gens = draw(st.lists(st.tuples(st.integers(1, 3), *[st.integers(-3, 3)] * (n - 1)),
                         min_size=1, max_size=n + 1))
    return Cone.of(gens, n)


@settings(max_examples=40, deadline=None)
@given(strongly_convex_cones(max_rank=3))
def test_enumeration_matches_definition(c):
    assert enumerate_roots(roots_of_cone(c), 3) == brute_force_roots(c, 3)


@settings(max_examples=40, deadline=None)
@given(strongly_convex_cones(max_rank=3))
def test_each_root_has_one_distinguished_ray(c):
    desc = roots_of_cone(c)
    for th in enumerate_roots(desc, 2):
        assert sum(dot(r, th) == -1 for r in c.rays) == 1
        fam = desc.family_of(th)
        assert fam is not None and dot(fam.ray, th) == -1


@settings(max_examples=30, deadline=None)
@given(strongly_convex_cones(max_rank=3))
def test_semisimple_roots_closed_under_negation(c):
    got = set(enumerate_roots(semisimple_roots(c), 2))
    assert got == {tuple(-x for x in th) for th in got}
    assert sorted(got) == brute_force_semisimple(c, 2)
