from fractions import Fraction

import pytest

from instances import flagship, p1_instance, rank3
from sphroot.cone_roots import enumerate_roots
from sphroot.divisors import INF, principal_divisor_parts
from sphroot.lattice import Cone
from sphroot.symbolic import GradedElement
from sphroot.type1 import (MINUS, PLUS, REFLEXIVE, SIDES, SKEW, HomogData, SphericalDataI, TorusOrbit,
                           ValidationError, build_colorings, catalog_homogeneous, check_sl2_relations,
                           closed_orbit, color_table, colored_cone, from_colored_cone, kernel_generator,
                           omega, require_valid, roots_homogeneous, skew_quotient_check, sl2_triple,
                           validate_coherent_pair, validate_type1)

F = Fraction


def images(table):
    return {tuple(int(x) for x in img) for _, img in table.colors}


def test_valid_instances():
    for d in (flagship(), rank3(), p1_instance()):
        assert validate_type1(d).valid, validate_type1(d).reasons


def test_wrong_pairing_is_rejected():
    rep = validate_type1(SphericalDataI.make(REFLEXIVE, (-2, 0), (0, -1), (-1, 1)))
    assert not rep.valid
    assert any("v0(e)" in r for r in rep.reasons)
    with pytest.raises(ValidationError):
        require_valid(SphericalDataI.make(REFLEXIVE, (-2, 0), (0, -1), (-1, 1)))


def test_skew_needs_half_integral_v0():
    rep = validate_type1(SphericalDataI.make(SKEW, (1, 0), (0, -1), (0, 1)))
    assert not rep.valid


def test_v0_in_tail_is_rejected():
    rep = validate_type1(SphericalDataI.make(REFLEXIVE, (-1, 0, 0), (0, -1, 0), (-1, 1, 0), [(-1, 0, 0)]))
    assert not rep.valid and "v0 lies in sigma" in rep.reasons


def test_colorings_and_their_cones():
    d = flagship()
    cols = build_colorings(d)
    assert cols[MINUS].at(0) == d.v0 and not any(cols[MINUS].at(1))
    assert cols[PLUS].at(1) == d.v1 and not any(cols[PLUS].at(0))
    assert omega(d, MINUS) == Cone.of([(1, 0), (0, -1)], 2)
    assert omega(d, PLUS) == Cone.of([(-1, 0), (0, 1)], 2)


def test_incoherent_degree():
    d = flagship()
    reasons = validate_coherent_pair(d.divisor, build_colorings(d)[PLUS], (2, 0))
    assert reasons and any("not a root of the domain" in r for r in reasons)


def test_coherent_sides():
    d = flagship()
    cols = build_colorings(d)
    assert validate_coherent_pair(d.divisor, cols[MINUS], (1, -1)) == []
    assert validate_coherent_pair(d.divisor, cols[PLUS], (-1, 1)) == []


def test_sl2_relations_on_named_data():
    for d in (flagship(), rank3(), p1_instance(), catalog_homogeneous("N1", 1)):
        assert check_sl2_relations(sl2_triple(d), d.rank) == (True, None)


def test_broken_triple_is_detected():
    dm, dp, delta = sl2_triple(flagship())
    ok, why = check_sl2_relations((dm, dp, delta.scaled(2)), 2)
    assert not ok and why


def test_kernel_generators():
    d = flagship()
    assert kernel_generator(d, MINUS, (0, -1)) == kernel_generator(d, MINUS, (0, 0))
    assert str(kernel_generator(d, MINUS, (1, 0))) == "(t)"
    dm, dp, _ = sl2_triple(d)
    for m in [(0, -1), (1, 0), (1, -1)]:
        assert dm(GradedElement.mono(kernel_generator(d, MINUS, m), m)).is_zero()
    for m in [(-1, 0), (0, 1), (-1, 1)]:
        assert dp(GradedElement.mono(kernel_generator(d, PLUS, m), m)).is_zero()


def test_color_images_of_the_quadric():
    d = flagship()
    assert images(color_table(d, MINUS)) == {(1, 0), (0, -1)}
    assert images(color_table(d, PLUS)) == {(-1, 0), (0, 1)}
    assert color_table(d, MINUS).g_divisors == ()


def test_color_table_with_horizontal_ray():
    tab = color_table(rank3(), MINUS)
    assert images(tab) == {(1, 0, 0), (0, -1, 0)}
    assert [img for _, img in tab.g_divisors] == [(0, 0, 1)]
    assert tab.image(("horizontal", (0, 0, 1))) == (0, 0, 1)


def test_color_table_over_projective_line():
    d = p1_instance()
    minus, plus = color_table(d, MINUS), color_table(d, PLUS)
    assert minus.image(("vertical", INF, (3, 3))) == (2, 3)
    assert plus.image(("vertical", INF, (3, 3))) == (3, 2)


def test_colored_cones_over_projective_line():
    d = p1_instance()
    cc = colored_cone(d, MINUS)
    assert cc.cone == Cone.of([(0, -1), (2, 3)], 2)
    assert {tuple(int(x) for x in c) for c in cc.colors} == {(1, 0), (0, -1)}
    assert colored_cone(d, PLUS).cone == Cone.of([(-1, 0), (3, 2)], 2)


def test_colored_cone_round_trip():
    d = p1_instance()
    h = HomogData(d.case, d.v0, d.v1, d.e)
    for side in SIDES:
        assert from_colored_cone(colored_cone(d, side), h) == d


def test_colored_cone_over_affine_line_is_the_tail():
    d = rank3()
    assert colored_cone(d, MINUS).cone == d.sigma
    assert from_colored_cone(colored_cone(d, MINUS), HomogData(d.case, d.v0, d.v1, d.e)) == d


def test_closed_orbit():
    data, flags = closed_orbit(rank3())
    assert data == flagship() and flags == []
    assert isinstance(closed_orbit(p1_instance()), TorusOrbit)


def test_catalog_roots():
    # [DERIVED] brute force over v0(theta) = v1(theta) = +-1 in a box
    def brute(d, b=6):
        return sorted((x, y) for x in range(-b, b + 1) for y in range(-b, b + 1)
                      if (d.v0[0] * x + d.v0[1] * y) == (d.v1[0] * x + d.v1[1] * y) in (1, -1))
    for k, want in ((1, [(-2, 1), (2, -1)]), (2, [(-1, 1), (1, -1)]), (3, []), (5, [])):
        d = catalog_homogeneous("Q1", k)
        assert validate_type1(d).valid
        got = enumerate_roots(roots_homogeneous(d), 6)
        assert got == want == brute(d)
    for name, p in (("Q2", None), ("N1", 1), ("N1", 3), ("N2", 2)):
        assert roots_homogeneous(catalog_homogeneous(name, p)).is_empty()


def test_catalog_rejects_bad_parameters():
    for name, p in (("Q1", 0), ("N1", 2), ("N2", 1), ("X", 1)):
        with pytest.raises(ValueError):
            catalog_homogeneous(name, p)


def test_catalog_in_user_basis():
    d = catalog_homogeneous("Q1", 2, [(1, 0), (1, 1)])
    assert d.e == (1, 1)
    assert validate_type1(d).valid
    assert len(enumerate_roots(roots_homogeneous(d), 4)) == 2


def test_skew_quotient():
    d = catalog_homogeneous("N1", 1)
    assert skew_quotient_check(d).ok
    unsigned = skew_quotient_check(d, signed=False)
    assert not unsigned.ok and unsigned.witness


def test_skew_quotient_needs_skew_data():
    with pytest.raises(ValueError):
        skew_quotient_check(flagship())


def pairing(a, b):
    return sum(x * y for x, y in zip(a, b))


@pytest.mark.parametrize("make", [flagship, rank3, p1_instance])
def test_colors_match_principal_divisors(make):
    # a B-eigenfunction vanishes along each invariant prime divisor to the order <image, m>
    d = make()
    for side in SIDES:
        tab = color_table(d, side)
        samples = weight_samples(d, side)
        assert len(samples) >= 3
        for m in samples:
            parts = principal_divisor_parts(d.divisor, kernel_generator(d, side, m), m)
            for label, img in tab.colors + tab.g_divisors:
                got = parts.horizontal[label[1]] if label[0] == "horizontal" else parts.vertical[label[1:]]
                assert got == pairing(img, m), (side, m, label)


def weight_samples(d, side):
    from itertools import product
    from sphroot.divisors import DomainError
    out = []
    for m in product(range(-3, 4), repeat=d.rank):
        if not d.weight_lattice.contains(m):
            continue
        try:
            principal_divisor_parts(d.divisor, kernel_generator(d, side, m), m)
        except DomainError:
            continue
        out.append(m)
    return out


@pytest.mark.parametrize("idx", range(0, 56, 7))
def test_suite_instances_valid(suite, idx):
    assert validate_type1(suite[idx]).valid
