"""Spherical varieties of type I: data, sl2-triples, colors and colored cones.

The data is a pair of vectors ``v0, v1`` of ``N_Q``, a tail cone ``sigma``
and, over the projective line, a polyhedron ``Delta_inf``. Together with a
root ``e`` of the semisimple part they assemble into a polyhedral divisor
with marked points ``0``, ``1`` (and ``inf``):

* reflexive: ``Delta_0 = Conv(0, v0) + sigma``, ``Delta_1 = Conv(0, v1) + sigma``
* skew:      ``Delta_0 = v0 + sigma``,          ``Delta_1 = Conv(0, v1) + sigma``
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cone_roots import RootDescription, RootFamily, StructuralError, distinguished_ray, is_root
from .divisors import A1, P1, PolyDivisor, pd_degree, pd_is_proper, section_basis, section_contains, weight_box
from .lattice import (Cone, LatticeError, Polyhedron, Sublattice, Vector, add, as_int, dot,
                      fmt_vector, integer_kernel, is_integral, mu_denominator, neg, primitive,
                      scale, sub, vec, zero)
from .lattice import rank as lattice_rank
from .symbolic import (INF, ONE, RatFunc, T, Derivation, GradedElement, commutator_vanishes,
                       derivations_equal, probes)

REFLEXIVE = "reflexive"
SKEW = "skew"
MINUS = "minus"
PLUS = "plus"
SIDES = (MINUS, PLUS)


class ValidationError(ValueError):
    def __init__(self, reasons: Sequence[str]):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


@dataclass(frozen=True, eq=False)
class SphericalDataI:
    case: str
    v0: Vector
    v1: Vector
    sigma: Cone
    e: tuple[int, ...]
    delta_inf: Polyhedron | None = None

    @classmethod
    def make(cls, case: str, v0, v1, e, sigma=None, delta_inf=None) -> "SphericalDataI":
        v0, v1 = vec(v0), vec(v1)
        n = len(v0)
        if sigma is None:
            sigma = Cone.zero(n)
        elif not isinstance(sigma, Cone):
            sigma = Cone.of(sigma, n)
        if delta_inf is not None and not isinstance(delta_inf, Polyhedron):
            delta_inf = Polyhedron.of(delta_inf, sigma)
        return cls(case, v0, v1, sigma, tuple(int(x) for x in e), delta_inf)

    @property
    def rank(self) -> int:
        return len(self.v0)

    @property
    def curve(self) -> str:
        return A1 if self.delta_inf is None else P1

    @cached_property
    def weight_lattice(self) -> Sublattice:
        """``L = {m : v0(m) integral}``."""
        n = self.rank
        k = mu_denominator(self.v0)
        a = [int(x * k) for x in self.v0]
        # kernel of (a | -k) projected to the first n coordinates
        ker = integer_kernel([a + [-k]], n + 1)
        return Sublattice.generated_by([r[:n] for r in ker], n)

    @cached_property
    def divisor(self) -> PolyDivisor:
        s, o = self.sigma, zero(self.rank)
        if self.case == REFLEXIVE:
            d0 = Polyhedron.of([o, self.v0], s)
        else:
            d0 = Polyhedron.of([self.v0], s)
        coeffs = {Fraction(0): d0, Fraction(1): Polyhedron.of([o, self.v1], s)}
        if self.delta_inf is not None:
            coeffs[INF] = self.delta_inf
        return PolyDivisor(self.curve, s, coeffs)

    def homogeneous(self) -> "SphericalDataI":
        """Data of the open orbit (trivial tail, affine line)."""
        return SphericalDataI.make(self.case, self.v0, self.v1, self.e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SphericalDataI):
            return NotImplemented
        same_inf = (self.delta_inf is None) == (other.delta_inf is None) and (
            self.delta_inf is None or self.delta_inf == other.delta_inf)
        return (self.case == other.case and self.v0 == other.v0 and self.v1 == other.v1
                and self.e == other.e and self.sigma == other.sigma and same_inf)

    def __hash__(self) -> int:
        return hash((self.case, self.v0, self.v1, self.e, self.sigma))

    def __repr__(self) -> str:
        inf = f", Delta_inf={self.delta_inf!r}" if self.delta_inf is not None else ""
        return (f"SphericalDataI({self.case}, v0={fmt_vector(self.v0)}, v1={fmt_vector(self.v1)}, "
                f"e={fmt_vector(self.e)}, sigma={self.sigma!r}{inf})")


# ---------------------------------------------------------------------------
# colorings and domains

@dataclass(frozen=True)
class Coloring:
    """A choice of vertex ``v_z`` of each affine coefficient, with a marked point."""

    colors: tuple[tuple[Fraction, Vector], ...]
    marked: Fraction

    def at(self, z) -> Vector:
        return dict(self.colors)[Fraction(z)]

    @property
    def total(self) -> Vector:
        out = zero(len(self.colors[0][1]))
        for _, v in self.colors:
            out = add(out, v)
        return out


def build_colorings(d: SphericalDataI) -> dict[str, Coloring]:
    o = zero(d.rank)
    z0, z1 = Fraction(0), Fraction(1)
    if d.case == REFLEXIVE:
        minus = Coloring(((z0, d.v0), (z1, o)), z0)
        plus = Coloring(((z0, o), (z1, d.v1)), z0)
    else:
        minus = Coloring(((z0, d.v0), (z1, o)), z0)
        plus = Coloring(((z0, d.v0), (z1, d.v1)), z0)
    return {MINUS: minus, PLUS: plus}


def side_degree(d: SphericalDataI, side: str) -> tuple[int, ...]:
    """Degree of the nilpotent element acting on side ``side``."""
    return tuple(-x for x in d.e) if side == MINUS else d.e


def affine_degree(div: PolyDivisor) -> Polyhedron:
    if "affine degree" not in div._memo:
        out = Polyhedron.of([zero(div.rank)], div.tail)
        for z in div.points():
            if z is not INF:
                out = out + div.coefficients[z]
        div._memo["affine degree"] = out
    return div._memo["affine degree"]


def coloring_cone(div: PolyDivisor, col: Coloring) -> Cone:
    """``Cone(deg - v_deg)`` over the affine part."""
    deg = affine_degree(div)
    shifted = [sub(v, col.total) for v in deg.vertices]
    return Cone.of(shifted + list(div.tail.generators), div.rank)


def coloring_domain(div: PolyDivisor, col: Coloring) -> Cone:
    """The cone in ``N_Q + Q`` whose roots govern the coherence of ``(col, e)``."""
    n = div.rank
    gens = [g + (Fraction(0),) for g in coloring_cone(div, col).generators]
    vz0 = col.at(col.marked)
    gens.append(vz0 + (Fraction(1),))
    if div.curve == P1:
        shift = sub(col.total, vz0)
        for x in div.coefficient(INF).vertices:
            gens.append(add(x, shift) + (Fraction(-1),))
    return Cone.of(gens, n + 1)


def omega(d: SphericalDataI, side: str) -> Cone:
    return coloring_cone(d.divisor, build_colorings(d)[side])


def omega_tilde(d: SphericalDataI, side: str) -> Cone:
    return coloring_domain(d.divisor, build_colorings(d)[side])


def slope_data(col: Coloring, e: Sequence[int]) -> tuple[int, Fraction]:
    """``(d(e), s)`` with ``d(e)`` the denominator of ``v_{z0}(e)`` and ``s = -1/d(e) - v_{z0}(e)``."""
    val = dot(col.at(col.marked), e)
    de = val.denominator
    return de, Fraction(-1, de) - val


def validate_coherent_pair(div: PolyDivisor, col: Coloring, e: Sequence[int]) -> list[str]:
    """Reasons why ``(col, e)`` is not coherent (empty list when it is)."""
    reasons = []
    e = vec(e)
    for z, v in col.colors:
        if v not in div.coefficient(z).vertices:
            reasons.append(f"color {fmt_vector(v)} is not a vertex of the coefficient at {z}")
        if z != col.marked and not is_integral(v):
            reasons.append(f"color {fmt_vector(v)} at {z} is not integral")
    if col.total not in affine_degree(div).vertices:
        reasons.append(f"{fmt_vector(col.total)} is not a vertex of the degree")
    if reasons:
        return reasons
    de, s = slope_data(col, e)
    if s.denominator != 1:
        return [f"slope {s} is not integral"]
    dom = coloring_domain(div, col)
    root = e + (s,)
    if not dom.is_strongly_convex():
        reasons.append("domain cone is not strongly convex")
    elif not is_root(dom, root):
        reasons.append(f"{fmt_vector(root)} is not a root of the domain {dom!r}")
    for z, vz in col.colors:
        if z == col.marked:
            continue
        for v in div.coefficient(z).vertices:
            if v != vz and dot(v, e) < 1 + dot(vz, e):
                reasons.append(f"vertex {fmt_vector(v)} at {z} has <v,e> < 1 + <v_z,e>")
    vz0 = col.at(col.marked)
    for v in div.coefficient(col.marked).vertices:
        if v != vz0 and dot(v, e) < -s:
            reasons.append(f"vertex {fmt_vector(v)} at {col.marked} has <v,e> < {-s}")
    if div.curve == P1:
        lim = Fraction(-1, de) - dot(col.total, e)
        for v in div.coefficient(INF).vertices:
            if dot(v, e) < lim:
                reasons.append(f"vertex {fmt_vector(v)} at inf has <v,e> < {lim}")
    return reasons


@dataclass
class Report:
    valid: bool
    reasons: list[str]


def validate_type1(d: SphericalDataI) -> Report:
    reasons = []
    n = d.rank
    if len(d.v1) != n or len(d.e) != n or d.sigma.ambient != n:
        return Report(False, ["ranks of v0, v1, e and sigma disagree"])
    if not any(d.e):
        return Report(False, ["e is zero"])
    if d.case == REFLEXIVE:
        if not is_integral(d.v0) or not is_integral(d.v1):
            reasons.append("v0 and v1 must be lattice vectors")
        if dot(d.v0, d.e) != 1:
            reasons.append(f"pairing v0(e) must be 1, got {dot(d.v0, d.e)}")
    elif d.case == SKEW:
        if not is_integral(scale(2, d.v0)) or not is_integral(d.v1):
            reasons.append("2 v0 and v1 must be lattice vectors")
        if is_integral(d.v0):
            reasons.append("v0 must not be a lattice vector in the skew case")
        if 2 * dot(d.v0, d.e) != 1:
            reasons.append(f"pairing 2 v0(e) must be 1, got {2 * dot(d.v0, d.e)}")
    else:
        return Report(False, [f"unknown case {d.case!r}"])
    if dot(d.v1, d.e) != -1:
        reasons.append(f"pairing v1(e) must be -1, got {dot(d.v1, d.e)}")
    if not d.sigma.is_strongly_convex():
        reasons.append("sigma is not strongly convex")
    if d.sigma.contains(d.v0):
        reasons.append("v0 lies in sigma")
    if d.sigma.contains(d.v1):
        reasons.append("v1 lies in sigma")
    if d.delta_inf is not None:
        if d.delta_inf.recession != d.sigma:
            reasons.append("Delta_inf does not have tail sigma")
        for x in d.delta_inf.vertices:
            if dot(x, d.e) != 0:
                reasons.append(f"vertex {fmt_vector(x)} of Delta_inf is not orthogonal to e")
    if reasons:
        return Report(False, reasons)
    prop = pd_is_proper(d.divisor)
    reasons += prop.reasons
    cols = build_colorings(d)
    for side in SIDES:
        for r in validate_coherent_pair(d.divisor, cols[side], side_degree(d, side)):
            reasons.append(f"{side} side: {r}")
    return Report(not reasons, reasons)


def require_valid(d: SphericalDataI) -> None:
    rep = validate_type1(d)
    if not rep.valid:
        raise ValidationError(rep.reasons)


# ---------------------------------------------------------------------------
# derivations

def _basis(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(i == j) for j in range(n))


def sl2_triple(d: SphericalDataI) -> tuple[Derivation, Derivation, Derivation]:
    """``(partial_-, partial_+, delta)`` acting on ``K(t)[M]``."""
    n = d.rank
    t1 = T - 1
    vals0 = [dot(d.v0, _basis(n, i)) for i in range(n)]
    vals1 = [dot(d.v1, _basis(n, i)) for i in range(n)]
    me, pe = side_degree(d, MINUS), side_degree(d, PLUS)
    if d.case == REFLEXIVE:
        dm = Derivation.homogeneous(n, me, T, [RatFunc.const(a) for a in vals0], "d-")
        dp = Derivation.homogeneous(n, pe, t1, [RatFunc.const(b) for b in vals1], "d+")
        delta = Derivation.homogeneous(n, zero(n), 0, [RatFunc.const(a - b) for a, b in zip(vals0, vals1)], "delta")
    else:
        shift = 1 - 1 / T
        dm = Derivation.homogeneous(n, me, T * 2, [RatFunc.const(2 * a) for a in vals0], "d-")
        dp = Derivation.homogeneous(n, pe, t1 * 2, [(shift * a + b) * 2 for a, b in zip(vals0, vals1)], "d+")
        delta = Derivation.homogeneous(n, zero(n), 0, [RatFunc.const(-2 * b) for b in vals1], "delta")
    return dm, dp, delta


def check_sl2_relations(triple, rank: int) -> tuple[bool, str | None]:
    """``[delta, d+-] = +-2 d+-`` and ``[d+, d-] = delta`` on generators."""
    dm, dp, delta = triple
    for label, x in probes(rank):
        checks = [
            (delta(dp(x)) - dp(delta(x)), dp(x) * 2, "[delta,d+] = 2 d+"),
            (delta(dm(x)) - dm(delta(x)), dm(x) * (-2), "[delta,d-] = -2 d-"),
            (dp(dm(x)) - dm(dp(x)), delta(x), "[d+,d-] = delta"),
        ]
        for lhs, rhs, name in checks:
            if not (lhs - rhs).is_zero():
                return False, f"{name} fails on {label}"
    return True, None


def horizontal_lnd(col: Coloring, e: Sequence[int], rank: int, lam=1) -> Derivation:
    """The homogeneous derivation attached to a coherent pair ``(col, e)``.

    With ``u = t - z0`` and ``xi_m = prod_{z != z0} (t - z)^{-v_z(m)}`` it acts by
    ``u^r xi_m chi^m -> lam d(e) (v_{z0}(m) + r) u^{r+s} xi_{m+e} chi^{m+e}``.
    """
    de, s = slope_data(col, e)
    if s.denominator != 1:
        raise LatticeError("the slope of a coherent pair is integral")
    z0 = col.marked
    others = [(z, v) for z, v in col.colors if z != z0]
    xi_e = ONE
    for z, v in others:
        xi_e = xi_e * RatFunc.linear_power(z, -int(dot(v, e)))
    scale_ = RatFunc.const(Fraction(lam) * de)
    a = scale_ * RatFunc.linear_power(z0, 1 + int(s)) * xi_e
    vz0 = col.at(z0)
    logs = []
    for i in range(rank):
        b = _basis(rank, i)
        c = scale_ * dot(vz0, b) * RatFunc.linear_power(z0, int(s)) * xi_e
        for z, v in others:
            c = c + a * dot(v, b) / RatFunc.linear_power(z, 1)
        logs.append(c)
    return Derivation.homogeneous(rank, e, a, logs, "horizontal")


def kernel_generator(d: SphericalDataI, side: str, m: Sequence[int]) -> RatFunc:
    """``phi_m = (t-1)^{-v1(m)} t^{-floor(v0(m))}`` for the side's coloring."""
    col = build_colorings(d)[side]
    a, b = col.at(0), col.at(1)
    val1 = dot(b, m)
    if val1.denominator != 1:
        raise LatticeError("weight outside the lattice")
    return RatFunc.linear_power(1, -int(val1)) * RatFunc.linear_power(0, -math.floor(dot(a, m)))


# ---------------------------------------------------------------------------
# colors and colored cones

@dataclass(frozen=True)
class ColorTable:
    side: str
    colors: tuple[tuple[tuple, Vector], ...]
    g_divisors: tuple[tuple[tuple, Vector], ...]

    def image(self, label) -> Vector | None:
        for lab, img in self.colors + self.g_divisors:
            if lab == label:
                return img
        return None


def _vertical_base(d: SphericalDataI, side: str) -> Vector:
    if side == MINUS:
        return d.v0
    return d.v1 if d.case == REFLEXIVE else add(d.v0, d.v1)


def color_table(d: SphericalDataI, side: str) -> ColorTable:
    """Images in ``N_Q`` of the colors and of the invariant prime divisors.

    Labels are ``("vertical", z, v)`` for the divisor over the point ``z``
    attached to the vertex ``v``, and ``("horizontal", rho)`` for a ray.
    """
    o = zero(d.rank)
    z0, z1 = Fraction(0), Fraction(1)
    if d.case == REFLEXIVE:
        if side == MINUS:
            colors = ((("vertical", z0, o), neg(d.v0)), (("vertical", z1, d.v1), d.v1))
        else:
            colors = ((("vertical", z0, d.v0), d.v0), (("vertical", z1, o), neg(d.v1)))
    else:
        if side == MINUS:
            colors = ((("vertical", z1, d.v1), d.v1),)
        else:
            colors = ((("vertical", z1, o), neg(d.v1)),)
    from .divisors import horizontal_rays
    gdiv = [(("horizontal", r), r) for r in horizontal_rays(d.divisor)]
    if d.delta_inf is not None:
        base = _vertical_base(d, side)
        for v in d.delta_inf.vertices:
            gdiv.append((("vertical", INF, v), scale(mu_denominator(v), add(base, v))))
    return ColorTable(side, colors, tuple(gdiv))


@dataclass(frozen=True, eq=False)
class ColoredCone:
    cone: Cone
    colors: tuple[Vector, ...]
    side: str

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredCone) and self.cone == other.cone and self.side == other.side
                and {primitive(c) for c in self.colors} == {primitive(c) for c in other.colors})

    def __hash__(self) -> int:
        return hash((self.cone, self.side))


@dataclass(frozen=True)
class HomogData:
    case: str
    v0: Vector
    v1: Vector
    e: tuple[int, ...]


def colored_cone(d: SphericalDataI, side: str) -> ColoredCone:
    if d.curve == A1:
        return ColoredCone(d.sigma, (), side)
    table = color_table(d, side)
    return ColoredCone(omega(d, side), tuple(img for _, img in table.colors), side)


def valuation_sign(side: str) -> int:
    """Sign ``s`` with the valuation cone equal to ``{v : s <v,e> >= 0}``."""
    return 1 if side == MINUS else -1


def validate_colored_cone(cc: ColoredCone, e: Sequence[int]) -> list[str]:
    reasons = []
    if not cc.cone.is_strongly_convex():
        reasons.append("cone is not strongly convex")
    for c in cc.colors:
        if not any(c):
            reasons.append("a color maps to 0")
        elif not cc.cone.contains(c):
            reasons.append(f"color image {fmt_vector(c)} is not in the cone")
    sgn = valuation_sign(cc.side)
    vals = [sgn * dot(r, e) for r in cc.cone.rays]
    if not (any(v > 0 for v in vals) or all(v == 0 for v in vals)):
        reasons.append("relative interior misses the valuation cone")
    return reasons


def from_colored_cone(cc: ColoredCone, homog: HomogData) -> SphericalDataI:
    """Recover the divisor data from a colored cone of one of the two sides."""
    reasons = validate_colored_cone(cc, homog.e)
    if reasons:
        raise ValidationError(reasons)
    n = len(homog.v0)
    e = vec(homog.e)
    rays = cc.cone.rays
    if all(dot(r, e) == 0 for r in rays) and not cc.colors:
        return SphericalDataI.make(homog.case, homog.v0, homog.v1, homog.e, cc.cone)
    v0, v1 = homog.v0, homog.v1
    color_rays = {primitive(c) for c in cc.colors}
    sgn = valuation_sign(cc.side)
    if cc.side == MINUS:
        base = v0
    else:
        base = v1 if homog.case == REFLEXIVE else add(v0, v1)
    horiz = [r for r in rays if dot(r, e) == 0]
    vert = [r for r in rays if sgn * dot(r, e) > 0 and r not in color_rays]
    if not vert:
        raise ValidationError(["no vertical invariant divisor among the rays"])
    cvert = [scale(dot(base, e) / dot(r, e), r) for r in vert]
    if homog.case == REFLEXIVE:
        shifts = ([zero(n), neg(v0), v1, sub(v1, v0)] if cc.side == MINUS
                  else [zero(n), v0, neg(v1), sub(v0, v1)])
    else:
        shifts = [zero(n), v1] if cc.side == MINUS else [zero(n), neg(v1)]
    gens = list(horiz) + [add(c, s) for c in cvert for s in shifts]
    sigma = Cone.of(gens, n)
    if not sigma.is_strongly_convex():
        raise ValidationError(["recovered tail cone is not strongly convex"])
    delta = Polyhedron.of([sub(c, base) for c in cvert], sigma)
    return SphericalDataI(homog.case, vec(v0), vec(v1), sigma, tuple(homog.e), delta.minimal())


# ---------------------------------------------------------------------------
# closed orbits and torus splitting

@dataclass(frozen=True)
class TorusOrbit:
    """Marker for varieties over the projective line: the closed orbit is a torus orbit."""

    rank: int


def closed_orbit(d: SphericalDataI):
    """Data of the closed orbit (projection along the span of ``sigma``).

    Returns ``(data, flags)`` on the affine line, a :class:`TorusOrbit` otherwise.
    """
    if d.curve == P1:
        return TorusOrbit(d.rank)
    n = d.rank
    if d.sigma.dim == 0:
        return d.homogeneous(), []
    basis = integer_kernel(list(d.sigma.rays), n)      # basis of sigma^perp in M
    proj = lambda v: tuple(dot(v, b) for b in basis)
    sub_lat = Sublattice(n, tuple(basis))
    try:
        e_new = sub_lat.coordinates(d.e)
    except LatticeError:
        raise StructuralError("e is not orthogonal to sigma")
    flags = []
    v0n, v1n = proj(d.v0), proj(d.v1)
    if not any(v0n):
        flags.append("v0 projects to 0")
    if not any(v1n):
        flags.append("v1 projects to 0")
    return SphericalDataI.make(d.case, v0n, v1n, e_new), flags


@dataclass(frozen=True)
class TorusSplit:
    core: SphericalDataI
    core_basis: tuple[tuple[int, ...], ...]
    complement: tuple[tuple[int, ...], ...]


def split_torus_factor(d: SphericalDataI) -> TorusSplit:
    """Split ``N = N' + N''`` with ``N'`` the saturation of ``<v0, v1>`` and ``N''`` inside ``e^perp``.

    The open orbit is then ``(rank-2 homogeneous space) x torus``.
    """
    from .lattice import complete_basis, coordinates, hermite_rows, Sublattice as SL
    n = d.rank
    a = scale(2, d.v0) if d.case == SKEW else d.v0
    span = SL.generated_by([as_int(a), as_int(d.v1)], n)
    if span.rank != 2:
        raise StructuralError("v0 and v1 are collinear")
    n1 = span.saturation()
    kernel = integer_kernel([d.e], n)                  # e^perp in N
    w0 = integer_kernel([d.e] + [r for r in integer_kernel(n1.basis, n)], n)
    if len(w0) != 1:
        raise StructuralError("unexpected intersection of N' with e^perp")
    c = coordinates(kernel, w0[0])
    c_int = as_int(c)
    comp = []
    wv = w0[0]
    for col in complete_basis(c_int):
        x = [sum(ci * k[j] for ci, k in zip(col, kernel)) for j in range(n)]
        q = Fraction(sum(p * r for p, r in zip(x, wv)), sum(r * r for r in wv))
        k = round(q)
        comp.append(tuple(xi - k * wi for xi, wi in zip(x, wv)))
    comp = [tuple(r) for r in hermite_rows(comp)] if comp else []
    # dual coordinates on N': functionals vanishing on the complement
    m_prime = integer_kernel(comp, n) if comp else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    # change to the basis dual to n1.basis
    pair = [[sum(x * y for x, y in zip(m, b)) for b in n1.basis] for m in m_prime]
    from .lattice import matrix_inverse
    inv = matrix_inverse(pair)
    dual = [tuple(sum(inv[i][k] * m_prime[k][j] for k in range(2)) for j in range(n)) for i in range(2)]
    coords = lambda v: tuple(dot(v, m) for m in dual)
    e_core = tuple(int(dot(d.e, b)) for b in n1.basis)
    core = SphericalDataI.make(d.case, coords(d.v0), coords(d.v1), e_core)
    return TorusSplit(core, n1.basis, tuple(comp))


# ---------------------------------------------------------------------------
# skew data as a quotient of reflexive data

def reflexive_cover(d: SphericalDataI) -> SphericalDataI:
    """Reflexive data ``(-v1, v1, 2 Delta_inf + 2 v0 + v1)`` covering skew data."""
    if d.case != SKEW:
        raise ValueError("only skew data has a reflexive cover")
    delta = None
    if d.delta_inf is not None:
        delta = d.delta_inf.scale(2).translate(add(scale(2, d.v0), d.v1))
    return SphericalDataI(REFLEXIVE, neg(d.v1), d.v1, d.sigma, d.e, delta)


def _parity(v0: Sequence, m: Sequence[int]) -> int:
    return 0 if dot(v0, m).denominator == 1 else 1


@dataclass
class QuotientCheck:
    ok: bool
    witness: str | None


def _ring_map(images_t: RatFunc, images_chi, rank: int):
    """Ring endomorphism of ``K(t)[M]`` given by ``t -> images_t`` and ``chi^m -> images_chi(m) chi^m``."""
    def apply(x: GradedElement) -> GradedElement:
        out = GradedElement()
        for m, f in x.terms.items():
            out = out + GradedElement.mono(f.compose(images_t) * images_chi(m), m)
        return out
    return apply


def skew_quotient_check(d: SphericalDataI, bound: int = 2, extra: int = 2,
                        signed: bool = True) -> QuotientCheck:
    """Verify that skew data is the quotient of its reflexive cover by an involution.

    Checks that the involution ``tau`` squares to the identity and commutes with
    the cover's sl2-triple, that ``phi`` intertwines both triples, and that
    ``phi`` sends sections to ``tau``-invariant sections of the cover.
    """
    if d.case != SKEW:
        raise ValueError("skew data expected")
    n = d.rank
    cover = reflexive_cover(d)
    one_minus_t = 1 - T

    def tau_chi(m):
        sign = -1 if (signed and _parity(d.v0, m)) else 1
        return (T / one_minus_t) ** int(dot(d.v1, m)) * sign

    def phi_chi(m):
        return T ** int(dot(d.v1, m)) * RatFunc.linear_power(Fraction(1, 2), int(2 * dot(d.v0, m)))

    tau = _ring_map(one_minus_t, tau_chi, n)
    phi = _ring_map((2 * T - 1) ** 2, phi_chi, n)
    tri_cover = sl2_triple(cover)
    tri = sl2_triple(d)
    for label, x in probes(n):
        if not (tau(tau(x)) - x).is_zero():
            return QuotientCheck(False, f"tau is not an involution on {label}")
        for big, small in zip(tri_cover, tri):
            if not (tau(big(x)) - big(tau(x))).is_zero():
                return QuotientCheck(False, f"tau does not commute with {big.name} on {label}")
            if not (big(phi(x)) - phi(small(x))).is_zero():
                return QuotientCheck(False, f"phi does not intertwine {small.name} on {label}")
    div, cdiv = d.divisor, cover.divisor
    for m in weight_box(div, bound):
        for f in section_basis(div, m, extra):
            img = phi(GradedElement.mono(f, m))
            for k, g in img.terms.items():
                if not section_contains(cdiv, k, g):
                    return QuotientCheck(False, f"phi({f} chi^{m}) is not a section of the cover")
            if not (tau(img) - img).is_zero():
                return QuotientCheck(False, f"phi({f} chi^{m}) is not tau-invariant")
    return QuotientCheck(True, None)


# ---------------------------------------------------------------------------
# homogeneous catalog

CATALOG = ("Q1", "Q2", "N1", "N2")


def catalog_homogeneous(name: str, param: int | None = None,
                        alpha_e_basis: Sequence[Sequence[int]] | None = None) -> SphericalDataI:
    """Rank-two homogeneous data in the basis ``(nu_alpha, nu_e)`` dual to ``(alpha, e)``.

    ``alpha_e_basis`` optionally gives ``alpha`` and ``e`` as coordinates in a
    user basis of ``M``; the result is then expressed in that basis.
    """
    half = Fraction(1, 2)
    if name == "Q1":
        if param is None or param < 1:
            raise ValueError("Q1 needs k >= 1")
        case, v0, v1 = REFLEXIVE, (param, 1), (0, -1)
    elif name == "Q2":
        case, v0, v1 = REFLEXIVE, (0, 1), (0, -1)
    elif name in ("N1", "N2"):
        if param is None or param < 1 or (param % 2 == 1) != (name == "N1"):
            raise ValueError(f"{name} needs h {'odd' if name == 'N1' else 'even'} and positive")
        case, v0, v1 = SKEW, (half * param, half), (0, -1)
    else:
        raise ValueError(f"unknown catalog entry {name!r}")
    e = (0, 1)
    if alpha_e_basis is None:
        return SphericalDataI.make(case, v0, v1, e)
    alpha, e_user = [vec(x) for x in alpha_e_basis]
    from .lattice import matrix_inverse
    # columns alpha, e of the user-to-abstract change of basis on M
    b = [[alpha[i], e_user[i]] for i in range(2)]
    if abs(b[0][0] * b[1][1] - b[0][1] * b[1][0]) != 1:
        raise ValueError("alpha and e must form a basis")
    binv = matrix_inverse(b)
    # a functional with values (x_alpha, x_e) on (alpha, e) has user coordinates x . B^{-1}
    conv = lambda x: tuple(sum(Fraction(x[k]) * binv[k][j] for k in range(2)) for j in range(2))
    return SphericalDataI.make(case, conv(v0), conv(v1), tuple(int(x) for x in e_user))


def roots_homogeneous(d: SphericalDataI) -> RootDescription:
    """Roots of the homogeneous space: ``{theta in L : v0(theta) = v1(theta) = +-1}``
    for reflexive data with independent ``v0, v1``, empty otherwise."""
    if d.sigma.dim != 0 or d.delta_inf is not None:
        raise ValueError("homogeneous data has sigma = {0} over the affine line")
    if d.case != REFLEXIVE or lattice_rank([d.v0, d.v1]) < 2:
        return RootDescription((), d.rank)
    lat = d.weight_lattice
    fams = (
        RootFamily(neg(d.v0), ((d.v0, Fraction(1)), (d.v1, Fraction(1))), (), lat, "interior case 1"),
        RootFamily(d.v1, ((d.v0, Fraction(-1)), (d.v1, Fraction(-1))), (), lat, "interior case 2"),
    )
    return RootDescription(fams, d.rank)
