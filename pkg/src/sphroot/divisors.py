"""Polyhedral divisors on the affine and projective line.

A polyhedral divisor assigns to finitely many points ``z`` of the curve a
polyhedron ``Delta_z`` with a common tail cone ``sigma``; every other point
implicitly carries ``sigma`` itself. Evaluating at a weight ``m`` of the
dual cone gives the rational divisor ``sum_z min_{Delta_z}(m) [z]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence

import flint

from .cone_roots import feasible
from .lattice import (Cone, LatticeError, Polyhedron, QuasiFan, Vector, dot, fmt_vector,
                      mu_denominator, normal_quasifan, quasifan_refine, vec)
from .symbolic import INF, RatFunc, point_key, to_fraction, to_fmpq

A1 = "A1"
P1 = "P1"


class DomainError(ValueError):
    """A weight or function lies outside the domain where an operation is defined."""


@dataclass(frozen=True, eq=False)
class PolyDivisor:
    curve: str
    tail: Cone
    coefficients: Mapping[object, Polyhedron]
    _floors: dict = field(default_factory=dict, repr=False, compare=False)
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.curve not in (A1, P1):
            raise ValueError(f"unknown curve {self.curve!r}")
        for z, p in self.coefficients.items():
            if z is INF and self.curve == A1:
                raise DomainError("the affine line has no point at infinity")
            if p.recession != self.tail:
                raise DomainError(f"coefficient at {z} has tail {p.recession!r}, expected {self.tail!r}")

    @property
    def rank(self) -> int:
        return self.tail.ambient

    @cached_property
    def weight_cone(self) -> Cone:
        return self.tail.dual()

    def points(self) -> list:
        return sorted(self.coefficients, key=point_key)

    def coefficient(self, z) -> Polyhedron:
        return self.coefficients.get(z) or Polyhedron.of([(0,) * self.rank], self.tail)

    def floor_at(self, m: Sequence[int]) -> dict:
        key = tuple(m)
        if key not in self._floors:
            self._floors[key] = floor_divisor(pd_evaluate(self, m))
        return self._floors[key]


def pd_evaluate(d: PolyDivisor, m: Sequence) -> dict:
    """The rational divisor ``D(m)`` as ``{point: coefficient}`` (zeros dropped)."""
    if not d.weight_cone.contains(m):
        raise DomainError(f"{fmt_vector(m)} is not in the weight cone")
    out = {}
    for z in d.points():
        c = d.coefficients[z].support_min(m)
        if c != 0:
            out[z] = c
    return out


def floor_divisor(div: Mapping) -> dict:
    return {z: math.floor(c) for z, c in div.items() if math.floor(c) != 0}


def divisor_degree(div: Mapping) -> Fraction:
    return sum((Fraction(c) for c in div.values()), Fraction(0))


def pd_degree(d: PolyDivisor) -> Polyhedron:
    if "degree" not in d._memo:
        out = Polyhedron.of([(0,) * d.rank], d.tail)
        for z in d.points():
            out = out + d.coefficients[z]
        d._memo["degree"] = out
    return d._memo["degree"]


def ray_meets(rho: Sequence, p: Polyhedron) -> bool:
    """Whether the ray through ``rho`` meets ``p``."""
    verts, tail = p.vertices, p.recession.generators
    n = p.ambient
    nv = 1 + len(verts) + len(tail)
    # variables: lambda, a_i (convex weights), b_j (tail weights)
    eqs = []
    for k in range(n):
        row = [Fraction(rho[k])] + [-v[k] for v in verts] + [-g[k] for g in tail]
        eqs.append((tuple(row), Fraction(0)))
    eqs.append((tuple([Fraction(0)] + [Fraction(1)] * len(verts) + [Fraction(0)] * len(tail)), Fraction(1)))
    ineqs = [(tuple(Fraction(int(i == j)) for j in range(nv)), Fraction(0)) for i in range(nv)]
    return feasible(eqs, ineqs, nv)


def horizontal_rays(d: PolyDivisor) -> list[Vector]:
    """Rays of the tail cone that do not meet the degree (all of them on the affine line)."""
    if d.curve == A1:
        return list(d.tail.rays)
    deg = pd_degree(d)
    return [r for r in d.tail.rays if not ray_meets(r, deg)]


@dataclass
class ProperReport:
    proper: bool
    status: str
    reasons: list[str]


def pd_is_proper(d: PolyDivisor) -> ProperReport:
    """Properness. Over the affine line this always holds; over the projective
    line it amounts to the degree being a proper subset of the tail cone."""
    if d.curve == A1:
        return ProperReport(True, "proper", [])
    deg = pd_degree(d)
    reasons = [f"degree vertex {fmt_vector(v)} lies outside the tail cone"
               for v in deg.vertices if not d.tail.contains(v)]
    if not reasons:
        zero = (0,) * d.rank
        if deg.contains(zero):
            reasons.append(f"degree vertex {fmt_vector(zero)} makes the degree equal to the tail cone")
    return ProperReport(not reasons, "proper" if not reasons else "improper", reasons)


def _strip(poly, z):
    lin = flint.fmpq_poly([-to_fmpq(z), 1])
    k = 0
    while poly.degree() > 0:
        q, r = divmod(poly, lin)
        if r != 0:
            break
        poly, k = q, k + 1
    return poly, k


def section_contains(d: PolyDivisor, m: Sequence[int], f: RatFunc) -> bool:
    """Whether ``f chi^m`` lies in the section algebra of ``d``."""
    if f.is_zero():
        return True
    if not d.weight_cone.contains(m):
        return False
    floors = d.floor_at(m)
    num, den = f.num, f.den
    for z in d.points():
        if z is INF:
            continue
        num_rest, kn = _strip(num, z)
        den, kd = _strip(den, z)
        if kn - kd + floors.get(z, 0) < 0:
            return False
    if den.degree() > 0:
        return False
    if d.curve == P1:
        if f.ord_at(INF) + floors.get(INF, 0) < 0:
            return False
    return True


def canonical_section(d: PolyDivisor, m: Sequence[int]) -> RatFunc | None:
    """Generator ``g`` with ``H^0 = g * Q[t]`` over the affine part, or ``None`` if ``m`` is not a weight."""
    if not d.weight_cone.contains(m):
        return None
    g = RatFunc.const(1)
    for z, c in d.floor_at(m).items():
        if z is not INF:
            g = g * RatFunc.linear_power(z, -c)
    return g


def section_basis(d: PolyDivisor, m: Sequence[int], extra: int) -> list[RatFunc]:
    """Sections ``g, g t, ..., g t^k`` of degree ``m`` with ``k <= extra``."""
    g = canonical_section(d, m)
    if g is None:
        return []
    top = extra
    if d.curve == P1:
        floors = d.floor_at(m)
        budget = sum(floors.values())
        if budget < 0:
            return []
        top = min(extra, budget)
    t = RatFunc.t()
    return [g * t ** k for k in range(top + 1)]


def weight_box(d: PolyDivisor, bound: int) -> list[tuple[int, ...]]:
    """Lattice points of the weight cone with sup norm at most ``bound``."""
    cone = d.weight_cone
    return [m for m in product(range(-bound, bound + 1), repeat=d.rank) if cone.contains(m)]


def canonical_generator(v0: Sequence, v1: Sequence, m: Sequence[int]) -> RatFunc:
    """``(t-1)^{-v1(m)} t^{-floor(v0(m))}``."""
    a = dot(v1, m)
    if a.denominator != 1:
        raise LatticeError(f"v1 takes the non-integral value {a} on {fmt_vector(m)}")
    b = math.floor(dot(v0, m))
    return RatFunc.linear_power(1, -int(a)) * RatFunc.linear_power(0, -b)


@dataclass
class PrincipalParts:
    horizontal: dict
    vertical: dict


def rational_roots(poly) -> list[Fraction]:
    roots = []
    if poly.degree() <= 0:
        return roots
    _, factors = poly.factor()
    for fac, _ in factors:
        if fac.degree() == 1:
            roots.append(to_fraction(-fac[0] / fac[1]))
    return sorted(roots)


def principal_divisor_parts(d: PolyDivisor, f: RatFunc, m: Sequence[int]) -> PrincipalParts:
    """Coefficients of ``div(f chi^m)`` along the invariant prime divisors.

    Horizontal divisors are indexed by rays, vertical ones by pairs
    ``(point, vertex)``.
    """
    if f.is_zero() or not section_contains(d, m, f):
        raise DomainError("f chi^m is not a nonzero section")
    horizontal = {r: int(dot(r, m)) for r in horizontal_rays(d)}
    vertical = {}
    pts = list(d.points())
    if d.curve == P1 and INF not in pts:
        pts.append(INF)
    for z in rational_roots(f.num):
        if z not in pts:
            pts.append(z)
    for z in sorted(pts, key=point_key):
        ordz = f.ord_at(z)
        for v in d.coefficient(z).vertices:
            val = mu_denominator(v) * (dot(v, m) + ordz)
            if val.denominator != 1:
                raise LatticeError("non-integral divisor coefficient")
            vertical[(z, v)] = int(val)
    return PrincipalParts(horizontal, vertical)


def divisor_quasifan(d: PolyDivisor) -> QuasiFan:
    """Coarsest common refinement of the normal quasifans of all coefficients."""
    within = d.weight_cone
    fan = QuasiFan((within,), within)
    for z in d.points():
        fan = quasifan_refine(fan, normal_quasifan(d.coefficients[z], within))
    return fan
