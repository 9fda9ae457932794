"""Demazure roots of affine spherical varieties under ``SL2 x| torus``.

Type I roots split into two kinds:

* exterior (vertical) roots: roots of the cone ``Gamma`` (colored cone plus
  the images of all colors) whose distinguished ray is orthogonal to ``e``
  and which vanish on the colors of the open orbit;
* interior (horizontal) roots, only for reflexive data with independent
  ``v0, v1``: roots of ``Gamma`` with ``v0(theta) = v1(theta) = 1`` or ``-1``
  whose distinguished ray is the image of a color.

Each candidate can be certified by building the derivation explicitly,
checking that it commutes with the sl2-triple and that it keeps the
section algebra stable in a box of degrees.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .cone_roots import (RootDescription, StructuralError, enumerate_roots,
                         ray_in_lattice, roots_of_cone)
from .lattice import Cone, Sublattice, dot, fmt_vector, rank, vec
from .symbolic import (ONE, T, Derivation, RatFunc, commutator_vanishes, pairing_coeffs,
                       preserves_at_degree, vertical_lnd)
from .type1 import (MINUS, REFLEXIVE, SphericalDataI, color_table, colored_cone,
                    require_valid, sl2_triple)
from .type2 import Type2Data, certify_type2, roots_type2

DEFAULT_PRESERVATION_BOUND = 3

LIN_CLAUSE_FLAG = "distinguished ray not orthogonal to e"


@dataclass
class RootSet:
    interior: RootDescription
    exterior: RootDescription
    gamma: Cone
    lattice: Sublattice
    diagnostics: list[str] = field(default_factory=list)

    def enumerate(self, bound: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        return enumerate_roots(self.interior, bound), enumerate_roots(self.exterior, bound)

    def contains(self, theta: Sequence[int]) -> bool:
        return self.interior.contains(theta) or self.exterior.contains(theta)


def gamma_cone(d: SphericalDataI, side: str = MINUS) -> Cone:
    """Cone spanned by the colored cone and the images of all colors of the open orbit."""
    cc = colored_cone(d, side)
    colors = [img for _, img in color_table(d, side).colors]
    return Cone.of(list(cc.cone.generators) + colors, d.rank)


def demazure_roots(d: SphericalDataI | Type2Data, side: str = MINUS) -> RootSet:
    if isinstance(d, Type2Data):
        inner, ext = roots_type2(d)
        return RootSet(inner, ext, d.sigma, Sublattice.full(d.rank))
    require_valid(d)
    gamma = gamma_cone(d, side)
    if not gamma.is_strongly_convex():
        raise StructuralError(f"Gamma = {gamma!r} is not strongly convex")
    lat = d.weight_lattice
    base = roots_of_cone(gamma, lat)
    e = vec(d.e)
    ext = []
    for fam in base.families:
        if dot(fam.ray, e) != 0:
            continue
        eqs = [(d.v1, 0)] + ([(d.v0, 0)] if d.case == REFLEXIVE else [])
        f = fam.with_constraints(eqs, label="exterior")
        if f.is_feasible():
            ext.append(f)
    inner = []
    diagnostics = []
    if d.case == REFLEXIVE and rank([d.v0, d.v1]) == 2:
        # A horizontal derivation cannot move a G-stable divisor: the sections
        # on the face of a tail ray form a K[t]-module, so the ray of an interior
        # root has to be the image of a color.
        colors = [Cone.of([img], d.rank) for _, img in color_table(d, side).colors]
        for fam in base.families:
            if Cone.of([fam.ray], d.rank) not in colors:
                continue
            for sgn, label in ((1, "interior case 1"), (-1, "interior case 2")):
                flags = () if dot(fam.ray, e) == 0 else (LIN_CLAUSE_FLAG,)
                f = fam.with_constraints([(d.v0, sgn), (d.v1, sgn)], label=label, flags=flags)
                if f.is_feasible():
                    inner.append(f)
                    if flags:
                        diagnostics.append(f"{label} family at ray {fmt_vector(fam.ray)}: {LIN_CLAUSE_FLAG}")
    return RootSet(RootDescription(tuple(inner), d.rank), RootDescription(tuple(ext), d.rank),
                   gamma, lat, diagnostics)


# ---------------------------------------------------------------------------
# explicit derivations

def vertical_derivation(d: SphericalDataI, theta: Sequence[int], rho: Sequence) -> Derivation:
    """``Q chi^m -> rho(m) t^{-v0(theta)} Q chi^{m+theta}``."""
    k = dot(d.v0, theta)
    if k.denominator != 1:
        raise StructuralError("v0 is not integral on theta")
    return vertical_lnd(theta, rho, RatFunc.linear_power(0, -int(k)), d.rank)


def interior_derivation(d: SphericalDataI, theta: Sequence[int], case: int) -> Derivation:
    """Case 1: ``Q chi^m -> Q' chi^{m+theta}``.
    Case 2: ``Q chi^m -> ((v0(m)(t-1) + v1(m) t) Q + t(t-1) Q') chi^{m+theta}``."""
    n = d.rank
    if case == 1:
        return Derivation.homogeneous(n, theta, ONE, [RatFunc.const(0)] * n, f"case1{fmt_vector(theta)}")
    t1 = T - 1
    logs = [t1 * a + T * b for a, b in zip(pairing_coeffs(d.v0, n), pairing_coeffs(d.v1, n))]
    return Derivation.homogeneous(n, theta, T * t1, logs, f"case2{fmt_vector(theta)}")


def candidate_derivations(d: SphericalDataI, theta: Sequence[int], side: str = MINUS) -> list[tuple[str, Derivation]]:
    """Every derivation of degree ``theta`` of the shapes that can occur."""
    out = []
    gamma = gamma_cone(d, side)
    lat = d.weight_lattice
    if dot(d.v0, theta).denominator == 1:
        for r in gamma.rays:
            rho = ray_in_lattice(r, lat)
            if dot(rho, theta) == -1:
                out.append((f"vertical at ray {fmt_vector(r)}", vertical_derivation(d, theta, rho)))
    if d.case == REFLEXIVE:
        out.append(("interior case 1", interior_derivation(d, theta, 1)))
        out.append(("interior case 2", interior_derivation(d, theta, 2)))
    return out


@dataclass
class Certificate:
    theta: tuple[int, ...]
    ok: bool
    construction: str | None
    failures: list[str]


def certify(d: SphericalDataI, theta: Sequence[int], bound: int = DEFAULT_PRESERVATION_BOUND,
            side: str = MINUS, extra: int = 2, triple=None) -> Certificate:
    """Look for a derivation of degree ``theta`` commuting with the sl2-triple
    and preserving the section algebra up to ``bound``."""
    if isinstance(d, Type2Data):
        return certify_type2(d, theta, bound)
    theta = tuple(int(x) for x in theta)
    triple = triple or sl2_triple(d)
    failures = []
    for label, cand in candidate_derivations(d, theta, side):
        bad = None
        for x in triple:
            ok, wit = commutator_vanishes(cand, x)
            if not ok:
                bad = wit
                break
        if bad is None:
            ok, wit = preserves_at_degree(cand, d.divisor, bound, extra)
            if not ok:
                bad = wit
        if bad is None:
            return Certificate(theta, True, label, failures)
        failures.append(f"{label}: {bad}")
    if not failures:
        failures.append("no candidate derivation of this degree")
    return Certificate(theta, False, None, failures)


@dataclass
class RootReport:
    interior: list[tuple[int, ...]]
    exterior: list[tuple[int, ...]]
    certificates: dict
    diagnostics: list[str]
    seconds: float


def enumerate_and_certify(d: SphericalDataI, bound: int, certify_bound: int | None = None,
                          side: str = MINUS, do_certify: bool = True) -> RootReport:
    start = time.perf_counter()
    rs = demazure_roots(d, side)
    inner, outer = rs.enumerate(bound)
    certs = {}
    if do_certify:
        cb = DEFAULT_PRESERVATION_BOUND if certify_bound is None else certify_bound
        triple = None if isinstance(d, Type2Data) else sl2_triple(d)
        for theta in inner + outer:
            certs[theta] = certify(d, theta, cb, side, triple=triple)
    return RootReport(inner, outer, certs, rs.diagnostics, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# reduction to a faithful torus action of complexity one

@dataclass(frozen=True)
class Normalization:
    """Coordinates after reduction.

    ``basis`` is a basis (in the input coordinates) of the lattice of weights
    through which the torus acts effectively; for complexity two a last
    coordinate is appended for the maximal torus of ``SL2``.
    """

    e: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    appended: bool

    @property
    def rank(self) -> int:
        return len(self.e)

    def to_normalized(self, theta: Sequence[int]) -> tuple[int, ...]:
        lat = Sublattice(len(theta), self.basis)
        out = lat.coordinates(theta)
        return tuple(out) + ((0,) if self.appended else ())

    def to_original(self, theta: Sequence[int]) -> tuple[int, ...]:
        theta = tuple(int(x) for x in theta)
        if self.appended:
            if theta[-1] != 0:
                raise ValueError("roots of the enlarged torus vanish on the added coordinate")
            theta = theta[:-1]
        n = len(self.basis[0]) if self.basis else 0
        return tuple(sum(c * b[k] for c, b in zip(theta, self.basis)) for k in range(n))


def normalize_spec(e: Sequence[int], complexity: int = 1,
                   weight_lattice: Sequence[Sequence[int]] | None = None) -> Normalization:
    """Reduce to a faithful action of complexity one.

    ``weight_lattice`` lists generators of the weights occurring in the
    function field when the torus does not act faithfully; coordinates are
    then taken in a basis of that lattice. Complexity two adds the maximal
    torus of ``SL2`` as one more coordinate, with ``e' = (e, -1)``.
    """
    e = tuple(int(x) for x in e)
    n = len(e)
    if not any(e):
        raise ValueError("e = 0 gives the direct product SL2 x T; the root computation needs e != 0")
    if complexity not in (1, 2):
        raise ValueError("complexity must be 1 or 2")
    lat = Sublattice.full(n) if weight_lattice is None else Sublattice.generated_by(weight_lattice, n)
    if lat.rank != n:
        raise ValueError("the weight lattice must have full rank")
    if not lat.contains(e):
        raise ValueError(f"e = {fmt_vector(e)} is not a weight of the effective torus")
    new_e = tuple(lat.coordinates(e))
    if complexity == 2:
        new_e = new_e + (-1,)
    return Normalization(new_e, tuple(tuple(int(x) for x in b) for b in lat.basis), complexity == 2)
