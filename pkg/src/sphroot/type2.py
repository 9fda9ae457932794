"""Toric ``SL2 x| torus``-varieties, where ``e`` is a semisimple root of the cone.

Conventions: ``rho_+`` is the distinguished ray of ``e`` and ``rho_-`` the one
of ``-e``, so ``<e, rho_+> = -1`` and ``<e, rho_-> = 1``. The sl2-triple acts
on the semigroup algebra by ``d_{+-}(chi^m) = <m, rho_{+-}> chi^{m +- e}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .cone_roots import RootDescription, RootFamily, StructuralError, distinguished_ray, roots_of_cone
from .lattice import Cone, Sublattice, Vector, as_int, dot, fmt_vector, integer_kernel, neg, vec, zero
from .symbolic import Derivation, commutator_vanishes, pairing_coeffs
from .type1 import MINUS, PLUS, SIDES

__all__ = [
    "NotSemisimpleRoot", "Type2Data", "validate_type2", "sl2_triple_type2", "weight_sublattice",
    "ColoredCone2", "colored_cone_type2", "from_colored_cone_type2", "roots_type2",
    "roots_type2_downstairs", "toric_derivation", "preserves_semigroup", "certify_type2",
]


class NotSemisimpleRoot(ValueError):
    """``e`` or ``-e`` is not a Demazure root of the cone."""


@dataclass(frozen=True)
class Type2Data:
    sigma: Cone
    e: tuple[int, ...]
    rho_minus: Vector
    rho_plus: Vector

    @property
    def rank(self) -> int:
        return self.sigma.ambient

    def rho(self, side: str) -> Vector:
        return self.rho_minus if side == MINUS else self.rho_plus

    def __repr__(self) -> str:
        return f"Type2Data(sigma={self.sigma!r}, e={fmt_vector(self.e)})"


def validate_type2(sigma: Cone, e: Sequence[int]) -> Type2Data:
    if not sigma.is_strongly_convex():
        raise NotSemisimpleRoot(f"{sigma!r} is not strongly convex")
    e = tuple(int(x) for x in e)
    if not any(e):
        raise NotSemisimpleRoot("e must be nonzero")
    rp = distinguished_ray(sigma, e)
    rm = distinguished_ray(sigma, neg(e))
    if rp is None:
        raise NotSemisimpleRoot(f"{fmt_vector(e)} is not a root of {sigma!r}")
    if rm is None:
        raise NotSemisimpleRoot(f"{fmt_vector(neg(e))} is not a root of {sigma!r}")
    return Type2Data(sigma, e, rm, rp)


def sl2_triple_type2(d: Type2Data) -> tuple[Derivation, Derivation, Derivation]:
    """``(d_-, d_+, delta)`` with ``delta(chi^m) = <m, rho_- - rho_+> chi^m``."""
    n = d.rank
    dm = Derivation.homogeneous(n, neg(d.e), 0, pairing_coeffs(d.rho_minus, n), "d-")
    dp = Derivation.homogeneous(n, d.e, 0, pairing_coeffs(d.rho_plus, n), "d+")
    delta = Derivation.homogeneous(n, zero(n), 0,
                                   [a - b for a, b in zip(pairing_coeffs(d.rho_minus, n),
                                                          pairing_coeffs(d.rho_plus, n))], "delta")
    return dm, dp, delta


def weight_sublattice(d: Type2Data, side: str) -> Sublattice:
    """``M cap rho^perp``, the lattice spanned by the facet of the dual cone dual to ``rho``."""
    return Sublattice.kernel([d.rho(side)], d.rank)


@dataclass(frozen=True)
class ColoredCone2:
    """Colored cone in ``N / <rho>``.

    Coordinates of the quotient are the pairings with ``basis`` (a basis of
    ``M cap rho^perp``); ``lifted`` is the cone spanned by the other rays of
    ``sigma`` and ``color`` the image of the opposite distinguished ray.
    """

    side: str
    cone: Cone
    color: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    lifted: Cone
    rho: Vector


def _project(v: Sequence, basis) -> tuple[int, ...]:
    return tuple(int(dot(v, b)) for b in basis)


def colored_cone_type2(d: Type2Data, side: str) -> ColoredCone2:
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    rho = d.rho(side)
    basis = tuple(integer_kernel([rho], d.rank))
    others = [r for r in d.sigma.rays if r != rho]
    cone = Cone.of([_project(r, basis) for r in others], len(basis))
    opposite = d.rho(PLUS if side == MINUS else MINUS)
    lifted = Cone.of(others, d.rank)
    return ColoredCone2(side, cone, _project(opposite, basis), basis, lifted, rho)


def from_colored_cone_type2(cc: Cone, color_ray: Sequence) -> Cone:
    """``sigma = C + Q_{>=0} rho`` for a lifted cone ``C``."""
    sigma = Cone.of(list(cc.generators) + [vec(color_ray)], cc.ambient)
    if not sigma.is_strongly_convex():
        raise StructuralError(f"{sigma!r} is not strongly convex")
    return sigma


def roots_type2(d: Type2Data) -> tuple[RootDescription, RootDescription]:
    """``(interior, exterior)``; the interior part is always empty."""
    e = vec(d.e)
    fams = []
    for fam in roots_of_cone(d.sigma).families:
        if dot(fam.ray, e) != 0:
            continue
        f = fam.with_constraints([(d.rho_minus, 0), (d.rho_plus, 0)], label="exterior")
        if f.is_feasible():
            fams.append(f)
    return RootDescription((), d.rank), RootDescription(tuple(fams), d.rank)


def roots_type2_downstairs(d: Type2Data, side: str, bound: int) -> list[tuple[int, ...]]:
    """Exterior roots recomputed in ``N / <rho_side>`` and lifted back to ``M``.

    Roots of the cone spanned by the images of all other rays, orthogonal to
    the color and with distinguished ray coming from ``e^perp``.
    """
    cc = colored_cone_type2(d, side)
    basis = cc.basis
    images = {r: _project(r, basis) for r in d.sigma.rays if r != cc.rho}
    gamma = Cone.of(list(images.values()), len(basis))
    e = vec(d.e)
    lat = Sublattice(d.rank, basis)
    out = set()
    # scan the box of M so the result is comparable with the upstairs enumeration
    for theta in product(range(-bound, bound + 1), repeat=d.rank):
        if dot(theta, cc.rho) != 0:
            continue
        c = lat.coordinates(theta)
        ray = distinguished_ray(gamma, c)
        if ray is None or dot(c, cc.color) != 0:
            continue
        pre = [r for r, img in images.items() if Cone.of([img], len(basis)) == Cone.of([ray], len(basis))]
        if pre and all(dot(r, e) == 0 for r in pre):
            out.add(theta)
    return sorted(out)


def toric_derivation(theta: Sequence[int], rho: Sequence, rank: int) -> Derivation:
    """``chi^m -> <m, rho> chi^{m+theta}``."""
    return Derivation.homogeneous(rank, theta, 0, pairing_coeffs(rho, rank), f"toric{fmt_vector(theta)}")


def preserves_semigroup(theta: Sequence[int], rho: Sequence, sigma: Cone, bound: int) -> tuple[bool, str | None]:
    """``<m,rho> != 0`` forces ``m + theta`` into the dual cone, for ``m`` in a box."""
    dual = sigma.dual()
    for m in product(range(-bound, bound + 1), repeat=sigma.ambient):
        if dual.contains(m) and dot(m, rho) != 0:
            n = tuple(a + b for a, b in zip(m, theta))
            if not dual.contains(n):
                return False, f"chi^{fmt_vector(m)} is sent to the non-regular chi^{fmt_vector(n)}"
    return True, None


def certify_type2(d: Type2Data, theta: Sequence[int], bound: int = 3):
    from .engine import Certificate

    theta = tuple(int(x) for x in theta)
    triple = sl2_triple_type2(d)
    failures = []
    for r in d.sigma.rays:
        if dot(r, theta) != -1:
            continue
        cand = toric_derivation(theta, r, d.rank)
        bad = None
        for x in triple:
            ok, wit = commutator_vanishes(cand, x)
            if not ok:
                bad = wit
                break
        if bad is None:
            ok, bad = preserves_semigroup(theta, r, d.sigma, bound)
            if ok:
                return Certificate(theta, True, f"toric at ray {fmt_vector(r)}", failures)
        failures.append(f"toric at ray {fmt_vector(r)}: {bad}")
    if not failures:
        failures.append("no ray pairs to -1 with this degree")
    return Certificate(theta, False, None, failures)
