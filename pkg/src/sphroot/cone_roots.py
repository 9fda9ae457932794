"""Demazure roots of rational polyhedral cones.

A Demazure root of a strongly convex cone ``sigma`` is a character ``theta``
with ``<theta, rho> = -1`` on exactly one ray ``rho`` (its distinguished ray)
and ``<theta, rho'> >= 0`` on all others. Root sets are infinite, so they are
kept as finite unions of families cut out by equalities, inequalities and a
lattice, and only enumerated inside a box when needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .lattice import (Cone, Sublattice, Vector, dot, fmt_vector, nullspace, rref,
                      scale, solve, vec)


class StructuralError(ValueError):
    """The input violates a structural hypothesis (e.g. strong convexity)."""


Constraint = tuple[Vector, Fraction]


@dataclass(frozen=True)
class RootFamily:
    """``{theta in lattice : <theta,n> = c for equalities, >= c for inequalities}``."""

    ray: Vector
    equalities: tuple[Constraint, ...]
    inequalities: tuple[Constraint, ...] = ()
    lattice: Sublattice | None = None
    label: str = ""
    flags: tuple[str, ...] = field(default=(), compare=False)

    def contains(self, theta: Sequence) -> bool:
        theta = vec(theta)
        if any(x.denominator != 1 for x in theta):
            return False
        if self.lattice is not None and not self.lattice.contains(theta):
            return False
        return (all(dot(n, theta) == c for n, c in self.equalities)
                and all(dot(n, theta) >= c for n, c in self.inequalities))

    def with_constraints(self, equalities: Iterable[Constraint] = (),
                         inequalities: Iterable[Constraint] = (),
                         lattice: Sublattice | None = None,
                         label: str | None = None,
                         flags: Iterable[str] = ()) -> "RootFamily":
        eqs = self.equalities + tuple((vec(n), Fraction(c)) for n, c in equalities)
        ineqs = self.inequalities + tuple((vec(n), Fraction(c)) for n, c in inequalities)
        lat = self.lattice
        if lattice is not None:
            lat = lattice if lat is None else _meet(lat, lattice)
        return RootFamily(self.ray, eqs, ineqs, lat,
                          self.label if label is None else label,
                          self.flags + tuple(flags))

    def is_feasible(self) -> bool:
        """Rational feasibility of the constraints (the lattice is ignored)."""
        return feasible(self.equalities, self.inequalities, len(self.ray))

    def enumerate(self, bound: int) -> list[tuple[int, ...]]:
        return _enumerate_family(self, bound)


@dataclass(frozen=True)
class RootDescription:
    families: tuple[RootFamily, ...]
    ambient: int

    def contains(self, theta: Sequence) -> bool:
        return any(f.contains(theta) for f in self.families)

    def family_of(self, theta: Sequence) -> RootFamily | None:
        return next((f for f in self.families if f.contains(theta)), None)

    def enumerate(self, bound: int) -> list[tuple[int, ...]]:
        return enumerate_roots(self, bound)

    def is_empty(self) -> bool:
        return not self.families


def _meet(a: Sublattice, b: Sublattice) -> Sublattice:
    # intersection of two full-rank-or-not sublattices through a kernel computation
    n = a.ambient
    # solve sum x_i a_i = sum y_j b_j over Z
    mat = [[a.basis[i][k] for i in range(len(a.basis))] + [-b.basis[j][k] for j in range(len(b.basis))]
           for k in range(n)]
    ker = Sublattice.kernel(mat, len(a.basis) + len(b.basis))
    gens = []
    for v in ker.basis:
        x = v[:len(a.basis)]
        gens.append(tuple(sum(c * a.basis[i][k] for i, c in enumerate(x)) for k in range(n)))
    return Sublattice.generated_by(gens, n)


def ray_in_lattice(rho: Sequence, lattice: Sublattice | None) -> Vector:
    """Primitive generator of the ray through ``rho`` for the dual of ``lattice``."""
    if lattice is None:
        return vec(rho)
    g = math.gcd(*(int(dot(rho, b)) for b in lattice.basis)) if lattice.basis else 1
    return scale(Fraction(1, g or 1), rho)


def roots_of_cone(cone: Cone, lattice: Sublattice | None = None) -> RootDescription:
    """Families of Demazure roots of ``cone`` (roots taken in ``lattice`` if given)."""
    if cone.side != "N":
        raise StructuralError("roots are computed for cones on the N side")
    if not cone.is_strongly_convex():
        raise StructuralError(f"{cone!r} is not strongly convex")
    rays = [ray_in_lattice(r, lattice) for r in cone.rays]
    fams = []
    for i, rho in enumerate(rays):
        ineqs = tuple((r, Fraction(0)) for j, r in enumerate(rays) if j != i)
        fams.append(RootFamily(rho, ((rho, Fraction(-1)),), ineqs, lattice))
    return RootDescription(tuple(fams), cone.ambient)


def semisimple_roots(cone: Cone, lattice: Sublattice | None = None) -> RootDescription:
    """Roots ``theta`` with ``-theta`` also a root."""
    if not cone.is_strongly_convex():
        raise StructuralError(f"{cone!r} is not strongly convex")
    rays = [ray_in_lattice(r, lattice) for r in cone.rays]
    fams = []
    for i, rho in enumerate(rays):
        for j, rho_opp in enumerate(rays):
            if i == j:
                continue
            eqs = [(rho, Fraction(-1)), (rho_opp, Fraction(1))]
            eqs += [(r, Fraction(0)) for k, r in enumerate(rays) if k not in (i, j)]
            fam = RootFamily(rho, tuple(eqs), (), lattice)
            if fam.is_feasible():
                fams.append(fam)
    return RootDescription(tuple(fams), cone.ambient)


def distinguished_ray(cone: Cone, theta: Sequence, lattice: Sublattice | None = None) -> Vector | None:
    """The ray on which ``theta`` takes the value ``-1``, if ``theta`` is a root."""
    theta = vec(theta)
    rays = [ray_in_lattice(r, lattice) for r in cone.rays]
    vals = [dot(theta, r) for r in rays]
    if vals.count(-1) == 1 and all(v >= 0 for v in vals if v != -1):
        return rays[vals.index(-1)]
    return None


def is_root(cone: Cone, theta: Sequence, lattice: Sublattice | None = None) -> bool:
    theta = vec(theta)
    if any(x.denominator != 1 for x in theta):
        return False
    if lattice is not None and not lattice.contains(theta):
        return False
    rays = [ray_in_lattice(r, lattice) for r in cone.rays]
    vals = [dot(theta, r) for r in rays]
    return vals.count(-1) == 1 and all(v >= 0 for v in vals if v != -1)


def enumerate_roots(desc: RootDescription, bound: int) -> list[tuple[int, ...]]:
    """All roots with sup norm at most ``bound``, sorted lexicographically."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out: set[tuple[int, ...]] = set()
    for fam in desc.families:
        out.update(_enumerate_family(fam, bound))
    return sorted(out)


def _enumerate_family(fam: RootFamily, bound: int) -> list[tuple[int, ...]]:
    n = len(fam.ray)
    eq_rows = [list(a) + [c] for a, c in fam.equalities]
    red, piv = rref(eq_rows) if eq_rows else ([], [])
    if n in piv:
        return []
    free = [k for k in range(n) if k not in piv]
    found = []
    rng = range(-bound, bound + 1)
    for vals in product(rng, repeat=len(free)):
        x = [Fraction(0)] * n
        for k, v in zip(free, vals):
            x[k] = Fraction(v)
        ok = True
        for row, p in zip(red, piv):
            xp = row[n] - sum((row[k] * x[k] for k in free), Fraction(0))
            if xp.denominator != 1 or abs(xp) > bound:
                ok = False
                break
            x[p] = xp
        if ok and fam.contains(x):
            found.append(tuple(int(v) for v in x))
    return found


def feasible(equalities: Sequence[Constraint], inequalities: Sequence[Constraint], n: int) -> bool:
    """Exact rational feasibility by substitution and Fourier-Motzkin elimination."""
    if equalities:
        rows = [list(a) for a, _ in equalities]
        x0 = solve(rows, [c for _, c in equalities])
        if x0 is None:
            return False
        kernel = nullspace(rows, n)
    else:
        x0 = tuple(Fraction(0) for _ in range(n))
        kernel = nullspace([], n)
    # constraints on y with x = x0 + K y:  a.K y >= c - a.x0
    cons = []
    for a, c in inequalities:
        coeffs = [dot(a, k) for k in kernel]
        cons.append((coeffs, Fraction(c) - dot(a, x0)))
    for var in range(len(kernel)):
        pos = [(a, c) for a, c in cons if a[var] > 0]
        negs = [(a, c) for a, c in cons if a[var] < 0]
        rest = [(a, c) for a, c in cons if a[var] == 0]
        for ap, cp in pos:
            for an, cn in negs:
                lp, ln = ap[var], -an[var]
                a = [x * ln + y * lp for x, y in zip(ap, an)]
                rest.append((a, cp * ln + cn * lp))
        cons = rest
    return all(c <= 0 for _, c in cons)


def describe_family(fam: RootFamily) -> str:
    parts = [f"<th,{fmt_vector(n)}> = {c}" for n, c in fam.equalities]
    parts += [f"<th,{fmt_vector(n)}> >= {c}" for n, c in fam.inequalities]
    return f"ray {fmt_vector(fam.ray)}: " + ", ".join(parts)
