"""Definitional scans used as independent oracles by the tests."""

from fractions import Fraction
from itertools import product
from math import gcd, lcm

from sphroot.lattice import dot


def _qgcd(xs):
    num = gcd(*[x.numerator * (lcm(*[y.denominator for y in xs]) // x.denominator) for x in xs])
    return Fraction(num, lcm(*[y.denominator for y in xs]))


def brute_force_roots(cone, bound, lattice=None):
    """Definitional scan: one ray pairs to -1, every other ray to >= 0."""
    rays = list(cone.rays)
    if lattice is not None:
        # primitive generators in the dual of the lattice: values on L generate Z
        rays = [tuple(x / _qgcd([dot(b, r) for b in lattice.basis]) for x in r) for r in rays]
    if all(x.denominator == 1 for r in rays for x in r):
        rays = [tuple(int(x) for x in r) for r in rays]
    out = []
    for th in product(range(-bound, bound + 1), repeat=cone.ambient):
        if lattice is not None and not lattice.contains(th):
            continue
        vals = [sum(a * b for a, b in zip(r, th)) for r in rays]
        if vals.count(-1) == 1 and all(v >= 0 for v in vals if v != -1):
            out.append(th)
    return sorted(out)


def brute_force_semisimple(cone, bound):
    roots = set(brute_force_roots(cone, bound))
    return sorted(th for th in roots if tuple(-x for x in th) in roots)
