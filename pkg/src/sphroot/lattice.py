"""Exact lattice geometry over the rationals.

Vectors are tuples of :class:`fractions.Fraction`. Cones carry a side tag
(``"N"`` for the cocharacter side, ``"M"`` for the character side) so that
pairings between the wrong spaces are caught early.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

NEG_INF = -math.inf


class LatticeError(ValueError):
    """A vector that should be integral (or in a sublattice) is not."""


class DimensionError(ValueError):
    """Operands live in spaces of different rank or on different sides."""


def vec(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionError(f"pairing of rank {len(a)} with rank {len(b)}")
    return Fraction(sum(x * y for x, y in zip(a, b)))


def _clear(x: Sequence) -> tuple[int, ...]:
    """The integral vector ``k x`` for the least positive ``k`` making it integral."""
    fs = [x_ if isinstance(x_, Fraction) else Fraction(x_) for x_ in x]
    den = math.lcm(1, *(v.denominator for v in fs))
    return tuple(v.numerator * (den // v.denominator) for v in fs)


def add(a: Sequence, b: Sequence) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"sum of rank {len(a)} with rank {len(b)}")
    return tuple(Fraction(x) + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"difference of rank {len(a)} with rank {len(b)}")
    return tuple(Fraction(x) - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def neg(a: Sequence) -> Vector:
    return tuple(-Fraction(x) for x in a)


def is_integral(v: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def as_int(v: Sequence) -> tuple[int, ...]:
    if not is_integral(v):
        raise LatticeError(f"{fmt_vector(v)} is not a lattice vector")
    return tuple(int(x) for x in v)


def mu_denominator(v: Sequence) -> int:
    """Smallest positive integer ``k`` with ``k * v`` integral."""
    return math.lcm(1, *(Fraction(x).denominator for x in v))


def primitive(v: Sequence) -> Vector:
    """Primitive integral vector on the ray through a nonzero ``v``."""
    w = [Fraction(x) * mu_denominator(v) for x in v]
    g = math.gcd(*(int(x) for x in w))
    if g == 0:
        raise ValueError("the zero vector spans no ray")
    return tuple(Fraction(int(x) // g) for x in w)


def fmt_vector(v: Sequence) -> str:
    return "(" + ",".join(str(Fraction(x)) for x in v) + ")"


# ---------------------------------------------------------------------------
# linear algebra over Q

def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    n = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], n: int) -> list[Vector]:
    """Basis of ``{x in Q^n : r . x = 0 for every row r}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    red, piv = rref(rows)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """One rational solution of ``rows . x = rhs`` or ``None``."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return tuple(x)


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Vector | None:
    """Coefficients of ``v`` in the (independent) ``basis``, if it lies in the span."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    cols = [[b[i] for b in basis] for i in range(len(v))]
    return solve(cols, v)


def matrix_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


# ---------------------------------------------------------------------------
# integer lattices

def hermite_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row Hermite normal form of an integer matrix (zero rows dropped)."""
    a = [[int(x) for x in r] for r in rows if any(r)]
    if not a:
        return []
    n = len(a[0])
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            clean = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    clean = clean and a[i][c] == 0
            if clean:
                if a[r][c] < 0:
                    a[r] = [-x for x in a[r]]
                for i in range(r):
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                r += 1
                break
        if r == len(a):
            break
    return [tuple(row) for row in a[:r]]


def _column_reduce(rows: Sequence[Sequence[int]], n: int):
    """Unimodular ``U`` (as rows) with ``rows . U^T`` in column echelon form.

    Returns ``(images, U)`` where ``images[j]`` is the image under ``rows`` of
    the ``j``-th row of ``U``; rows of ``U`` past the rank map to zero.
    """
    aug = [[int(r[j]) for r in rows] + [int(i == j) for i in range(n)] for j in range(n)]
    k = len(rows)
    r = 0
    for c in range(k):
        while True:
            nz = [i for i in range(r, n) if aug[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(aug[i][c]))
            aug[r], aug[p] = aug[p], aug[r]
            clean = True
            for i in range(r + 1, n):
                if aug[i][c]:
                    q = aug[i][c] // aug[r][c]
                    aug[i] = [x - q * y for x, y in zip(aug[i], aug[r])]
                    clean = clean and aug[i][c] == 0
            if clean:
                if aug[r][c] < 0:
                    aug[r] = [-x for x in aug[r]]
                r += 1
                break
    return [row[:k] for row in aug], [tuple(row[k:]) for row in aug], r


def integer_kernel(rows: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """Hermite basis of ``{x in Z^n : r . x = 0}`` for rational rows."""
    ints = [as_int(scale(mu_denominator(r), r)) for r in rows]
    if not ints:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    _, u, r = _column_reduce(ints, n)
    return hermite_rows(u[r:])


def complete_basis(c: Sequence[int]) -> list[tuple[int, ...]]:
    """Vectors extending the primitive ``c`` to a basis of ``Z^k``."""
    k = len(c)
    images, u, r = _column_reduce([c], k)
    if r != 1 or images[0][0] != 1:
        raise LatticeError(f"{fmt_vector(c)} is not primitive")
    inv = matrix_inverse(u)
    # columns of U^{-1}: the first one is c itself
    return [tuple(int(inv[i][j]) for i in range(k)) for j in range(1, k)]


@dataclass(frozen=True, eq=False)
class Sublattice:
    """A sublattice of ``Z^n`` given by a Hermite basis, with an optional offset."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]
    offset: tuple[int, ...] | None = None

    @classmethod
    def generated_by(cls, gens: Iterable[Sequence], ambient: int) -> "Sublattice":
        gens = [as_int(g) for g in gens]
        for g in gens:
            if len(g) != ambient:
                raise DimensionError("generator of the wrong rank")
        return cls(ambient, tuple(hermite_rows(gens)))

    @classmethod
    def full(cls, n: int) -> "Sublattice":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def kernel(cls, functionals: Sequence[Sequence], n: int) -> "Sublattice":
        """Lattice points annihilated by the given rational functionals."""
        return cls(n, tuple(integer_kernel(functionals, n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        w = [Fraction(x) for x in v]
        if len(w) != self.ambient:
            raise DimensionError("membership test in the wrong rank")
        if self.offset is not None:
            w = [x - y for x, y in zip(w, self.offset)]
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x)
            q = w[p] / row[p]
            if q.denominator != 1:
                return False
            w = [x - q * y for x, y in zip(w, row)]
        return all(x == 0 for x in w)

    def coordinates(self, v: Sequence) -> tuple[int, ...]:
        c = coordinates(self.basis, v)
        if c is None or not is_integral(c):
            raise LatticeError(f"{fmt_vector(v)} is not in the sublattice")
        return tuple(int(x) for x in c)

    def saturation(self) -> "Sublattice":
        comp = nullspace(self.basis, self.ambient) if self.basis else None
        if comp is None:
            return Sublattice(self.ambient, ())
        return Sublattice.kernel(comp, self.ambient)

    def is_saturated(self) -> bool:
        return self.saturation().basis == self.basis

    def index(self) -> int:
        """Index in the saturation."""
        sat = self.saturation()
        mat = [sat.coordinates(b) for b in self.basis]
        return abs(int(_det(mat))) if mat else 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Sublattice) and self.ambient == other.ambient
                and self.basis == other.basis and self.offset == other.offset)

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis, self.offset))


def _det(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


# ---------------------------------------------------------------------------
# cones

def _int_det(m: list[list[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _cross(rows: list[list[int]], d: int) -> tuple[int, ...]:
    """Generalized cross product of ``d - 1`` integer vectors of length ``d``."""
    out = []
    for k in range(d):
        minor = [[r[j] for j in range(d) if j != k] for r in rows]
        out.append((-1) ** k * _int_det(minor))
    return tuple(out)


def _dual_side(side: str) -> str:
    return {"N": "M", "M": "N"}[side]


@dataclass(frozen=True, eq=False)
class Cone:
    """A rational polyhedral cone ``Cone(generators)`` in ``Q^ambient``."""

    generators: tuple[Vector, ...]
    ambient: int
    side: str = "N"

    @classmethod
    def of(cls, gens: Iterable[Sequence], ambient: int | None = None, side: str = "N") -> "Cone":
        gens = [vec(g) for g in gens]
        if ambient is None:
            if not gens:
                raise DimensionError("rank of an empty generator list is unknown")
            ambient = len(gens[0])
        for g in gens:
            if len(g) != ambient:
                raise DimensionError(f"generator {fmt_vector(g)} is not of rank {ambient}")
        uniq = sorted({primitive(g) for g in gens if any(g)})
        return cls(tuple(uniq), ambient, side)

    @classmethod
    def zero(cls, n: int, side: str = "N") -> "Cone":
        return cls((), n, side)

    @classmethod
    def full(cls, n: int, side: str = "N") -> "Cone":
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            gens += [e, [-x for x in e]]
        return cls.of(gens, n, side)

    @classmethod
    def from_inequalities(cls, normals: Iterable[Sequence], ambient: int, side: str = "N") -> "Cone":
        """``{x : n . x >= 0}``; normals live on the other side."""
        return cls.of(list(normals), ambient, _dual_side(side)).dual()

    # -- derived data ------------------------------------------------------

    @cached_property
    def _echelon(self) -> tuple[list[Vector], list[int]]:
        if not self.generators:
            return [], []
        red, piv = rref(self.generators)
        return [tuple(r) for r in red], piv

    @property
    def span_basis(self) -> list[Vector]:
        return self._echelon[0]

    @property
    def dim(self) -> int:
        return len(self.span_basis)

    @cached_property
    def equations(self) -> tuple[Vector, ...]:
        """Primitive integral basis of the orthogonal complement of the span."""
        if not self.generators:
            return tuple(vec(int(i == j) for j in range(self.ambient)) for i in range(self.ambient))
        return tuple(vec(r) for r in integer_kernel(self.span_basis, self.ambient))

    @cached_property
    def facets(self) -> tuple[Vector, ...]:
        """Inner facet normals, primitive and supported on the pivot coordinates of the span."""
        d = self.dim
        if d == 0:
            return ()
        piv = self._echelon[1]
        proj = [[int(g[p]) for p in piv] for g in self.generators]
        found = set()
        seen = set()
        for combo in combinations(range(len(proj)), d - 1):
            c = _cross([proj[i] for i in combo], d)
            if not any(c):
                continue
            g = math.gcd(*c)
            c = tuple(x // g for x in c)
            if c in seen:
                continue
            seen.add(c)
            seen.add(tuple(-x for x in c))
            vals = [sum(a * b for a, b in zip(c, row)) for row in proj]
            if all(v >= 0 for v in vals) and any(v > 0 for v in vals):
                sign = 1
            elif all(v <= 0 for v in vals) and any(v < 0 for v in vals):
                sign = -1
            else:
                continue
            normal = [0] * self.ambient
            for k, p in enumerate(piv):
                normal[p] = sign * c[k]
            found.add(tuple(Fraction(x) for x in normal))
        return tuple(sorted(found))

    @cached_property
    def lineality_basis(self) -> tuple[Vector, ...]:
        if self.dim == 0:
            return ()
        rows = list(self.facets) + list(self.equations)
        if not rows:
            return tuple(tuple(r) for r in self.span_basis)
        ns = nullspace(rows, self.ambient)
        return tuple(vec(r) for r in hermite_rows(
            [as_int(scale(mu_denominator(v), v)) for v in ns])) if ns else ()

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality_basis)

    def is_strongly_convex(self) -> bool:
        return self.lineality_dim == 0

    @cached_property
    def rays(self) -> tuple[Vector, ...]:
        """Primitive generators of the extremal rays of the pointed part.

        For cones with a lineality space the pointed part is taken inside
        the orthogonal complement of that space.
        """
        lin = self.lineality_basis
        need = self.dim - len(lin) - 1
        if need < 0:
            return ()
        out = set()
        for g in self.generators:
            h = _project_away(g, lin)
            if not any(h):
                continue
            tight = [f for f in self.facets if dot(f, h) == 0]
            if (rank(tight) if tight else 0) == need:
                out.add(primitive(h))
        return tuple(sorted(out))

    # -- predicates --------------------------------------------------------

    def _check(self, x: Sequence) -> None:
        if len(x) != self.ambient:
            raise DimensionError(f"rank {len(x)} vector against a cone of rank {self.ambient}")

    @cached_property
    def _int_tests(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        return (tuple(_clear(q) for q in self.equations), tuple(_clear(f) for f in self.facets))

    def contains(self, x: Sequence) -> bool:
        self._check(x)
        xi = _clear(x)
        eqs, facets = self._int_tests
        return (all(sum(a * b for a, b in zip(q, xi)) == 0 for q in eqs)
                and all(sum(a * b for a, b in zip(f, xi)) >= 0 for f in facets))

    def relint_contains(self, x: Sequence) -> bool:
        self._check(x)
        xi = _clear(x)
        eqs, facets = self._int_tests
        return (all(sum(a * b for a, b in zip(q, xi)) == 0 for q in eqs)
                and all(sum(a * b for a, b in zip(f, xi)) > 0 for f in facets))

    def contains_cone(self, other: "Cone") -> bool:
        self._same_space(other)
        return all(self.contains(g) for g in other.generators)

    def _same_space(self, other: "Cone") -> None:
        if self.ambient != other.ambient or self.side != other.side:
            raise DimensionError(
                f"cones on {self.side}{self.ambient} and {other.side}{other.ambient}")

    @cached_property
    def key(self):
        return (self.side, self.ambient, self.rays, self.lineality_basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        body = ", ".join(fmt_vector(r) for r in self.rays)
        lin = f"; lin {', '.join(fmt_vector(r) for r in self.lineality_basis)}" if self.lineality_basis else ""
        return f"Cone[{self.side}{self.ambient}]({body}{lin})"

    # -- constructions -----------------------------------------------------

    def dual(self) -> "Cone":
        gens = list(self.facets) + list(self.equations) + [neg(q) for q in self.equations]
        return Cone.of(gens, self.ambient, _dual_side(self.side))

    def __add__(self, other: "Cone") -> "Cone":
        self._same_space(other)
        return Cone.of(self.generators + other.generators, self.ambient, self.side)

    def intersect(self, other: "Cone") -> "Cone":
        self._same_space(other)
        a, b = self.dual(), other.dual()
        return Cone.of(a.generators + b.generators, self.ambient, a.side).dual()

    def negate(self) -> "Cone":
        return Cone.of([neg(g) for g in self.generators], self.ambient, self.side)

    def linear_part(self) -> "Cone":
        lin = self.lineality_basis
        return Cone.of(list(lin) + [neg(v) for v in lin], self.ambient, self.side)

    def interior_point(self) -> Vector:
        """A point of the relative interior (sum of all generators)."""
        out = zero(self.ambient)
        for g in self.generators:
            out = add(out, g)
        return out

    def all_generators(self) -> list[Vector]:
        """Rays together with both signs of the lineality basis."""
        lin = self.lineality_basis
        return list(self.rays) + list(lin) + [neg(v) for v in lin]


def _project_away(g: Vector, lin: Sequence[Vector]) -> Vector:
    """Orthogonal projection of ``g`` onto the complement of ``span(lin)``."""
    if not lin:
        return g
    gram = [[dot(a, b) for b in lin] for a in lin]
    rhs = [dot(a, g) for a in lin]
    c = solve(gram, rhs)
    out = g
    for ci, v in zip(c, lin):
        out = sub(out, scale(ci, v))
    return out


# ---------------------------------------------------------------------------
# polyhedra

@dataclass(frozen=True, eq=False)
class Polyhedron:
    """``Conv(points) + recession``."""

    points: tuple[Vector, ...]
    recession: Cone

    @classmethod
    def of(cls, points: Iterable[Sequence], recession: Cone) -> "Polyhedron":
        pts = sorted({vec(p) for p in points})
        if not pts:
            raise ValueError("a polyhedron needs at least one point")
        for p in pts:
            if len(p) != recession.ambient:
                raise DimensionError(f"point {fmt_vector(p)} is not of rank {recession.ambient}")
        return cls(tuple(pts), recession)

    @classmethod
    def translate_cone(cls, v: Sequence, cone: Cone) -> "Polyhedron":
        return cls.of([v], cone)

    @property
    def ambient(self) -> int:
        return self.recession.ambient

    @cached_property
    def homogenization(self) -> Cone:
        gens = [p + (Fraction(1),) for p in self.points]
        gens += [g + (Fraction(0),) for g in self.recession.generators]
        return Cone.of(gens, self.ambient + 1, self.recession.side)

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.ambient:
            raise DimensionError("point of the wrong rank")
        return self.homogenization.contains(vec(x) + (Fraction(1),))

    @cached_property
    def vertices(self) -> tuple[Vector, ...]:
        """A minimal set of points ``V`` with ``self = Conv(V) + recession``."""
        if len(self.points) == 1:
            return self.points
        hom = self.homogenization
        if hom.is_strongly_convex():
            # vertices are the rays of the homogenization at height > 0
            pts = {scale(Fraction(1, r[-1]), r[:-1]) for r in hom.rays if r[-1] > 0}
            return tuple(sorted(p for p in self.points if p in pts))
        keep = list(self.points)
        for p in list(keep):
            rest = [q for q in keep if q != p]
            if rest and Polyhedron.of(rest, self.recession).contains(p):
                keep = rest
        return tuple(sorted(keep))

    def contains_polyhedron(self, other: "Polyhedron") -> bool:
        return (all(self.contains(v) for v in other.vertices)
                and self.recession.contains_cone(other.recession))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polyhedron) and self.ambient == other.ambient
                and self.recession == other.recession
                and self.contains_polyhedron(other) and other.contains_polyhedron(self))

    def __hash__(self) -> int:
        return hash((self.recession, len(self.vertices)))

    def __repr__(self) -> str:
        pts = ", ".join(fmt_vector(v) for v in self.vertices)
        return f"Conv({pts}) + {self.recession!r}"

    def __add__(self, other: "Polyhedron") -> "Polyhedron":
        if self.ambient != other.ambient:
            raise DimensionError("Minkowski sum of polyhedra of different rank")
        pts = [add(p, q) for p in self.vertices for q in other.vertices]
        return Polyhedron.of(pts, self.recession + other.recession).minimal()

    def minimal(self) -> "Polyhedron":
        return Polyhedron(self.vertices, self.recession)

    def translate(self, v: Sequence) -> "Polyhedron":
        return Polyhedron.of([add(p, v) for p in self.vertices], self.recession)

    def scale(self, k) -> "Polyhedron":
        k = Fraction(k)
        if k <= 0:
            raise ValueError("polyhedra are scaled by positive factors")
        return Polyhedron.of([scale(k, p) for p in self.vertices], self.recession)

    def support_min(self, m: Sequence):
        """``min_{x in P} <m, x>``, or ``NEG_INF`` when unbounded below."""
        if not all(dot(g, m) >= 0 for g in self.recession.generators):
            return NEG_INF
        return min(dot(v, m) for v in self.vertices)

    def is_bounded(self) -> bool:
        return self.recession.dim == 0


# ---------------------------------------------------------------------------
# quasifans

class QuasiFanError(ValueError):
    """Quasifans with different supports cannot be refined against each other."""


@dataclass(frozen=True, eq=False)
class QuasiFan:
    """Maximal cones of a quasifan with a fixed support."""

    cones: tuple[Cone, ...]
    support: Cone

    def cells_containing(self, m: Sequence) -> list[Cone]:
        return [c for c in self.cones if c.contains(m)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuasiFan) and self.support == other.support
                and set(self.cones) == set(other.cones))

    def __hash__(self) -> int:
        return hash((self.support, frozenset(self.cones)))


def normal_quasifan(p: Polyhedron, within: Cone) -> QuasiFan:
    """Normal quasifan of ``p`` restricted to ``within`` (inside the dual of its tail)."""
    if within.side != _dual_side(p.recession.side) or within.ambient != p.ambient:
        raise DimensionError("normal quasifan lives on the dual side")
    if not p.recession.dual().contains_cone(within):
        raise DimensionError("support must lie in the dual of the tail cone")
    verts = p.vertices
    cones = []
    for v in verts:
        diffs = [sub(w, v) for w in verts if w != v]
        region = Cone.of(diffs, p.ambient, p.recession.side).dual() if diffs else Cone.full(p.ambient, within.side)
        c = region.intersect(within)
        if c.dim == within.dim and c not in cones:
            cones.append(c)
    return QuasiFan(tuple(cones), within)


def quasifan_refine(a: QuasiFan, b: QuasiFan) -> QuasiFan:
    if a.support != b.support:
        raise QuasiFanError(f"supports {a.support!r} and {b.support!r} differ")
    out = []
    for x in a.cones:
        for y in b.cones:
            c = x.intersect(y)
            if c.dim == a.support.dim and c not in out:
                out.append(c)
    return QuasiFan(tuple(out), a.support)


# functional spellings of the basic operations

def cone_from_generators(gens: Iterable[Sequence], ambient: int | None = None, side: str = "N") -> Cone:
    return Cone.of(gens, ambient, side)


def cone_dual(c: Cone) -> Cone:
    return c.dual()


def cone_linear_part(c: Cone) -> Cone:
    return c.linear_part()


def minkowski_sum(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    return a + b


def support_min(p: Polyhedron, m: Sequence):
    return p.support_min(m)


def lattice_member(v: Sequence, s: Sublattice) -> bool:
    return s.contains(v)
