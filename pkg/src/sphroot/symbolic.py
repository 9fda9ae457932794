"""Rational functions in ``t``, graded elements of ``K(t)[M]`` and derivations.

Polynomial arithmetic is delegated to FLINT (``fmpq_poly``); this module only
adds the fraction-field bookkeeping and the grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

import flint

from .lattice import dot

_P = flint.fmpq_poly
_Q = flint.fmpq

Degree = tuple[int, ...]


class Infinity:
    """The point at infinity of the projective line."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


def point_key(z) -> tuple:
    """Sort key placing finite points first, then infinity."""
    return (1, 0) if z is INF else (0, Fraction(z))


def to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    x = Fraction(x)
    return _Q(x.numerator, x.denominator)


def to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


class RatFunc:
    """An element of ``Q(t)`` kept as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduced: bool = False):
        num = num if isinstance(num, _P) else _P([to_fmpq(num)])
        den = _P([1]) if den is None else (den if isinstance(den, _P) else _P([to_fmpq(den)]))
        if den == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        if num == 0:
            self.num, self.den = _P([]), _P([1])
            return
        if not reduced:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num // g, den // g
        lc = den[den.degree()]
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    # -- construction ------------------------------------------------------

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(_P([0, 1]), reduced=True)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(_P([to_fmpq(c)]), reduced=True)

    @classmethod
    def linear_power(cls, z, k: int) -> "RatFunc":
        """``(t - z)^k`` for a finite point ``z`` and any integer ``k``."""
        base = _P([-to_fmpq(z), 1])
        if k >= 0:
            return cls(base ** k, reduced=True)
        return cls(_P([1]), base ** (-k), reduced=True)

    @classmethod
    def from_coeffs(cls, num: Sequence, den: Sequence = (1,)) -> "RatFunc":
        return cls(_P([to_fmpq(c) for c in num]), _P([to_fmpq(c) for c in den]))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "RatFunc":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return _coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other.den == 1 and self.den == 1:
            return RatFunc(self.num * other.num, reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other.num == 0:
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _coerce(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k >= 0:
            return RatFunc(self.num ** k, self.den ** k, reduced=True)
        if self.num == 0:
            raise ZeroDivisionError("negative power of zero")
        return RatFunc(self.den ** (-k), self.num ** (-k), reduced=True)

    def __eq__(self, other) -> bool:
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((tuple(str(c) for c in self.num.coeffs()), tuple(str(c) for c in self.den.coeffs())))

    def __bool__(self) -> bool:
        return self.num != 0

    def is_zero(self) -> bool:
        return self.num == 0

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def compose(self, inner: "RatFunc") -> "RatFunc":
        """``self(inner(t))``."""
        a, b = inner.num, inner.den
        dn, dd = max(self.num.degree(), 0), max(self.den.degree(), 0)
        top = max(dn, dd)

        def homog(p):
            out = _P([])
            for i, c in enumerate(p.coeffs()):
                if c != 0:
                    out += c * a ** i * b ** (top - i)
            return out

        return RatFunc(homog(self.num), homog(self.den))

    def __call__(self, x):
        x = to_fmpq(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return to_fraction(self.num(x) / d)

    def ord_at(self, z) -> int | None:
        """Order of vanishing at ``z`` (``INF`` allowed); ``None`` for the zero function."""
        if self.num == 0:
            return None
        if z is INF:
            return self.den.degree() - self.num.degree()
        lin = _P([-to_fmpq(z), 1])
        return _multiplicity(self.num, lin) - _multiplicity(self.den, lin)

    def __repr__(self) -> str:
        if self.den == 1:
            return f"({self.num})".replace("x", "t")
        return f"({self.num})/({self.den})".replace("x", "t")


def _multiplicity(p, lin) -> int:
    k = 0
    while p != 0 and p.degree() > 0:
        q, r = divmod(p, lin)
        if r != 0:
            break
        p, k = q, k + 1
    return k


def _coerce(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, flint.fmpq)):
        return RatFunc.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a rational function")


ZERO = RatFunc.const(0)
ONE = RatFunc.const(1)
T = RatFunc.t()


# ---------------------------------------------------------------------------
# graded elements

class GradedElement:
    """Finite sum ``sum_m f_m chi^m`` with ``f_m`` in ``Q(t)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Degree, RatFunc] | None = None):
        self.terms: dict[Degree, RatFunc] = {}
        for m, f in (terms or {}).items():
            f = _coerce(f)
            if not f.is_zero():
                self.terms[tuple(int(x) for x in m)] = f

    @classmethod
    def mono(cls, f, m: Sequence[int]) -> "GradedElement":
        return cls({tuple(m): _coerce(f)})

    def __add__(self, other: "GradedElement") -> "GradedElement":
        out = dict(self.terms)
        for m, f in other.terms.items():
            out[m] = out[m] + f if m in out else f
        return GradedElement(out)

    def __neg__(self) -> "GradedElement":
        return GradedElement({m: -f for m, f in self.terms.items()})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def __mul__(self, other) -> "GradedElement":
        if not isinstance(other, GradedElement):
            c = _coerce(other)
            return GradedElement({m: c * f for m, f in self.terms.items()})
        out: dict[Degree, RatFunc] = {}
        for m, f in self.terms.items():
            for n, g in other.terms.items():
                k = tuple(a + b for a, b in zip(m, n))
                out[k] = out[k] + f * g if k in out else f * g
        return GradedElement(out)

    __rmul__ = __mul__

    def shift(self, m: Sequence[int]) -> "GradedElement":
        return GradedElement({tuple(a + b for a, b in zip(k, m)): f for k, f in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedElement) and (self - other).is_zero()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{f}*chi^{m}" for m, f in sorted(self.terms.items()))

    def map_coefficients(self, fn: Callable[[RatFunc], RatFunc]) -> "GradedElement":
        return GradedElement({m: fn(f) for m, f in self.terms.items()})


# ---------------------------------------------------------------------------
# derivations of K(t)[M]

@dataclass(frozen=True, eq=False)
class Derivation:
    """A derivation of ``K(t)[M]`` given on generators.

    ``t_image`` is the image of ``t``; ``log_images[i]`` is
    ``D(chi^{b_i}) / chi^{b_i}`` for the standard basis ``b_i`` of ``M``.
    Leibniz extends it: ``D(Q chi^m) = (Q' D(t) + Q sum_i m_i log_images[i]) chi^m``.
    """

    rank: int
    t_image: GradedElement
    log_images: tuple[GradedElement, ...]
    name: str = ""

    @classmethod
    def homogeneous(cls, rank: int, degree: Sequence[int], t_coeff, log_coeffs: Sequence, name: str = "") -> "Derivation":
        """``D(Q chi^m) = (Q' a + Q sum_i m_i c_i) chi^{m + degree}``."""
        deg = tuple(int(x) for x in degree)
        t_img = GradedElement.mono(t_coeff, deg)
        logs = tuple(GradedElement.mono(c, deg) for c in log_coeffs)
        return cls(rank, t_img, logs, name)

    def apply_mono(self, f: RatFunc, m: Sequence[int]) -> GradedElement:
        if f.is_zero():
            return GradedElement()
        out = self.t_image * f.derivative() if not self.t_image.is_zero() else GradedElement()
        for mi, g in zip(m, self.log_images):
            if mi:
                out = out + g * (f * mi)
        return out.shift(m)

    def __call__(self, x: GradedElement) -> GradedElement:
        out = GradedElement()
        for m, f in x.terms.items():
            out = out + self.apply_mono(f, m)
        return out

    def scaled(self, c) -> "Derivation":
        return Derivation(self.rank, self.t_image * c, tuple(g * c for g in self.log_images), self.name)

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.rank, self.t_image + other.t_image,
                          tuple(a + b for a, b in zip(self.log_images, other.log_images)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + other.scaled(-1)


def probes(rank: int) -> list[tuple[str, GradedElement]]:
    """Generators on which two derivations of ``K(t)[M]`` must agree to be equal."""
    out = [("t", GradedElement.mono(T, (0,) * rank))]
    for i in range(rank):
        b = tuple(int(i == j) for j in range(rank))
        out.append((f"chi^{b}", GradedElement.mono(ONE, b)))
    return out


def commutator(a: Derivation, b: Derivation) -> Derivation:
    """``[a, b] = a b - b a`` computed on generators."""
    rank = a.rank
    t_img = a(b(probes(rank)[0][1])) - b(a(probes(rank)[0][1]))
    logs = []
    for i in range(rank):
        x = GradedElement.mono(ONE, tuple(int(i == j) for j in range(rank)))
        logs.append((a(b(x)) - b(a(x))).shift(tuple(-int(i == j) for j in range(rank))))
    return Derivation(rank, t_img, tuple(logs), f"[{a.name},{b.name}]")


def derivations_equal(a: Derivation, b: Derivation) -> tuple[bool, str | None]:
    for label, x in probes(a.rank):
        if not (a(x) - b(x)).is_zero():
            return False, f"differ on {label}: {a(x)} vs {b(x)}"
    return True, None


def commutator_vanishes(a: Derivation, b: Derivation) -> tuple[bool, str | None]:
    for label, x in probes(a.rank):
        diff = a(b(x)) - b(a(x))
        if not diff.is_zero():
            return False, f"[{a.name},{b.name}]({label}) = {diff}"
    return True, None


def pairing_coeffs(functional: Sequence, rank: int) -> list[Fraction]:
    """Values of a functional on the standard basis of ``M``."""
    return [dot(functional, tuple(int(i == j) for j in range(rank))) for i in range(rank)]


def preserves_at_degree(d: Derivation, divisor, bound: int, extra: int = 2,
                        degrees: Iterable[Sequence[int]] | None = None) -> tuple[bool, str | None]:
    """Check that ``d`` maps the section algebra of ``divisor`` into itself.

    Every degree ``m`` of the weight cone with sup norm at most ``bound`` is
    visited; in each, the canonical section times ``t^k`` (``k <= extra``)
    is pushed through ``d`` and the image tested for membership.
    """
    from .divisors import section_basis, section_contains, weight_box

    for m in (degrees if degrees is not None else weight_box(divisor, bound)):
        for f in section_basis(divisor, m, extra):
            img = d.apply_mono(f, m)
            for n, g in img.terms.items():
                if not section_contains(divisor, n, g):
                    return False, f"D({f}*chi^{tuple(m)}) has the non-section term {g}*chi^{n}"
    return True, None


class NotARoot(ValueError):
    """The degree does not pair to ``-1`` with the given ray."""


def vertical_lnd(e: Sequence[int], rho: Sequence, phi, rank: int | None = None) -> Derivation:
    """``f chi^m -> rho(m) phi f chi^{m+e}``; ``t`` is sent to zero."""
    if dot(e, rho) != -1:
        raise NotARoot(f"<{tuple(e)}, {tuple(rho)}> = {dot(e, rho)}, expected -1")
    n = len(e) if rank is None else rank
    phi = _coerce(phi)
    return Derivation.homogeneous(n, e, 0, [phi * c for c in pairing_coeffs(rho, n)], "vertical")
