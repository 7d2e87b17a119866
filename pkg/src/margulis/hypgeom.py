"""Hyperbolic trigonometry of displacements, over intervals.

Covers the finite geometry used by the displacement arguments: complex
translation length recovered from a matrix trace, the distance-to-axis
function omega, embedded-tube radii with the accompanying integer search,
the two displacement bounds (the max-of-two-branches bound and its
single-angle variant), the pairing value 1/(1+e^d1) + 1/(1+e^d2) whose
excess over 1/2 drives every contradiction, and the trace ellipse that
constrains traces of short-displacement elements.

All inputs and outputs are intervals; every comparison used to steer a
branch is certified, and anything undecidable at the working precision
raises InconclusiveError so the caller can retry with more bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .rigor import (
    ComplexBox,
    DomainError,
    InconclusiveError,
    Interval,
    acosh,
    asinh,
    atan,
    cos,
    cosh,
    exp,
    log,
    pi_interval,
    sin,
    sinh,
    sqrt,
    sqrt3_interval,
)

__all__ = [
    "ComplexLength",
    "complex_length_from_trace",
    "trace_from_complex_length",
    "omega",
    "TubeRadius",
    "tube_radius",
    "asymptotic_constant",
    "zagier_displacement_bound",
    "zagier_n",
    "phi",
    "oak_bound",
    "acorn_bound",
    "margulis_pair_value",
    "trace_ellipse_margin",
]


@dataclass(frozen=True)
class ComplexLength:
    """Complex translation length l + i*theta with l > 0, theta in (-pi, pi]."""

    l: Interval
    theta: Interval

    def __post_init__(self):
        if not self.l.is_positive():
            raise DomainError(f"translation length must be certified positive, got {self.l}")

    def times(self, m: int) -> "ComplexLength":
        """Complex length of the m-th power (m >= 1), angle re-normalized."""
        if m < 1:
            raise ValueError("power must be >= 1")
        return ComplexLength(self.l * m, _normalize_angle(self.theta * m))


def _normalize_angle(theta: Interval) -> Interval:
    """Shift by a multiple of 2*pi into (-pi, pi]; the shift must be certified."""
    two_pi = pi_interval() * 2
    pi = pi_interval()
    out = theta
    for _ in range(64):
        if out.certainly_le(pi) and out.certainly_gt(-pi):
            return out
        if out.lo > 0:
            shifted = out - two_pi
            if shifted.certainly_gt(-pi):
                out = shifted
                continue
        if out.hi < 0:
            shifted = out + two_pi
            if shifted.certainly_le(pi):
                out = shifted
                continue
        break
    raise InconclusiveError(f"cannot normalize angle {theta} into (-pi, pi]")


def _atan2(y: Interval, x: Interval) -> Interval:
    """Interval atan2 away from the branch cut; certified quadrant required."""
    if x.is_positive():
        return atan(y / x)
    half_pi = pi_interval() * Fraction(1, 2)
    if y.is_positive():
        return half_pi - atan(x / y)
    if y.is_negative():
        return -half_pi - atan(x / y)
    raise InconclusiveError(f"atan2 quadrant not certified for x={x}, y={y}")


def complex_length_from_trace(tau: ComplexBox) -> ComplexLength:
    """The complex length L = l + i*theta with 2 cosh(L/2) = +-tau, l > 0.

    Solves z^2 -+ tau z + 1 = 0 for z = e^{L/2}, takes the root outside the
    unit circle (certified; traces in [-2, 2] are rejected), and normalizes
    theta into (-pi, pi].  With l > 0 and that normalization L is unique,
    so 2 cosh(L/2) always re-encloses tau up to sign; conjugate traces give
    conjugate lengths.
    """
    if tau.im.lo == 0 == tau.im.hi and Interval.from_endpoints(-2, 2).contains(tau.re):
        raise DomainError(f"trace {tau} lies in [-2, 2]; no loxodromic length")
    four = ComplexBox.exact(4)
    s = tau * tau - four
    root = _complex_sqrt(s)
    candidates = [
        _half_sum(tau, root),
        _half_sum(tau, -root),
    ]
    z: Optional[ComplexBox] = None
    for cand in candidates:
        mod2 = cand.abs_sq()
        if mod2.certainly_gt(Interval.exact(1)):
            z = cand
            break
        if not mod2.certainly_lt(Interval.exact(1)):
            raise InconclusiveError(
                "cannot certify |z| != 1; trace may be elliptic or precision too low"
            )
    if z is None:
        raise DomainError(f"trace {tau} is not certified loxodromic (|z| <= 1)")
    l = log(z.abs_sq())
    theta = _normalize_angle(_atan2(z.im, z.re) * 2)
    return ComplexLength(l, theta)


def _half_sum(tau: ComplexBox, root: ComplexBox) -> ComplexBox:
    half = Interval.exact(Fraction(1, 2))
    summed = tau + root
    return ComplexBox(summed.re * half, summed.im * half)


def _complex_sqrt(s: ComplexBox) -> ComplexBox:
    """Principal square root of a box not crossing the negative real axis."""
    mod = sqrt(s.abs_sq())
    two = Interval.exact(2)
    re_sq = (mod + s.re) / two
    im_sq = (mod - s.re) / two
    if re_sq.lo < 0:
        re_sq = Interval.from_endpoints(0, re_sq.hi) if re_sq.hi >= 0 else re_sq
    if im_sq.lo < 0:
        im_sq = Interval.from_endpoints(0, im_sq.hi) if im_sq.hi >= 0 else im_sq
    p = sqrt(re_sq)
    q = sqrt(im_sq)
    if s.im.lo >= 0:
        return ComplexBox(p, q)
    if s.im.hi <= 0:
        return ComplexBox(p, -q)
    if s.re.is_positive():
        # im straddles 0 but the box stays in the right half plane
        return ComplexBox(p, Interval.hull(-q, q))
    raise InconclusiveError("square-root box crosses the branch cut")


def trace_from_complex_length(length: ComplexLength) -> ComplexBox:
    """2 cosh(L/2): the (sign-ambiguous) trace recovered from a complex length."""
    x = length.l * Fraction(1, 2)
    y = length.theta * Fraction(1, 2)
    re = cosh(x) * cos(y) * 2
    im = sinh(x) * sin(y) * 2
    return ComplexBox(re, im)


def omega(length: ComplexLength, displacement: Interval) -> Interval:
    """Distance from a point moved by `displacement` to the axis:
    arcsinh(sqrt((cosh D - cosh l) / (cosh l - cos theta))).

    Requires D >= l > 0 (certified).  The numerator enclosure is clipped at 0,
    which is sound because the precondition forces the exact value to be
    nonnegative.
    """
    if not displacement.certainly_ge(length.l):
        raise DomainError(
            f"displacement {displacement} not certified >= translation length {length.l}"
        )
    num = cosh(displacement) - cosh(length.l)
    den = cosh(length.l) - cos(length.theta)
    if not den.is_positive():
        raise DomainError("cosh l - cos theta not certified positive")
    if num.lo < 0:
        num = Interval.from_endpoints(0, num.hi)
    return asinh(sqrt(num / den))


def zagier_displacement_bound(l: Interval) -> Interval:
    """cosh(sqrt(4 pi l / sqrt(3))) as an interval; the tube-bound pivot."""
    arg = sqrt(l * 4 * pi_interval() / sqrt3_interval())
    return cosh(arg)


@dataclass(frozen=True)
class TubeRadius:
    """Result of the tube-radius bound; `radius` is None when the bound
    degenerates (geodesic too long for the given displacement budget)."""

    radius: Optional[Interval]

    @property
    def exists(self) -> bool:
        return self.radius is not None


def tube_radius(l: Interval, mu: Interval) -> TubeRadius:
    """R with sinh^2 R = (cosh mu - cosh sqrt(4 pi l / sqrt 3)) / (cosh sqrt(...) - 1).

    Returns the no-tube variant instead of raising when the numerator is
    certified nonpositive, so sweeps over l stay total.
    """
    if not l.is_positive():
        raise DomainError("geodesic length must be certified positive")
    pivot = zagier_displacement_bound(l)
    num = cosh(mu) - pivot
    den = pivot - Interval.exact(1)
    if not den.is_positive():
        raise InconclusiveError("tube bound denominator not certified positive")
    if num.hi <= 0:
        return TubeRadius(None)
    if num.lo < 0:
        raise InconclusiveError(
            "tube bound numerator straddles 0; raise precision or shorten l"
        )
    return TubeRadius(asinh(sqrt(num / den)))


def asymptotic_constant(mu: Interval) -> Interval:
    """sqrt(3) (cosh mu - 1) / (2 pi): the small-l limit of l * sinh^2 R."""
    if not mu.is_positive():
        raise DomainError("mu must be certified positive")
    return sqrt3_interval() * (cosh(mu) - 1) / (pi_interval() * 2)


def zagier_n(l: Interval, theta: Interval, n_cap: int = 100_000) -> int:
    """Least n >= 1 with cosh(n l) - cos(n theta) <= cosh(sqrt(4 pi l / sqrt 3)) - 1.

    Existence for 0 < l < pi*sqrt(3) is the integer-search lemma; the
    certified comparison may remain undecidable at boundary cases, in which
    case InconclusiveError names the candidate n.
    """
    if not l.is_positive():
        raise DomainError("l must be certified positive")
    if not l.certainly_lt(pi_interval() * sqrt3_interval()):
        raise DomainError("l must be certified below pi*sqrt(3)")
    bound = zagier_displacement_bound(l) - 1
    for n in range(1, n_cap + 1):
        value = cosh(l * n) - cos(theta * n)
        if value.certainly_le(bound):
            return n
        if not value.certainly_gt(bound):
            raise InconclusiveError(
                f"candidate n={n} undecided against the displacement bound"
            )
        if (l * n).lo > float(bound.hi) + 3:
            break
    raise InconclusiveError(f"no admissible n found up to {n_cap}")


def phi(T: Interval, mu: Interval, h: Interval) -> Interval:
    """max(2 arccosh((1 + T/2) sinh^2 mu + cosh h), arccosh(cosh mu cosh(mu-h)) + 2 mu).

    Domain: 0 < T < 2 and 0 < h < mu.
    """
    _require_phi_domain(T, mu, h)
    first = acosh((Interval.exact(1) + T * Fraction(1, 2)) * sinh(mu).sqr() + cosh(h)) * 2
    second = acosh(cosh(mu) * cosh(mu - h)) + mu * 2
    return Interval(max(first.lo, second.lo), max(first.hi, second.hi))


def phi_branches(T: Interval, mu: Interval, h: Interval) -> tuple[Interval, Interval]:
    """Both branches of the displacement bound, for branch-dominance checks."""
    _require_phi_domain(T, mu, h)
    first = acosh((Interval.exact(1) + T * Fraction(1, 2)) * sinh(mu).sqr() + cosh(h)) * 2
    second = acosh(cosh(mu) * cosh(mu - h)) + mu * 2
    return first, second


def _require_phi_domain(T: Interval, mu: Interval, h: Interval) -> None:
    if not (T.is_positive() and T.certainly_lt(Interval.exact(2))):
        raise DomainError(f"T must be certified in (0, 2), got {T}")
    if not h.is_positive():
        raise DomainError(f"h must be certified positive, got {h}")
    if not h.certainly_lt(mu):
        raise DomainError(f"h must be certified below mu, got h={h}, mu={mu}")


def oak_bound(T: Interval, mu: Interval, h: Interval, n: int) -> Interval:
    """phi(T, mu, h) + (n - 4) mu for a length-n product with two good angles.

    n = 4 is the degenerate phi-only value; n > 4 per the chaining argument.
    """
    if n < 4:
        raise DomainError("n must be at least 4")
    return phi(T, mu, h) + mu * (n - 4)


def acorn_bound(T: Interval, mu: Interval, n: int) -> Interval:
    """arccosh(cosh^2 mu + T sinh^2 mu) + (n - 2) mu, for one good angle."""
    if n < 2:
        raise DomainError("n must be at least 2")
    if not (T.certainly_ge(Interval.exact(-1)) and T.certainly_le(Interval.exact(1))):
        raise DomainError(f"T must be certified in [-1, 1], got {T}")
    if not mu.is_positive():
        raise DomainError("mu must be certified positive")
    arg = cosh(mu).sqr() + T * sinh(mu).sqr()
    return acosh(arg) + mu * (n - 2)


def margulis_pair_value(d1: Interval, d2: Interval) -> Interval:
    """1/(1 + e^d1) + 1/(1 + e^d2); values above 1/2 contradict independence."""
    if d1.lo < 0 or d2.lo < 0:
        raise DomainError("displacements must be nonnegative")
    one = Interval.exact(1)
    return one / (one + exp(d1)) + one / (one + exp(d2))


def trace_ellipse_margin(tau: ComplexBox, mu: Interval) -> Interval:
    """(Re tau / (2 cosh(mu/2)))^2 + (Im tau / (2 sinh(mu/2)))^2 - 1.

    Nonpositive margin is necessary for translation length <= mu.
    """
    if not mu.is_positive():
        raise DomainError("mu must be certified positive")
    half = mu * Fraction(1, 2)
    a = tau.re / (cosh(half) * 2)
    b = tau.im / (sinh(half) * 2)
    return a.sqr() + b.sqr() - 1
