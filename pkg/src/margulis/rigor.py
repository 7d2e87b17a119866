"""Outward-rounded interval arithmetic and the decimal-literal convention.

Every approximate real number in this package lives in an :class:`Interval`
``[lo, hi]`` whose endpoints are MPFR binary floats.  All operations round
outward (lo toward -inf, hi toward +inf), so an interval computed from
enclosures of the inputs encloses the exact mathematical result.  MPFR
supplies correctly rounded transcendental functions in software; we never
depend on hardware rounding behaviour.

Decimal assertions follow the truncation convention used throughout the
claim registry: a truncated literal ``0.39...`` denotes the closed interval
[39/100, 40/100], while an untruncated literal denotes an exact rational.

The working precision is an ambient, task-local setting (default 128 bits)
so that the claim runner can re-evaluate a computation at doubled precision
without threading a parameter through every call.
"""

from __future__ import annotations

import contextvars
import re
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator, Union

import gmpy2
from gmpy2 import mpfr, mpq

__all__ = [
    "DEFAULT_PRECISION",
    "MAX_PRECISION",
    "DomainError",
    "InconclusiveError",
    "ParseError",
    "precision",
    "get_precision",
    "Interval",
    "ComplexBox",
    "interval_fn",
    "ELEMENTARY_FUNCTIONS",
    "cosh",
    "sinh",
    "exp",
    "log",
    "sqrt",
    "cos",
    "sin",
    "atan",
    "acosh",
    "asinh",
    "pi_interval",
    "sqrt3_interval",
    "log3_interval",
    "DecimalLiteral",
    "parse_decimal",
    "MatchVerdict",
    "matches_decimal",
]

DEFAULT_PRECISION = 128
MAX_PRECISION = 1024

Scalar = Union[int, Fraction, mpfr, str]


class DomainError(ValueError):
    """An interval extends outside the domain of the requested function."""


class InconclusiveError(Exception):
    """The requested certification cannot be decided at this precision.

    Callers (in particular the claim runner) respond by doubling the working
    precision and retrying.
    """


class ParseError(ValueError):
    """Malformed textual input."""


_precision_var: contextvars.ContextVar[int] = contextvars.ContextVar(
    "margulis_precision", default=DEFAULT_PRECISION
)


def get_precision() -> int:
    """Current working precision in bits."""
    return _precision_var.get()


@contextmanager
def precision(bits: int) -> Iterator[None]:
    """Run a block at the given working precision (task-local)."""
    if bits < 2:
        raise ValueError("precision must be at least 2 bits")
    token = _precision_var.set(bits)
    try:
        yield
    finally:
        _precision_var.reset(token)


_CTX_CACHE: dict[tuple[int, bool], gmpy2.context] = {}


def _ctx(up: bool) -> gmpy2.context:
    key = (get_precision(), up)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = gmpy2.context(
            precision=key[0],
            round=gmpy2.RoundUp if up else gmpy2.RoundDown,
        )
        _CTX_CACHE[key] = ctx
    return ctx


def _to_mpfr_exactable(x: Scalar):
    """Convert to a value gmpy2 can round in one step (mpq for rationals)."""
    if isinstance(x, mpfr):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        f = Fraction(x)
        return mpq(f.numerator, f.denominator)
    if isinstance(x, type(mpq(0))):
        return x
    raise TypeError(f"cannot build an interval endpoint from {type(x).__name__}")


def _down(value) -> mpfr:
    with _ctx(False):
        return mpfr(value)


def _up(value) -> mpfr:
    with _ctx(True):
        return mpfr(value)


class Interval:
    """Closed real interval [lo, hi] with outward-rounded endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: mpfr, hi: mpfr):
        if gmpy2.is_nan(lo) or gmpy2.is_nan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if lo > hi:
            raise ValueError(f"inverted interval: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *_):
        raise AttributeError("Interval is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def exact(cls, x: Scalar) -> "Interval":
        """Tightest interval containing the exact value x.

        Accepts ints, Fractions, decimal strings ("0.3925") and mpfr values;
        the endpoints are the two neighbouring floats at working precision.
        """
        v = _to_mpfr_exactable(x)
        return cls(_down(v), _up(v))

    @classmethod
    def from_endpoints(cls, lo: Scalar, hi: Scalar) -> "Interval":
        return cls(_down(_to_mpfr_exactable(lo)), _up(_to_mpfr_exactable(hi)))

    @classmethod
    def hull(cls, a: "Interval", b: "Interval") -> "Interval":
        return cls(min(a.lo, b.lo), max(a.hi, b.hi))

    # -- exact endpoint views ----------------------------------------------

    @property
    def lo_fraction(self) -> Fraction:
        return Fraction(*mpq(self.lo).as_integer_ratio())

    @property
    def hi_fraction(self) -> Fraction:
        return Fraction(*mpq(self.hi).as_integer_ratio())

    def width(self) -> mpfr:
        with _ctx(True):
            return self.hi - self.lo

    def mid(self) -> mpfr:
        with _ctx(False):
            return (self.lo + self.hi) / 2

    # -- predicates ----------------------------------------------------------

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        return self.lo <= x <= self.hi

    def subset_of(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def disjoint_from(self, other: "Interval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def is_positive(self) -> bool:
        """Certified x > 0 for every x in the interval."""
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def certainly_lt(self, other) -> bool:
        other = _as_interval(other)
        return self.hi < other.lo

    def certainly_le(self, other) -> bool:
        other = _as_interval(other)
        return self.hi <= other.lo

    def certainly_gt(self, other) -> bool:
        other = _as_interval(other)
        return self.lo > other.hi

    def certainly_ge(self, other) -> bool:
        other = _as_interval(other)
        return self.lo >= other.hi

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "Interval":
        # gmpy2 negation rounds to the active context, so keep it directed
        with _ctx(False):
            lo = -self.hi
        with _ctx(True):
            hi = -self.lo
        return Interval(lo, hi)

    def __add__(self, other) -> "Interval":
        other = _as_interval(other)
        with _ctx(False):
            lo = self.lo + other.lo
        with _ctx(True):
            hi = self.hi + other.hi
        return Interval(lo, hi)

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        other = _as_interval(other)
        with _ctx(False):
            lo = self.lo - other.hi
        with _ctx(True):
            hi = self.hi - other.lo
        return Interval(lo, hi)

    def __rsub__(self, other) -> "Interval":
        return _as_interval(other) - self

    def __mul__(self, other) -> "Interval":
        other = _as_interval(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        with _ctx(False):
            lo = min(a * c, a * d, b * c, b * d)
        with _ctx(True):
            hi = max(a * c, a * d, b * c, b * d)
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        other = _as_interval(other)
        if other.lo <= 0 <= other.hi:
            raise DomainError("division by an interval containing 0")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        with _ctx(False):
            lo = min(a / c, a / d, b / c, b / d)
        with _ctx(True):
            hi = max(a / c, a / d, b / c, b / d)
        return Interval(lo, hi)

    def __rtruediv__(self, other) -> "Interval":
        return _as_interval(other) / self

    def sqr(self) -> "Interval":
        """x^2, tighter than self * self when the interval straddles 0."""
        a, b = self.lo, self.hi
        if a >= 0:
            with _ctx(False):
                lo = a * a
            with _ctx(True):
                hi = b * b
        elif b <= 0:
            with _ctx(False):
                lo = b * b
            with _ctx(True):
                hi = a * a
        else:
            lo = mpfr(0)
            with _ctx(True):
                hi = max(a * a, b * b)
        return Interval(lo, hi)

    def __abs__(self) -> "Interval":
        a, b = self.lo, self.hi
        if a >= 0:
            return self
        if b <= 0:
            return -self
        with _ctx(True):
            na = -a
        return Interval(mpfr(0), max(na, b))

    # -- presentation ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Interval[{self.lo}, {self.hi}]"

    def to_decimal_dict(self, sig: int = 12) -> dict[str, str]:
        """Canonical report form: 12 significant digits, outward-rounded."""
        return {
            "lo": _decimal_string(self.lo, sig, up=False),
            "hi": _decimal_string(self.hi, sig, up=True),
        }


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.exact(x)


def _decimal_string(x: mpfr, sig: int, up: bool) -> str:
    """Decimal rendering of an exact binary float, rounded toward -inf or +inf."""
    if x == 0:
        return "0"
    f = Fraction(*mpq(x).as_integer_ratio())
    a = abs(f)
    # e = floor(log10(a)), computed exactly
    e = len(str(a.numerator)) - len(str(a.denominator))
    for cand in (e + 1, e, e - 1, e - 2):
        if Fraction(10) ** cand <= a:
            e = cand
            break
    scaled = f * Fraction(10) ** (sig - 1 - e)
    n = scaled.numerator // scaled.denominator if not up else -((-scaled.numerator) // scaled.denominator)
    # rounding may push the magnitude to 10^sig; renormalize
    if abs(n) >= 10**sig:
        n //= 10
        e += 1
    digits = str(abs(n)).rjust(sig, "0")
    mantissa = digits[0] + "." + digits[1:]
    signc = "-" if n < 0 else ""
    return f"{signc}{mantissa}e{e:+03d}"


# ---------------------------------------------------------------------------
# elementary functions
# ---------------------------------------------------------------------------


def _monotone_up(fn: Callable, x: Interval) -> Interval:
    with _ctx(False):
        lo = fn(x.lo)
    with _ctx(True):
        hi = fn(x.hi)
    return Interval(lo, hi)


def exp(x: Interval) -> Interval:
    return _monotone_up(gmpy2.exp, x)


def log(x: Interval) -> Interval:
    if x.lo <= 0:
        raise DomainError(f"log requires a strictly positive interval, got {x}")
    return _monotone_up(gmpy2.log, x)


def sqrt(x: Interval) -> Interval:
    if x.lo < 0:
        raise DomainError(f"sqrt requires a nonnegative interval, got {x}")
    return _monotone_up(gmpy2.sqrt, x)


def sinh(x: Interval) -> Interval:
    return _monotone_up(gmpy2.sinh, x)


def asinh(x: Interval) -> Interval:
    return _monotone_up(gmpy2.asinh, x)


def acosh(x: Interval) -> Interval:
    if x.lo < 1:
        raise DomainError(f"arccosh requires an interval with lo >= 1, got {x}")
    return _monotone_up(gmpy2.acosh, x)


def atan(x: Interval) -> Interval:
    return _monotone_up(gmpy2.atan, x)


def cosh(x: Interval) -> Interval:
    a, b = x.lo, x.hi
    if a >= 0:
        return _monotone_up(gmpy2.cosh, x)
    if b <= 0:
        return _monotone_up(gmpy2.cosh, -x)
    with _ctx(True):
        hi = max(gmpy2.cosh(a), gmpy2.cosh(b))
    return Interval(mpfr(1), hi)


def cos(x: Interval) -> Interval:
    """Enclosure of cos over x, handling interior extrema via a pi enclosure."""
    pi = pi_interval()
    with _ctx(True):
        if x.hi - x.lo >= 7:  # more than a full period: 2*pi < 7
            return Interval(mpfr(-1), mpfr(1))
    if abs(x.lo) > 10**9 or abs(x.hi) > 10**9:
        return Interval(mpfr(-1), mpfr(1))
    with _ctx(False):
        lo = min(gmpy2.cos(x.lo), gmpy2.cos(x.hi))
    with _ctx(True):
        hi = max(gmpy2.cos(x.lo), gmpy2.cos(x.hi))
    kmin = int(float(x.lo) / 3.141592653589793) - 2
    kmax = int(float(x.hi) / 3.141592653589793) + 2
    for k in range(kmin, kmax + 1):
        kpi = pi * k
        if kpi.hi < x.lo or kpi.lo > x.hi:
            continue
        # extremum possibly inside: cos(k*pi) = ±1
        if k % 2 == 0:
            hi = mpfr(1)
        else:
            lo = mpfr(-1)
    return Interval(lo, hi)


def sin(x: Interval) -> Interval:
    half_pi = pi_interval() * Fraction(1, 2)
    return cos(x - half_pi)


def pi_interval() -> Interval:
    with _ctx(False):
        lo = gmpy2.const_pi()
    with _ctx(True):
        hi = gmpy2.const_pi()
    return Interval(lo, hi)


def sqrt3_interval() -> Interval:
    with _ctx(False):
        lo = gmpy2.sqrt(mpfr(3))
    with _ctx(True):
        hi = gmpy2.sqrt(mpfr(3))
    return Interval(lo, hi)


def log3_interval() -> Interval:
    with _ctx(False):
        lo = gmpy2.log(mpfr(3))
    with _ctx(True):
        hi = gmpy2.log(mpfr(3))
    return Interval(lo, hi)


ELEMENTARY_FUNCTIONS: dict[str, Callable[[Interval], Interval]] = {
    "cosh": cosh,
    "sinh": sinh,
    "exp": exp,
    "log": log,
    "sqrt": sqrt,
    "cos": cos,
    "arccosh": acosh,
    "arcsinh": asinh,
    "acosh": acosh,
    "asinh": asinh,
}


def interval_fn(name: str, x: Interval) -> Interval:
    """Apply the named elementary function to an interval.

    Raises DomainError if x extends outside the function's domain; inputs are
    never silently clamped.
    """
    try:
        fn = ELEMENTARY_FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"unknown elementary function {name!r}; known: "
            + ", ".join(sorted(set(ELEMENTARY_FUNCTIONS)))
        ) from None
    return fn(x)


# ---------------------------------------------------------------------------
# complex boxes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexBox:
    """Rectangular complex enclosure re + i*im with interval components."""

    re: Interval
    im: Interval

    @classmethod
    def exact(cls, re: Scalar, im: Scalar = 0) -> "ComplexBox":
        return cls(Interval.exact(re), Interval.exact(im))

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "ComplexBox":
        return ComplexBox(-self.re, -self.im)

    def conj(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    def abs_sq(self) -> Interval:
        return self.re.sqr() + self.im.sqr()

    def contains(self, re, im) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def contains_zero(self) -> bool:
        return self.re.contains(0) and self.im.contains(0)


# ---------------------------------------------------------------------------
# decimal literals
# ---------------------------------------------------------------------------

_DECIMAL_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?(\.\.\.|…)?$")


@dataclass(frozen=True)
class DecimalLiteral:
    """A decimal assertion: exact rational, or truncated with a trailing ellipsis.

    A truncated literal with k fractional digits and magnitude v denotes the
    closed interval [v, v + 10^-k] on the side away from zero; an exact
    literal denotes the rational it spells.
    """

    digits: str
    truncated: bool

    @property
    def value(self) -> Fraction:
        return Fraction(self.digits)

    @property
    def fractional_digits(self) -> int:
        _, _, frac = self.digits.partition(".")
        return len(frac)

    def bounds(self) -> tuple[Fraction, Fraction]:
        v = self.value
        if not self.truncated:
            return (v, v)
        step = Fraction(1, 10**self.fractional_digits)
        if self.digits.startswith("-"):
            return (v - step, v)
        return (v, v + step)

    def interval(self) -> Interval:
        lo, hi = self.bounds()
        return Interval.from_endpoints(lo, hi)

    def canonical_text(self) -> str:
        return self.digits + ("..." if self.truncated else "")

    def __str__(self) -> str:
        return self.canonical_text()


def parse_decimal(s: str) -> DecimalLiteral:
    """Parse a decimal literal, accepting '...' or an ellipsis character."""
    m = _DECIMAL_RE.match(s.strip())
    if not m:
        raise ParseError(f"not a decimal literal: {s!r}")
    sign, intpart, fracpart, ell = m.groups()
    digits = (sign if sign == "-" else "") + intpart + (f".{fracpart}" if fracpart else "")
    return DecimalLiteral(digits=digits, truncated=ell is not None)


class MatchVerdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


def matches_decimal(x: Interval, lit: DecimalLiteral | str) -> MatchVerdict:
    """Compare a computed enclosure against a decimal literal.

    PASS when x is contained in the literal's interval, FAIL when they are
    disjoint, INCONCLUSIVE otherwise (caller should raise precision and
    retry).  All comparisons are exact rational comparisons.
    """
    if isinstance(lit, str):
        lit = parse_decimal(lit)
    a, b = lit.bounds()
    qa = mpq(a.numerator, a.denominator)
    qb = mpq(b.numerator, b.denominator)
    if qa <= x.lo and x.hi <= qb:
        return MatchVerdict.PASS
    if x.hi < qa or qb < x.lo:
        return MatchVerdict.FAIL
    return MatchVerdict.INCONCLUSIVE
