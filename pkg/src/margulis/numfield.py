"""Exact arithmetic on algebraic integers of degree <= 3.

An algebraic integer is represented by its monic minimal polynomial with
arbitrary-precision integer coefficients.  Unit tests, the nifty/swell
classification, the tau -> tau^2 - 2 trace-doubling map, discriminants and
the Pell-pair candidate scan are all exact integer computations; root
isolation pairs exact dyadic bisection with interval arithmetic so that
every reported root box is certified.

A word on verdicts: an algebraic integer tau is *swell* when tau and
tau^2 - 2 are both non-units, *nifty* when additionally-or-instead
tau - 1 and tau + 1 are both non-units.  Unit testing is norm testing:
an algebraic integer is a unit exactly when the constant term of its
minimal polynomial is +-1, so each verdict reduces to four exact integer
"norm witnesses" read off the polynomial.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .rigor import (
    ComplexBox,
    InconclusiveError,
    Interval,
    get_precision,
    sqrt,
)

__all__ = [
    "ContractError",
    "ReducibleError",
    "IntPolynomial",
    "parse_polynomial",
    "NormWitnesses",
    "norm_witnesses",
    "Verdict",
    "NiftyVerdict",
    "classify_nifty",
    "min_poly_square_minus_two",
    "square_map_intermediate",
    "trace_power_sequence",
    "discriminant_cubic",
    "discriminant_cubic_printed_form",
    "AlgebraicNumber",
    "roots_cubic",
    "PowerElement",
    "element_power",
    "PellSolution",
    "pell_solutions",
    "candidate_family",
    "scaled_discriminant",
    "discriminant_minorant",
    "CandidateRecord",
    "SurvivorScan",
    "survivor_scan",
    "CLAIMED_PELL_PAIRS",
    "CLAIMED_SURVIVOR_NAMES",
    "CLAIMED_ROOT_TABLE",
    "enumerate_nonnifty",
    "QuadUnit",
    "imag_quadratic_unit_facts",
]


class ContractError(ValueError):
    """An operation was called outside its stated contract."""


class ReducibleError(ContractError):
    """A polynomial required to be irreducible has a rational root."""

    def __init__(self, poly: "IntPolynomial", root: int, index: int | None = None):
        self.poly = poly
        self.root = root
        self.index = index
        at = "" if index is None else f" at iterate {index}"
        super().__init__(f"{poly} is reducible{at}: rational root {root}")


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with integer coefficients, highest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ContractError("empty coefficient list")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ContractError("coefficients must be integers")
        if self.coeffs[0] != 1:
            raise ContractError(f"polynomial must be monic, got leading {self.coeffs[0]}")

    @classmethod
    def of(cls, *coeffs: int) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction, enclosing for Interval."""
        acc = x * 0 + self.coeffs[0] if not isinstance(x, int) else self.coeffs[0]
        for c in self.coeffs[1:]:
            acc = acc * x + c
        return acc

    def eval_box(self, z: ComplexBox) -> ComplexBox:
        acc = ComplexBox.exact(1)
        for c in self.coeffs[1:]:
            acc = acc * z + ComplexBox.exact(c)
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of f(x) for rational x, via cleared denominators."""
        p, q = x.numerator, x.denominator
        n = self.degree
        acc = 0
        qp = 1
        for j, c in enumerate(self.coeffs):
            acc += c * p ** (n - j) * qp
            qp *= q
        return (acc > 0) - (acc < 0)

    def shift(self, c: int) -> "IntPolynomial":
        """f(X + c), exactly."""
        out = [self.coeffs[0]]
        for a in self.coeffs[1:]:
            # multiply the accumulated polynomial by (X + c) and add a
            nxt = out + [0]
            for i in range(len(out)):
                nxt[i + 1] += out[i] * c
            nxt[-1] += a
            out = nxt
        return IntPolynomial(tuple(out))

    def even_odd_split(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """P, Q with f(X) = P(X^2) + X*Q(X^2), low degree last."""
        n = self.degree
        even: list[int] = []
        odd: list[int] = []
        for j, c in enumerate(self.coeffs):
            power = n - j
            (even if power % 2 == 0 else odd).append(c)
        return tuple(even), tuple(odd)

    def rational_root(self) -> Optional[int]:
        """An integer root if one exists (monic => rational roots are integers)."""
        d = self.constant_term
        if d == 0:
            return 0
        for cand in _divisors(abs(d)):
            for sgn in (1, -1):
                if self(sgn * cand) == 0:
                    return sgn * cand
        return None

    def is_irreducible(self) -> bool:
        """Rational-root certificate; valid only for degree <= 3."""
        if self.degree == 1:
            return True
        if self.degree not in (2, 3):
            raise ContractError(
                f"rational-root irreducibility test needs degree <= 3, got {self.degree}"
            )
        return self.rational_root() is None

    def derivative_coeffs(self) -> tuple[int, ...]:
        n = self.degree
        return tuple(c * (n - j) for j, c in enumerate(self.coeffs[:-1]))

    # -- text forms ---------------------------------------------------------

    def bracket_text(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __str__(self) -> str:
        n = self.degree
        parts: list[str] = []
        for j, c in enumerate(self.coeffs):
            p = n - j
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                term = str(mag)
            else:
                xs = "x" if p == 1 else f"x^{p}"
                term = xs if mag == 1 else f"{mag}{xs}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"IntPolynomial({self.bracket_text()})"


def _divisors(n: int) -> Iterator[int]:
    i = 1
    while i * i <= n:
        if n % i == 0:
            yield i
            if i != n // i:
                yield n // i
        i += 1


_TERM_RE = re.compile(
    r"([+-]?)\s*(\d+)?\s*\*?\s*([xX](?:\s*\^\s*(\d+))?)?\s*"
)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse '[1, 3, -14, 11]' or human form 'x^3+3x^2-14x+11'."""
    s = text.strip()
    if s.startswith("["):
        try:
            coeffs = ast.literal_eval(s)
        except (ValueError, SyntaxError) as e:
            raise ContractError(f"bad coefficient list: {text!r}") from e
        if not isinstance(coeffs, (list, tuple)):
            raise ContractError(f"bad coefficient list: {text!r}")
        return IntPolynomial(tuple(int(c) for c in coeffs))
    coeff_by_power: dict[int, int] = {}
    pos = 0
    seen = False
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ContractError(f"cannot parse polynomial text {text!r} at {s[pos:]!r}")
        sign, num, xpart, power = m.groups()
        if num is None and xpart is None:
            raise ContractError(f"cannot parse polynomial text {text!r} at {s[pos:]!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        p = 0
        if xpart is not None:
            p = int(power) if power is not None else 1
        coeff_by_power[p] = coeff_by_power.get(p, 0) + c
        seen = True
        pos = m.end()
    if not seen:
        raise ContractError(f"empty polynomial text {text!r}")
    deg = max(coeff_by_power)
    return IntPolynomial(tuple(coeff_by_power.get(p, 0) for p in range(deg, -1, -1)))


# ---------------------------------------------------------------------------
# unit witnesses and the nifty/swell classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormWitnesses:
    """|N(tau)|, |N(tau-1)|, |N(tau+1)|, |N(tau^2-2)| as exact integers.

    tau (or any conjugate) is a unit iff the corresponding witness is 1.
    """

    n_tau: int
    n_tau_minus_1: int
    n_tau_plus_1: int
    n_tau_sq_minus_2: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n_tau, self.n_tau_minus_1, self.n_tau_plus_1, self.n_tau_sq_minus_2)


def norm_witnesses(f: IntPolynomial) -> NormWitnesses:
    """Norm witnesses by direct evaluation; N(tau^2-2) = |P(2)^2 - 2 Q(2)^2|
    where f(X) = P(X^2) + X Q(X^2)."""
    even, odd = f.even_odd_split()

    def eval_packed(cs: tuple[int, ...], y: int) -> int:
        acc = 0
        for c in cs:
            acc = acc * y + c
        return acc

    p2 = eval_packed(even, 2)
    q2 = eval_packed(odd, 2)
    return NormWitnesses(
        n_tau=abs(f(0)),
        n_tau_minus_1=abs(f(1)),
        n_tau_plus_1=abs(f(-1)),
        n_tau_sq_minus_2=abs(p2 * p2 - 2 * q2 * q2),
    )


class Verdict(Enum):
    SWELL = "swell"
    NIFTY_NOT_SWELL = "nifty-not-swell"
    NON_NIFTY = "non-nifty"

    @property
    def is_nifty(self) -> bool:
        return self is not Verdict.NON_NIFTY


@dataclass(frozen=True)
class NiftyVerdict:
    verdict: Verdict
    witnesses: NormWitnesses


def classify_nifty(f: IntPolynomial) -> NiftyVerdict:
    """Classify the root of a monic irreducible polynomial of degree <= 3.

    The verdict depends only on f: conjugate roots share all four norm
    witnesses, and the verdict is unchanged under field extension.
    """
    if f.degree > 3:
        raise ContractError("classification entry points accept degree <= 3 only")
    root = f.rational_root() if f.degree > 1 else None
    if root is not None:
        raise ReducibleError(f, root)
    w = norm_witnesses(f)
    if w.n_tau != 1 and w.n_tau_sq_minus_2 != 1:
        return NiftyVerdict(Verdict.SWELL, w)
    if w.n_tau_minus_1 != 1 and w.n_tau_plus_1 != 1:
        return NiftyVerdict(Verdict.NIFTY_NOT_SWELL, w)
    return NiftyVerdict(Verdict.NON_NIFTY, w)


# ---------------------------------------------------------------------------
# the trace-doubling map tau -> tau^2 - 2
# ---------------------------------------------------------------------------


def square_map_intermediate(f: IntPolynomial) -> IntPolynomial:
    """Minimal polynomial of tau^2 for cubic f: X^3+(2c-b^2)X^2+(c^2-2bd)X-d^2."""
    _require_cubic(f)
    _, b, c, d = f.coeffs
    return IntPolynomial.of(1, 2 * c - b * b, c * c - 2 * b * d, -d * d)


def min_poly_square_minus_two(f: IntPolynomial) -> IntPolynomial:
    """Minimal polynomial of tau^2 - 2 for tau a root of the irreducible cubic f.

    Coefficientwise: X^3 + (2c - b^2 + 6) X^2 + (c^2 + 8c - 4b^2 - 2bd + 12) X
    + (2c^2 + 8c - 4bd - 4b^2 - d^2 + 8); equal to the tau^2 polynomial
    shifted by 2.
    """
    _require_cubic(f)
    root = f.rational_root()
    if root is not None:
        raise ReducibleError(f, root)
    _, b, c, d = f.coeffs
    return IntPolynomial.of(
        1,
        2 * c - b * b + 6,
        c * c + 8 * c - 4 * b * b - 2 * b * d + 12,
        2 * c * c + 8 * c - 4 * b * d - 4 * b * b - d * d + 8,
    )


def trace_power_sequence(f0: IntPolynomial, rmax: int) -> list[IntPolynomial]:
    """f_0, f_1, ..., f_rmax with f_{r+1} the minimal polynomial of rho_r^2 - 2.

    Every iterate must stay irreducible; a reducible iterate raises
    ReducibleError naming the offending index.
    """
    _require_cubic(f0)
    if rmax < 0:
        raise ContractError("rmax must be >= 0")
    seq = [f0]
    for r in range(rmax):
        cur = seq[-1]
        root = cur.rational_root()
        if root is not None:
            raise ReducibleError(cur, root, index=r)
        seq.append(min_poly_square_minus_two(cur))
    return seq


def _require_cubic(f: IntPolynomial) -> None:
    if f.degree != 3:
        raise ContractError(f"expected a cubic, got degree {f.degree}")


def discriminant_cubic(f: IntPolynomial) -> int:
    """Standard monic-cubic discriminant 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2.

    Positive iff three distinct real roots; negative iff one real root and a
    conjugate pair; zero iff a repeated root.
    """
    _require_cubic(f)
    _, b, c, d = f.coeffs
    return (
        18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d
    )


def discriminant_cubic_printed_form(f: IntPolynomial) -> int:
    """The four-term variant b^2c^2 - 4c^3 - 4b^3 d - 27d^2 (no 18bcd term).

    Kept only so scan reports can record how far this variant's signs stray
    from the standard discriminant; never used for classification.
    """
    _require_cubic(f)
    _, b, c, d = f.coeffs
    return b * b * c * c - 4 * c**3 - 4 * b**3 * d - 27 * d * d


# ---------------------------------------------------------------------------
# certified roots of cubics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicNumber:
    """A minimal (or characteristic) polynomial plus a certified root box."""

    minpoly: IntPolynomial
    root_box: ComplexBox
    coords: Optional[tuple[Fraction, ...]] = None

    @property
    def is_real(self) -> bool:
        return self.root_box.im.lo == 0 and self.root_box.im.hi == 0

    def residual(self) -> ComplexBox:
        """minpoly evaluated over the root box; must contain 0."""
        return self.minpoly.eval_box(self.root_box)


def _bisect(f: IntPolynomial, lo: Fraction, hi: Fraction, target: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change bracket below `target` width by exact bisection."""
    slo = f.sign_at(lo)
    shi = f.sign_at(hi)
    if slo == 0:
        return (lo, lo)
    if shi == 0:
        return (hi, hi)
    if slo * shi > 0:
        raise ContractError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > target:
        mid = (lo + hi) / 2
        sm = f.sign_at(mid)
        if sm == 0:
            return (mid, mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def _isolate_real_roots(f: IntPolynomial, expected: int) -> list[tuple[Fraction, Fraction]]:
    """Disjoint sign-change brackets for the `expected` distinct real roots."""
    bound = Fraction(1 + max(abs(c) for c in f.coeffs))
    cells = [(-bound, bound)]
    for _ in range(200):
        brackets = []
        exact_hits = []
        for a, b in cells:
            sa, sb = f.sign_at(a), f.sign_at(b)
            if sa == 0:
                exact_hits.append(a)
            if sa * sb < 0:
                brackets.append((a, b))
        if len(brackets) + len(exact_hits) >= expected:
            out = [(x, x) for x in exact_hits] + brackets
            return sorted(out)[:expected]
        cells = [c for ab in cells for c in _split(ab)]
    raise InconclusiveError(f"could not separate {expected} real roots of {f}")


def _split(ab: tuple[Fraction, Fraction]) -> list[tuple[Fraction, Fraction]]:
    a, b = ab
    m = (a + b) / 2
    return [(a, m), (m, b)]


def roots_cubic(f: IntPolynomial, target_bits: int | None = None) -> list[AlgebraicNumber]:
    """Certified root boxes of a squarefree monic cubic.

    Negative discriminant: the real root sigma is isolated by exact dyadic
    bisection and the conjugate pair is recovered in closed form as
    u = (-b - sigma)/2, v^2 = -d/sigma - u^2.  Positive discriminant: three
    bisected real roots.  Boxes are pairwise disjoint; ordering is the real
    roots ascending, then the Im > 0 member of the pair, then its conjugate.
    """
    _require_cubic(f)
    disc = discriminant_cubic(f)
    if disc == 0:
        raise ContractError(f"{f} has a repeated root (discriminant 0)")
    if target_bits is None:
        target_bits = max(48, get_precision() // 2)
    target = Fraction(1, 2**target_bits)
    _, b, _, d = f.coeffs
    if disc > 0:
        brackets = _isolate_real_roots(f, 3)
        out = []
        for a, bb in brackets:
            a2, b2 = _bisect(f, a, bb, target)
            box = ComplexBox(Interval.from_endpoints(a2, b2), Interval.exact(0))
            out.append(AlgebraicNumber(f, box))
        return out
    (a0, b0), = _isolate_real_roots(f, 1)
    bits = target_bits
    for _ in range(6):
        lo, hi = _bisect(f, a0, b0, Fraction(1, 2**bits))
        if lo == hi:
            # exact rational real root; peel it off to get the pair exactly
            sig = lo
            p = b + sig
            q = Fraction(f.coeffs[2]) + p * sig
            u_ex = -p / 2
            v2_ex = q - u_ex * u_ex
            if v2_ex <= 0:
                raise ContractError(f"{f}: negative discriminant but real pair")
            v = sqrt(Interval.exact(v2_ex))
            sigma = Interval.exact(sig)
            u = Interval.exact(u_ex)
        else:
            sigma = Interval.from_endpoints(lo, hi)
            if sigma.contains(0):
                bits *= 2
                continue
            u = (Interval.exact(-b) - sigma) * Fraction(1, 2)
            v_sq = Interval.exact(-d) / sigma - u.sqr()
            if not v_sq.is_positive():
                bits *= 2
                continue
            v = sqrt(v_sq)
        real = AlgebraicNumber(f, ComplexBox(sigma, Interval.exact(0)))
        plus = AlgebraicNumber(f, ComplexBox(u, v))
        minus = AlgebraicNumber(f, ComplexBox(u, -v))
        return [real, plus, minus]
    raise InconclusiveError(f"conjugate pair of {f} not certified at this precision")


# ---------------------------------------------------------------------------
# powers of a generator in its own power basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerElement:
    """xi^m written exactly as coords[0] + coords[1] xi + coords[2] xi^2."""

    generator: IntPolynomial
    exponent: int
    coords: tuple[Fraction, Fraction, Fraction]
    value: AlgebraicNumber

    def im_interval(self) -> Interval:
        return self.value.root_box.im


def _poly_mul_mod(a: Sequence[Fraction], bq: Sequence[Fraction], gen: IntPolynomial):
    """Product of two degree<=2 coordinate vectors modulo the monic cubic gen."""
    prod = [Fraction(0)] * 5
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(bq):
            prod[i + j] += x * y
    # reduce degrees 4 and 3 using x^3 = -(b x^2 + c x + d)
    _, b, c, d = gen.coeffs
    for deg in (4, 3):
        coef = prod[deg]
        if coef:
            prod[deg] = Fraction(0)
            prod[deg - 1] -= coef * b
            prod[deg - 2] -= coef * c
            prod[deg - 3] -= coef * d
    return (prod[0], prod[1], prod[2])


def _charpoly_of_coords(coords, gen: IntPolynomial) -> IntPolynomial:
    """Characteristic polynomial of multiplication by the element on 1, xi, xi^2."""
    basis = [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]
    cols = [_poly_mul_mod(coords, e, gen) for e in basis]
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[1][1] * m[2][2] - m[1][2] * m[2][1]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[0][0] * m[1][1] - m[0][1] * m[1][0]
    )
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    cs = [Fraction(1), -tr, minors, -det]
    if any(c.denominator != 1 for c in cs):
        raise ContractError("characteristic polynomial is not integral")
    return IntPolynomial(tuple(int(c) for c in cs))


def element_power(gen_poly: IntPolynomial, m: int) -> PowerElement:
    """xi^m for xi the Im>0 root of an irreducible cubic, exact in the power basis.

    Negative m requires the generator to be a unit (constant term +-1);
    otherwise the inverse is not an algebraic integer and we refuse.
    """
    _require_cubic(gen_poly)
    root = gen_poly.rational_root()
    if root is not None:
        raise ReducibleError(gen_poly, root)
    _, b, c, d = gen_poly.coeffs
    if m < 0 and abs(d) != 1:
        raise ContractError(
            f"negative power of a non-unit generator (constant term {d})"
        )
    one = (Fraction(1), Fraction(0), Fraction(0))
    if m >= 0:
        base = (Fraction(0), Fraction(1), Fraction(0))
        k = m
    else:
        # xi^-1 = -(xi^2 + b xi + c)/d
        base = (Fraction(-c, d), Fraction(-b, d), Fraction(-1, d))
        k = -m
    acc = one
    sq = base
    while k:
        if k & 1:
            acc = _poly_mul_mod(acc, sq, gen_poly)
        sq = _poly_mul_mod(sq, sq, gen_poly)
        k >>= 1
    roots = roots_cubic(gen_poly)
    imag = [r for r in roots if r.root_box.im.lo > 0]
    if not imag:
        raise ContractError(f"{gen_poly} has no imaginary root")
    xi = imag[0].root_box
    xi_sq = xi * xi
    box = (
        ComplexBox.exact(acc[0])
        + ComplexBox(Interval.exact(acc[1]), Interval.exact(0)) * xi
        + ComplexBox(Interval.exact(acc[2]), Interval.exact(0)) * xi_sq
    )
    value = AlgebraicNumber(_charpoly_of_coords(acc, gen_poly), box, coords=acc)
    return PowerElement(gen_poly, m, acc, value)


def power_basis_product(a: PowerElement, b: PowerElement) -> tuple[Fraction, Fraction, Fraction]:
    """Exact product of two power-basis elements over the same generator."""
    if a.generator != b.generator:
        raise ContractError("elements live over different generators")
    return _poly_mul_mod(a.coords, b.coords, a.generator)


# ---------------------------------------------------------------------------
# Pell pairs and the candidate families
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PellSolution:
    r: int
    s: int
    sign: int

    def __post_init__(self):
        if self.r * self.r - 2 * self.s * self.s != self.sign or self.sign not in (1, -1):
            raise ContractError(f"({self.r}, {self.s}) does not solve r^2 - 2 s^2 = +-1")


def pell_solutions(s_bound: int) -> list[PellSolution]:
    """All (r, s) with r^2 - 2 s^2 = +-1 and |s| <= s_bound.

    Generated by the orbit (r, s) -> (r + 2s, r + s) from (1, 0) and (1, 1),
    closed under both sign flips; complete and duplicate-free, ordered by
    (s, r).
    """
    if s_bound < 0:
        raise ContractError("s_bound must be >= 0")
    seen: set[tuple[int, int]] = set()
    for seed in ((1, 0), (1, 1)):
        r, s = seed
        while abs(s) <= s_bound:
            for sr in (1, -1):
                for ss in (1, -1):
                    seen.add((sr * r, ss * s))
            r, s = r + 2 * s, r + s
    return sorted(PellSolution(r, s, r * r - 2 * s * s) for (r, s) in seen)


def candidate_family(r: int, s: int, variant: int) -> IntPolynomial:
    """The two cubic families attached to a Pell pair.

    variant 0: X^3 + (s-2) X^2 - (r+s+2) X + (r+4)
    variant 2: X^3 + s X^2 - (r+s+2) X + r
    """
    if r * r - 2 * s * s not in (1, -1):
        raise ContractError(f"({r}, {s}) does not solve r^2 - 2 s^2 = +-1")
    if variant == 0:
        return IntPolynomial.of(1, s - 2, -(r + s + 2), r + 4)
    if variant == 2:
        return IntPolynomial.of(1, s, -(r + s + 2), r)
    raise ContractError(f"variant must be 0 or 2, got {variant}")


def scaled_discriminant(x: Interval, y: Interval) -> Interval:
    """The discriminant-over-b^4 function used in the large-|s| rejection bound.

    Two algebraically equal closed forms are evaluated and the tighter
    enclosure returned:
        (1+y)^2 + (4/x)(1+y)^3 - 4y - (27/x^2) y^2 - (18/x) y (1+y)
        (y-1)^2 - (4/x)(1+y)(y-1/2)(2-y) - (27/x^2) y^2
    """
    if x.contains(0):
        raise ContractError("x must not contain 0")
    one = Interval.exact(1)
    y1 = one + y
    inv_x = one / x
    inv_x2 = inv_x.sqr()
    f1 = (
        y1.sqr()
        + inv_x * 4 * y1 * y1 * y1
        - y * 4
        - inv_x2 * 27 * y.sqr()
        - inv_x * 18 * y * y1
    )
    f2 = (
        (y - 1).sqr()
        - inv_x * 4 * y1 * (y - Fraction(1, 2)) * (Interval.exact(2) - y)
        - inv_x2 * 27 * y.sqr()
    )
    inter = f1.intersect(f2)
    if inter is None:
        raise InconclusiveError("the two closed forms produced disjoint enclosures")
    return f1 if f1.width() <= f2.width() else f2


def discriminant_minorant(y: Interval) -> Interval:
    """The cubic lower bound y^3 + 15.4 y^2 - 35.5 y + 18 for the scaled discriminant at x = 68."""
    return (
        y * y * y
        + y.sqr() * Fraction(154, 10)
        - y * Fraction(355, 10)
        + Interval.exact(18)
    )


# ---------------------------------------------------------------------------
# the candidate survivor scan
# ---------------------------------------------------------------------------

#: The eighteen Pell pairs the source enumeration lists for |s| <= 29.  The
#: complete solution set also contains (+-1, +-1); the scan records both.
CLAIMED_PELL_PAIRS: frozenset[tuple[int, int]] = frozenset(
    (sr * r, ss * s)
    for (r, s) in ((1, 0), (3, 2), (7, 5), (17, 12), (41, 29))
    for sr in (1, -1)
    for ss in (1, -1)
)

#: Survivor names as listed in prose (note the duplicated (-3, 2, 0) entry).
CLAIMED_SURVIVOR_NAMES: tuple[tuple[int, int, int], ...] = (
    (-1, 0, 0),
    (-3, 2, 0),
    (7, 5, 0),
    (-1, 0, 2),
    (-3, 2, 0),
    (-3, -2, 0),
    (-7, -5, 2),
)

#: The printed root table: (candidate name, signed Re literal, Im literal).
CLAIMED_ROOT_TABLE: tuple[tuple[tuple[int, int, int], str, str], ...] = (
    ((-1, 0, 0), "-1.573...", "0.368..."),
    ((-3, 2, 0), "-0.662...", "0.562..."),
    ((7, 5, 0), "1.380...", "0.054..."),
    ((-1, 0, 2), "-0.662...", "0.562..."),
    ((-3, 2, 2), "-1.539...", "0.368..."),
    ((-3, -2, 2), "0.303...", "1.435..."),
    ((-7, -5, 2), "1.784...", "1.307..."),
)


@dataclass(frozen=True)
class CandidateRecord:
    r: int
    s: int
    variant: int
    poly: IntPolynomial
    discriminant: int
    discriminant_printed_form: int
    claimed: bool
    complex_pair: Optional[ComplexBox]

    @property
    def name(self) -> tuple[int, int, int]:
        return (self.r, self.s, self.variant)

    @property
    def survivor(self) -> bool:
        return self.discriminant < 0

    def to_json(self) -> dict:
        rec = {
            "candidate": self.poly.bracket_text(),
            "r": self.r,
            "s": self.s,
            "variant": self.variant,
            "discriminant": self.discriminant,
            "verdict": "survivor" if self.survivor else "positive-discriminant",
        }
        if self.complex_pair is not None:
            rec["roots"] = {
                "re": self.complex_pair.re.to_decimal_dict(),
                "im": self.complex_pair.im.to_decimal_dict(),
            }
        return rec


@dataclass(frozen=True)
class SurvivorScan:
    """Exact discriminant scan over the Pell candidate families for |s| <= 29."""

    records: tuple[CandidateRecord, ...]

    @property
    def survivors(self) -> tuple[CandidateRecord, ...]:
        return tuple(r for r in self.records if r.survivor)

    @property
    def claimed_records(self) -> tuple[CandidateRecord, ...]:
        return tuple(r for r in self.records if r.claimed)

    @property
    def claimed_survivors(self) -> tuple[CandidateRecord, ...]:
        return tuple(r for r in self.records if r.claimed and r.survivor)

    @property
    def positive_count_claimed(self) -> int:
        return sum(1 for r in self.claimed_records if r.discriminant > 0)

    @property
    def positive_count_all(self) -> int:
        return sum(1 for r in self.records if r.discriminant > 0)

    @property
    def missing_pell_pairs(self) -> tuple[tuple[int, int], ...]:
        all_pairs = {(r.r, r.s) for r in self.records}
        return tuple(sorted(all_pairs - CLAIMED_PELL_PAIRS))

    def record(self, name: tuple[int, int, int]) -> CandidateRecord:
        for rec in self.records:
            if rec.name == name:
                return rec
        raise KeyError(name)

    def printed_formula_sign_mismatches(self) -> tuple[tuple[int, int, int], ...]:
        """Candidates where the four-term discriminant variant changes sign."""
        out = []
        for rec in self.records:
            if (rec.discriminant > 0) != (rec.discriminant_printed_form > 0):
                out.append(rec.name)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "candidates": [r.to_json() for r in self.records],
            "counts": {
                "candidates_listed": len(self.claimed_records),
                "candidates_complete": len(self.records),
                "positive_listed": self.positive_count_claimed,
                "positive_complete": self.positive_count_all,
                "survivors_listed": len(self.claimed_survivors),
                "survivors_complete": len(self.survivors),
            },
            "pell_pairs_missing_from_listing": [list(p) for p in self.missing_pell_pairs],
            "printed_discriminant_form_sign_mismatches": [
                list(n) for n in self.printed_formula_sign_mismatches()
            ],
        }


def survivor_scan(s_bound: int = 29) -> SurvivorScan:
    """Build every candidate over the complete Pell pairs, scan discriminants,
    and attach certified complex-pair boxes to the survivors."""
    recs: list[CandidateRecord] = []
    for sol in pell_solutions(s_bound):
        for variant in (0, 2):
            poly = candidate_family(sol.r, sol.s, variant)
            disc = discriminant_cubic(poly)
            pair: Optional[ComplexBox] = None
            if disc < 0:
                roots = roots_cubic(poly)
                pair = next(r.root_box for r in roots if r.root_box.im.lo > 0)
            recs.append(
                CandidateRecord(
                    r=sol.r,
                    s=sol.s,
                    variant=variant,
                    poly=poly,
                    discriminant=disc,
                    discriminant_printed_form=discriminant_cubic_printed_form(poly),
                    claimed=(sol.r, sol.s) in CLAIMED_PELL_PAIRS,
                    complex_pair=pair,
                )
            )
    recs.sort(key=lambda rec: (rec.s, rec.r, rec.variant))
    return SurvivorScan(tuple(recs))


# ---------------------------------------------------------------------------
# bounded enumeration of non-nifty polynomials
# ---------------------------------------------------------------------------


def enumerate_nonnifty(degree: int, height: int) -> list[tuple[IntPolynomial, NiftyVerdict]]:
    """All monic irreducible polynomials of the given degree with coefficients
    in [-height, height] whose roots are non-nifty, in lexicographic order."""
    if degree not in (2, 3):
        raise ContractError("degree must be 2 or 3")
    if height < 0:
        raise ContractError("height must be >= 0")
    span = range(-height, height + 1)
    out: list[tuple[IntPolynomial, NiftyVerdict]] = []

    def consider(coeffs: tuple[int, ...]):
        f = IntPolynomial(coeffs)
        if not f.is_irreducible():
            return
        v = classify_nifty(f)
        if v.verdict is Verdict.NON_NIFTY:
            out.append((f, v))

    if degree == 2:
        for b in span:
            for c in span:
                consider((1, b, c))
    else:
        for b in span:
            for c in span:
                for d in span:
                    consider((1, b, c, d))
    return out


# ---------------------------------------------------------------------------
# unit groups of imaginary quadratic fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadUnit:
    """The unit a + b * sqrt(-d) of the ring of integers of Q(sqrt(-d))."""

    a: Fraction
    b: Fraction
    d: int

    @property
    def im_squared(self) -> Fraction:
        return self.b * self.b * self.d

    @property
    def is_real(self) -> bool:
        return self.b == 0

    def im_interval(self) -> Interval:
        return Interval.exact(self.b) * sqrt(Interval.exact(self.d))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt(-{self.d})"


def _is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def imag_quadratic_unit_facts(d: int) -> list[QuadUnit]:
    """The unit group of the ring of integers of Q(sqrt(-d)), by norm scan.

    For d = 3 mod 4 the ring is Z[(1 + sqrt(-d))/2] and units solve
    x^2 + d y^2 = 4 over integers x = y mod 2; otherwise the ring is
    Z[sqrt(-d)] and units solve x^2 + d y^2 = 1.
    """
    if not _is_squarefree(d):
        raise ContractError(f"{d} is not squarefree")
    units: list[QuadUnit] = []
    if d % 4 == 3:
        for x in range(-2, 3):
            for y in range(-2, 3):
                if (x - y) % 2 == 0 and x * x + d * y * y == 4:
                    units.append(QuadUnit(Fraction(x, 2), Fraction(y, 2), d))
    else:
        for x in range(-1, 2):
            for y in range(-1, 2):
                if x * x + d * y * y == 1:
                    units.append(QuadUnit(Fraction(x), Fraction(y), d))
    return sorted(units, key=lambda u: (u.a, u.b))
