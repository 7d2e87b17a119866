"""Independent oracles shared by the unit and acceptance suites.

These deliberately avoid the code paths they check: norm witnesses are
re-derived from certified root boxes by interval products, and the
trace-doubling constant terms are re-derived from the even/odd norm
identity rather than the coefficient recursion.
"""

from fractions import Fraction

from margulis.numfield import (
    IntPolynomial,
    discriminant_cubic,
    norm_witnesses,
    roots_cubic,
)
from margulis.rigor import Interval


def witness_enclosures(f: IntPolynomial):
    """Intervals enclosing |N(tau - c)| for c in {0, 1, -1} and |N(tau^2 - 2)|,
    computed purely from certified root boxes."""
    roots = roots_cubic(f)
    disc = discriminant_cubic(f)

    def prod_abs_shift(c: int) -> Interval:
        acc = Interval.exact(1)
        if disc > 0:
            for r in roots:
                acc = acc * abs(r.root_box.re - c)
        else:
            sigma = roots[0].root_box.re
            u = roots[1].root_box.re
            v = roots[1].root_box.im
            acc = abs(sigma - c) * ((u - c).sqr() + v.sqr())
        return acc

    def prod_abs_sq2() -> Interval:
        acc = Interval.exact(1)
        if disc > 0:
            for r in roots:
                acc = acc * abs(r.root_box.re.sqr() - 2)
        else:
            sigma = roots[0].root_box.re
            u = roots[1].root_box.re
            v = roots[1].root_box.im
            real_part = u.sqr() - v.sqr() - 2
            imag_part = u * v * 2
            acc = abs(sigma.sqr() - 2) * (real_part.sqr() + imag_part.sqr())
        return acc

    return (prod_abs_shift(0), prod_abs_shift(1), prod_abs_shift(-1), prod_abs_sq2())


def dseq_constant_oracle(f: IntPolynomial) -> int:
    """Constant term of the next trace-doubling iterate via the norm identity
    d_next = -(P(2)^2 - 2 Q(2)^2), independent of the coefficient recursion."""
    even, odd = f.even_odd_split()

    def ev(cs, y):
        acc = 0
        for c in cs:
            acc = acc * y + c
        return acc

    p2, q2 = ev(even, 2), ev(odd, 2)
    return -(p2 * p2 - 2 * q2 * q2)


def pell_brute_force(s_bound: int) -> set[tuple[int, int]]:
    """Exhaustive scan of r^2 - 2 s^2 = +-1 with |s| <= s_bound."""
    out = set()
    for s in range(-s_bound, s_bound + 1):
        for target in (1, -1):
            rr = 2 * s * s + target
            if rr < 0:
                continue
            r = int(rr**0.5)
            for cand in (r - 1, r, r + 1, r + 2):
                if cand >= 0 and cand * cand == rr:
                    out.add((cand, s))
                    out.add((-cand, s))
    return out


def witnesses_match_enclosures(f: IntPolynomial) -> bool:
    """True when every integer witness lies inside its interval oracle."""
    w = norm_witnesses(f).as_tuple()
    encl = witness_enclosures(f)
    return all(e.contains(Fraction(n)) for n, e in zip(w, encl))
