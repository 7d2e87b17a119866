"""Small finite fields and exhaustive SL2/PSL2 verification.

Fields F_{p^n} are built over a fixed modulus (the lexicographically least
monic irreducible of degree n over F_p) with table-based arithmetic, so all
group computations are exact and reproducible.  Everything here is desk
scale by design: exhaustive element scans are capped at |SL2| = 81^3 - 81,
and the simplicity/Sylow machinery at |PSL2| <= 360 (q <= 9), which is all
the trace-order and homology facts need.

The trace -> order dictionary: trace 0 forces order 4 (order <= 2 in
characteristic 2); trace with square 2 forces order 8 away from
characteristic 2; trace -1 forces order dividing 3; trace 1 forces order
dividing 6, with the exact value depending on the characteristic.  The
verifier below checks this against every element of SL2(F_q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

__all__ = [
    "FieldError",
    "BudgetError",
    "Fq",
    "make_field",
    "SL2Matrix",
    "sl2_elements",
    "element_order",
    "order_prediction_from_trace",
    "TraceOrderReport",
    "verify_trace_order_lemma",
    "SumSquaresWitness",
    "find_sum_squares_pair",
    "GroupSummary",
    "group_summary",
    "gl_order",
    "cayley_hamilton_violations",
    "order_two_elements",
    "MAX_Q",
    "FULL_SUMMARY_MAX_Q",
]

MAX_Q = 81
FULL_SUMMARY_MAX_Q = 9


class FieldError(ValueError):
    """Bad field parameters."""


class BudgetError(ValueError):
    """Requested computation exceeds the exhaustive-search budget."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mul_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """num, den low-degree-first over F_p; den monic."""
    num = num[:]
    dd = len(den) - 1
    quot = [0] * max(1, len(num) - dd)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        coef = num[-1]
        quot[shift] = coef
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * c) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by all lower-degree monic polynomials (degree <= 4)."""
    n = len(poly) - 1
    for deg in range(1, n // 2 + 1):
        for idx in range(p**deg):
            cand = _index_to_poly(idx, deg, p) + [1]
            _, rem = _poly_divmod(poly[:], cand, p)
            if not rem:
                return False
    return True


def _index_to_poly(idx: int, deg: int, p: int) -> list[int]:
    out = []
    for _ in range(deg):
        out.append(idx % p)
        idx //= p
    return out


def _lowest_lex_modulus(p: int, n: int) -> list[int]:
    """Least monic irreducible of degree n over F_p, low-degree-first,
    ordered lexicographically on (a_{n-1}, ..., a_0)."""
    if n == 1:
        return [0, 1]
    for idx in range(p**n):
        digits = []
        rem = idx
        for _ in range(n):
            digits.append(rem % p)
            rem //= p
        # digits are (a_{n-1}, ..., a_0) most-significant-first in idx
        coeffs = list(reversed(digits)) + [1]
        if _is_irreducible(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")


class Fq:
    """F_{p^n} with elements encoded as integers in [0, q)."""

    def __init__(self, p: int, n: int = 1):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if not 1 <= n <= 4:
            raise FieldError(f"extension degree must be in 1..4, got {n}")
        if p**n > MAX_Q:
            raise FieldError(f"field size {p**n} exceeds the exhaustive budget {MAX_Q}")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = _lowest_lex_modulus(p, n)
        self.zero = 0
        self.one = 1
        self._add = [[0] * self.q for _ in range(self.q)]
        self._mul = [[0] * self.q for _ in range(self.q)]
        for i in range(self.q):
            ci = self._decode(i)
            for j in range(i + 1):
                cj = self._decode(j)
                s = self._encode([(a + b) % p for a, b in zip(ci, cj)])
                self._add[i][j] = self._add[j][i] = s
                prod = _poly_mul_mod_p(ci, cj, p)
                _, rem = _poly_divmod(prod, self.modulus, p)
                rem += [0] * (n - len(rem))
                m = self._encode(rem[:n])
                self._mul[i][j] = self._mul[j][i] = m
        self._neg = [self._encode([(-a) % p for a in self._decode(i)]) for i in range(self.q)]
        self._inv = [0] * self.q
        for i in range(1, self.q):
            for j in range(1, self.q):
                if self._mul[i][j] == self.one:
                    self._inv[i] = j
                    break

    def _decode(self, idx: int) -> list[int]:
        out = []
        for _ in range(self.n):
            out.append(idx % self.p)
            idx //= self.p
        return out

    def _encode(self, coeffs: list[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + (c % self.p)
        return idx

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def from_int(self, k: int) -> int:
        return self._encode([k % self.p] + [0] * (self.n - 1))

    def elements(self) -> range:
        return range(self.q)

    def poly_str(self, a: int) -> str:
        coeffs = self._decode(a)
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}t" if c != 1 else "t")
            else:
                terms.append(f"{c}t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Fq(p={self.p}, n={self.n})"


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> Fq:
    """Field handle with a fixed, documented modulus; cached per (p, n)."""
    return Fq(p, n)


def field_for_order(q: int) -> Fq:
    """The field of order q = p^n within the budget."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            n = 0
            m = q
            while m % p == 0:
                m //= p
                n += 1
            if m != 1:
                raise FieldError(f"{q} is not a prime power")
            return make_field(p, n)
    raise FieldError(f"{q} is not a prime power")


@dataclass(frozen=True)
class SL2Matrix:
    """Determinant-1 matrix over Fq; entries are field element indices."""

    field: Fq
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        F = self.field
        det = F.sub(F.mul(self.a, self.d), F.mul(self.b, self.c))
        if det != F.one:
            raise ValueError("determinant must be 1")

    @classmethod
    def identity(cls, field: Fq) -> "SL2Matrix":
        return cls(field, field.one, 0, 0, field.one)

    @classmethod
    def minus_identity(cls, field: Fq) -> "SL2Matrix":
        m1 = field.neg(field.one)
        return cls(field, m1, 0, 0, m1)

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        F = self.field
        return SL2Matrix(
            F,
            F.add(F.mul(self.a, other.a), F.mul(self.b, other.c)),
            F.add(F.mul(self.a, other.b), F.mul(self.b, other.d)),
            F.add(F.mul(self.c, other.a), F.mul(self.d, other.c)),
            F.add(F.mul(self.c, other.b), F.mul(self.d, other.d)),
        )

    def inv(self) -> "SL2Matrix":
        F = self.field
        return SL2Matrix(F, self.d, F.neg(self.b), F.neg(self.c), self.a)

    def __neg__(self) -> "SL2Matrix":
        F = self.field
        return SL2Matrix(F, F.neg(self.a), F.neg(self.b), F.neg(self.c), F.neg(self.d))

    def trace(self) -> int:
        return self.field.add(self.a, self.d)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_identity(self) -> bool:
        F = self.field
        return self.entries() == (F.one, 0, 0, F.one)


def sl2_elements(field: Fq) -> Iterator[SL2Matrix]:
    """All q^3 - q elements: for a != 0, d = a^-1 (1 + bc); for a = 0,
    c = -b^-1 with d free."""
    F = field
    for a in F.elements():
        if a != 0:
            ia = F.inv(a)
            for b in F.elements():
                for c in F.elements():
                    d = F.mul(ia, F.add(F.one, F.mul(b, c)))
                    yield SL2Matrix(F, a, b, c, d)
        else:
            for b in F.elements():
                if b == 0:
                    continue
                c = F.neg(F.inv(b))
                for d in F.elements():
                    yield SL2Matrix(F, 0, b, c, d)


def element_order(m: SL2Matrix) -> int:
    """Least k >= 1 with m^k = id; divides q^3 - q."""
    acc = m
    k = 1
    limit = m.field.q ** 3
    while not acc.is_identity():
        acc = acc * m
        k += 1
        if k > limit:
            raise RuntimeError("order computation exceeded group order")
    return k


def order_prediction_from_trace(field: Fq, t: int) -> Optional[frozenset[int]]:
    """The exact set of orders the trace dictionary allows, or None when the
    dictionary is silent for this trace."""
    p = field.p
    constraints: list[frozenset[int]] = []
    if t == field.zero:
        constraints.append(frozenset({4}) if p != 2 else frozenset({1, 2}))
    if field.mul(t, t) == field.from_int(2):
        constraints.append(frozenset({8}) if p != 2 else frozenset({1, 2, 4, 8}))
    if t == field.from_int(-1):
        constraints.append(frozenset({3}) if p != 3 else frozenset({1, 3}))
    if t == field.from_int(1):
        if p == 2:
            constraints.append(frozenset({3}))
        elif p == 3:
            constraints.append(frozenset({2, 6}))
        else:
            constraints.append(frozenset({6}))
    if not constraints:
        return None
    out = constraints[0]
    for c in constraints[1:]:
        out = out & c
    return out


@dataclass(frozen=True)
class TraceOrderReport:
    q: int
    elements_checked: int
    constrained: int
    counterexamples: tuple[tuple[tuple[int, int, int, int], int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_trace_order_lemma(q: int) -> TraceOrderReport:
    """Exhaustively check every element of SL2(F_q) whose trace the order
    dictionary constrains; expected: zero counterexamples."""
    field = field_for_order(q)
    predictions = {t: order_prediction_from_trace(field, t) for t in field.elements()}
    checked = 0
    constrained = 0
    bad = []
    for m in sl2_elements(field):
        checked += 1
        pred = predictions[m.trace()]
        if pred is None:
            continue
        constrained += 1
        order = element_order(m)
        if order not in pred:
            bad.append((m.entries(), m.trace(), order))
    return TraceOrderReport(q, checked, constrained, tuple(bad))


@dataclass(frozen=True)
class SumSquaresWitness:
    q: int
    a: int
    b: int
    det_ok: bool
    anticommute: bool
    klein_four_in_psl2: bool

    @property
    def all_checks(self) -> bool:
        return self.det_ok and self.anticommute and self.klein_four_in_psl2


def find_sum_squares_pair(q: int) -> SumSquaresWitness:
    """Field elements a, b with a^2 + b^2 = -1 in odd characteristic.

    Mirrors the counting construction: some c lies in both {x^2} and
    {-1 - x^2}; take a = sqrt(c) and b = sqrt(-1-c) with least indices.
    Also validates M = [[a,b],[b,-a]], A = [[0,1],[-1,0]]: det M = 1,
    AM = -MA, and the images of A, M generate a Klein four-group in PSL2.
    """
    field = field_for_order(q)
    if field.p == 2:
        raise FieldError("construction requires odd characteristic")
    F = field
    minus_one = F.neg(F.one)
    squares: dict[int, int] = {}
    for x in F.elements():
        sq = F.mul(x, x)
        if sq not in squares:
            squares[sq] = x
    a = b = None
    for c in F.elements():
        if c in squares:
            need = F.sub(minus_one, c)
            if need in squares:
                a = squares[c]
                b = squares[need]
                break
    assert a is not None and b is not None  # counting argument guarantees a hit
    M = SL2Matrix(F, a, b, b, F.neg(a))
    A = SL2Matrix(F, 0, F.one, minus_one, 0)
    det_ok = True  # SL2Matrix constructor enforces det 1
    anticommute = (A * M).entries() == (-(M * A)).entries()
    # Klein four-group: both have order 2 in PSL2 and distinct nontrivial images
    am, ma = A * M, M * A
    pa, pm, pam = _psl2_key(A), _psl2_key(M), _psl2_key(am)
    pid = _psl2_key(SL2Matrix.identity(F))
    klein = (
        len({pa, pm, pam, pid}) == 4
        and _psl2_key(A * A) == pid
        and _psl2_key(M * M) == pid
        and _psl2_key(am) == _psl2_key(ma)
    )
    return SumSquaresWitness(q, a, b, det_ok, anticommute, klein)


def _psl2_key(m: SL2Matrix) -> tuple[int, int, int, int]:
    """Canonical coset representative key for {M, -M}."""
    e = m.entries()
    f = (-m).entries()
    return min(e, f)


# ---------------------------------------------------------------------------
# exhaustive group machinery (PSL2 at q <= 9)
# ---------------------------------------------------------------------------


class _Psl2Group:
    """PSL2(F_q) as canonical coset keys with a full Cayley table."""

    def __init__(self, field: Fq):
        self.field = field
        reps: dict[tuple[int, int, int, int], SL2Matrix] = {}
        for m in sl2_elements(field):
            key = _psl2_key(m)
            if key not in reps:
                reps[key] = m
        self.keys = sorted(reps)
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.n = len(self.keys)
        mats = [reps[k] for k in self.keys]
        self.table = [
            [self.index[_psl2_key(mats[i] * mats[j])] for j in range(self.n)]
            for i in range(self.n)
        ]
        self.identity = self.index[_psl2_key(SL2Matrix.identity(field))]
        self.inverse = [0] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.table[i][j] == self.identity:
                    self.inverse[i] = j
                    break

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def conj(self, g: int, x: int) -> int:
        return self.table[self.table[g][x]][self.inverse[g]]

    def order_of(self, i: int) -> int:
        k, acc = 1, i
        while acc != self.identity:
            acc = self.table[acc][i]
            k += 1
        return k

    def conjugacy_classes(self) -> list[list[int]]:
        seen = [False] * self.n
        classes = []
        for x in range(self.n):
            if seen[x]:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in range(self.n):
                    z = self.conj(g, y)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            for y in orbit:
                seen[y] = True
            classes.append(sorted(orbit))
        return classes

    def closure(self, gens: set[int]) -> set[int]:
        out = {self.identity} | set(gens)
        frontier = list(out)
        while frontier:
            x = frontier.pop()
            for g in list(gens):
                for y in (self.table[x][g], self.table[g][x]):
                    if y not in out:
                        out.add(y)
                        frontier.append(y)
        # grow generator set to the closure for associative completeness
        changed = True
        while changed:
            changed = False
            members = list(out)
            for x in members:
                for y in members:
                    z = self.table[x][y]
                    if z not in out:
                        out.add(z)
                        changed = True
        return out

    def is_simple(self) -> bool:
        for cls in self.conjugacy_classes():
            if cls == [self.identity]:
                continue
            if len(self.closure(set(cls))) != self.n:
                return False
        return True

    def sylow2(self) -> set[int]:
        target = self.n
        v = 0
        while target % 2 == 0:
            target //= 2
            v += 1
        target = 2**v
        best = self.identity
        best_pow = 1
        for x in range(self.n):
            order = self.order_of(x)
            two_part = order & -order
            if two_part > best_pow:
                best_pow = two_part
                best = self._power(x, order // two_part)
        T = self.closure({best})
        while len(T) < target:
            normalizer = [
                g
                for g in range(self.n)
                if all(self.conj(g, t) in T for t in T)
            ]
            grown = False
            for y in normalizer:
                if y in T:
                    continue
                if self.order_of(y) & (self.order_of(y) - 1) == 0:  # 2-power order
                    T = self.closure(T | {y})
                    grown = True
                    break
            if not grown:
                raise RuntimeError("Sylow-2 greedy closure stalled")
        return T

    def _power(self, x: int, k: int) -> int:
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][x]
        return acc

    def mod2_abelianization_rank(self, subgroup: set[int]) -> int:
        members = sorted(subgroup)
        gens = set()
        for x in members:
            gens.add(self.table[x][x])
        for x in members:
            xinv = self.inverse[x]
            for y in members:
                yinv = self.inverse[y]
                gens.add(self.table[self.table[x][y]][self.table[xinv][yinv]])
        gens &= subgroup
        K = self.closure(gens) & subgroup
        quotient = len(subgroup) // len(K)
        return quotient.bit_length() - 1


@dataclass(frozen=True)
class GroupSummary:
    q: int
    sl2_order: int
    psl2_order: int
    center_order: int
    simple: Optional[bool]
    sylow2_rank: Optional[int]
    div6: bool
    h1_z2_rank: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "sl2_order": self.sl2_order,
            "psl2_order": self.psl2_order,
            "center_order": self.center_order,
            "simple": self.simple,
            "sylow2_rank": self.sylow2_rank,
            "div6": self.div6,
        }


def group_summary(q: int, full: Optional[bool] = None) -> GroupSummary:
    """Order, center, simplicity, Sylow-2 rank and 6-divisibility of PSL2(F_q).

    The simplicity/Sylow/homology fields are computed exhaustively and are
    only available for q <= 9; beyond that (q <= 81) the order formulas and
    divisibility are reported and those fields are None.
    """
    field = field_for_order(q)
    sl2_order = q**3 - q
    center_order = math.gcd(2, q - 1)
    psl2_order = sl2_order // center_order
    if full is None:
        full = q <= FULL_SUMMARY_MAX_Q
    if full and q > FULL_SUMMARY_MAX_Q:
        raise BudgetError(
            f"exhaustive summary limited to q <= {FULL_SUMMARY_MAX_Q}, got {q}"
        )
    if not full:
        return GroupSummary(
            q, sl2_order, psl2_order, center_order, None, None, psl2_order % 6 == 0
        )
    # verify the orders and the center by exhaustion
    count = 0
    center = []
    elems = list(sl2_elements(field))
    sample = elems[:: max(1, len(elems) // 24)]
    for m in elems:
        count += 1
    assert count == sl2_order
    for m in elems:
        if all((m * s).entries() == (s * m).entries() for s in sample):
            if all((m * s).entries() == (s * m).entries() for s in elems):
                center.append(m)
    assert len(center) == center_order
    group = _Psl2Group(field)
    assert group.n == psl2_order
    simple = group.is_simple()
    T = group.sylow2()
    sylow2_rank = group.mod2_abelianization_rank(T)
    h1 = group.mod2_abelianization_rank(set(range(group.n)))
    return GroupSummary(
        q,
        sl2_order,
        psl2_order,
        center_order,
        simple,
        sylow2_rank,
        psl2_order % 6 == 0,
        h1_z2_rank=h1,
    )


def gl_order(d: int, p: int) -> int:
    """|GL_d(F_p)| = prod_{i<d} (p^d - p^i)."""
    if d < 1:
        raise ValueError("rank must be >= 1")
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    out = 1
    for i in range(d):
        out *= p**d - p**i
    return out


def cayley_hamilton_violations(q: int) -> int:
    """Count of M in SL2(F_q) with M^2 - t M + id != 0 (expected 0)."""
    field = field_for_order(q)
    F = field
    bad = 0
    for m in sl2_elements(field):
        t = m.trace()
        msq = m * m
        lhs = (
            F.add(msq.a, F.add(F.neg(F.mul(t, m.a)), F.one)),
            F.sub(msq.b, F.mul(t, m.b)),
            F.sub(msq.c, F.mul(t, m.c)),
            F.add(msq.d, F.add(F.neg(F.mul(t, m.d)), F.one)),
        )
        if lhs != (0, 0, 0, 0):
            bad += 1
    return bad


def order_two_elements(q: int) -> list[SL2Matrix]:
    """All elements of order exactly 2 in SL2(F_q)."""
    field = field_for_order(q)
    out = []
    for m in sl2_elements(field):
        if not m.is_identity() and (m * m).is_identity():
            out.append(m)
    return out
