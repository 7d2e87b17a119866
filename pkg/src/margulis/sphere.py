"""Distance-sum bounds for points on the unit 2-sphere.

Points are stored as interval vectors, never as angle tables: the cosine of
the spherical distance is then a plain dot product, and the -n/2 lower bound
on the pairwise cosine sum is the Gram identity
sum_{i<j} <v_i, v_j> = (||sum v_i||^2 - n) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rigor import InconclusiveError, Interval, sqrt

__all__ = [
    "UNIT_NORM_TOLERANCE",
    "UnitVector3",
    "pairwise_cos_sum",
    "GoodTriple",
    "triple_candidates",
    "find_good_triple",
    "tetrahedron",
]

UNIT_NORM_TOLERANCE = Fraction(1, 10**12)


@dataclass(frozen=True)
class UnitVector3:
    """A point on S^2 with interval components; ||v||^2 must enclose 1."""

    x: Interval
    y: Interval
    z: Interval

    def __post_init__(self):
        nsq = self.norm_sq()
        lo = Fraction(1) - UNIT_NORM_TOLERANCE
        hi = Fraction(1) + UNIT_NORM_TOLERANCE
        if not (nsq.lo_fraction >= lo and nsq.hi_fraction <= hi):
            raise ValueError(f"not a unit vector within tolerance: |v|^2 = {nsq}")

    @classmethod
    def exact(cls, x, y, z) -> "UnitVector3":
        return cls(Interval.exact(x), Interval.exact(y), Interval.exact(z))

    @classmethod
    def normalized(cls, x, y, z) -> "UnitVector3":
        """Normalize a rational vector; the norm must be certified positive."""
        vx, vy, vz = Interval.exact(x), Interval.exact(y), Interval.exact(z)
        nsq = vx.sqr() + vy.sqr() + vz.sqr()
        if not nsq.is_positive():
            raise ValueError("cannot normalize a vector whose norm is not certified")
        n = sqrt(nsq)
        return cls(vx / n, vy / n, vz / n)

    def norm_sq(self) -> Interval:
        return self.x.sqr() + self.y.sqr() + self.z.sqr()

    def dot(self, other: "UnitVector3") -> Interval:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __neg__(self) -> "UnitVector3":
        return UnitVector3(-self.x, -self.y, -self.z)


def pairwise_cos_sum(points: Sequence[UnitVector3]) -> Interval:
    """sum_{i<j} cos d_s(Q_i, Q_j); always >= -n/2 by the Gram identity."""
    n = len(points)
    if n < 2:
        raise ValueError("need at least two points")
    acc = Interval.exact(0)
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc + points[i].dot(points[j])
    return acc


def gram_identity_value(points: Sequence[UnitVector3]) -> Interval:
    """(||sum v_i||^2 - n) / 2, the identity behind the -n/2 bound."""
    n = len(points)
    sx = Interval.exact(0)
    sy = Interval.exact(0)
    sz = Interval.exact(0)
    for p in points:
        sx, sy, sz = sx + p.x, sy + p.y, sz + p.z
    norm_sq = sx.sqr() + sy.sqr() + sz.sqr()
    return (norm_sq - n) * Fraction(1, 2)


@dataclass(frozen=True)
class GoodTriple:
    """Indices p, q, q' with the two-cosine value cos(p,q) + cos(p,q')."""

    p: int
    q: int
    q2: int
    value: Interval


def triple_candidates(points: Sequence[UnitVector3]) -> list[GoodTriple]:
    """All 12 (p, {q, q'}) candidates over four points, in lexicographic order."""
    if len(points) != 4:
        raise ValueError("exactly four points required")
    out = []
    for p in range(4):
        rest = [i for i in range(4) if i != p]
        for a in range(3):
            for b in range(a + 1, 3):
                q, q2 = rest[a], rest[b]
                value = points[p].dot(points[q]) + points[p].dot(points[q2])
                out.append(GoodTriple(p, q, q2, value))
    return out


def find_good_triple(points: Sequence[UnitVector3]) -> GoodTriple:
    """A triple whose two-cosine value is at least -2/3 (within the unit-norm
    tolerance), found by scanning all 12 candidates and returning the
    maximizer; ties break lexicographically on (p, q, q')."""
    cands = triple_candidates(points)
    best = cands[0]
    for cand in cands[1:]:
        if cand.value.lo > best.value.lo:
            best = cand
    floor = Fraction(-2, 3) - UNIT_NORM_TOLERANCE
    if best.value.lo_fraction < floor:
        err = InconclusiveError(
            f"maximizing triple ({best.p}, {best.q}, {best.q2}) not certified >= -2/3"
        )
        err.triple = best
        raise err
    return best


def tetrahedron() -> list[UnitVector3]:
    """Vertices of a regular tetrahedron: (±1, ±1, ±1)/sqrt(3), even sign flips."""
    signs = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return [UnitVector3.normalized(a, b, c) for a, b, c in signs]
