"""Claim runner with precision escalation, plus JSON/markdown reports.

Each claim is evaluated at the starting precision; an INCONCLUSIVE
comparison (or an InconclusiveError raised mid-computation) doubles the
working precision up to the cap and retries.  Results are ordered by id and
contain no timing or other nondeterministic fields, so two runs with the
same flags emit byte-identical documents.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import __version__
from .claims import (
    Claim,
    ExpectBand,
    ExpectDecimal,
    ExpectEncloses,
    ExpectInt,
    ExpectPositive,
    Mode,
    build_registry,
    section_prefixes,
)
from .rigor import (
    DEFAULT_PRECISION,
    MAX_PRECISION,
    InconclusiveError,
    Interval,
    MatchVerdict,
    matches_decimal,
    precision,
)

__all__ = [
    "Status",
    "ClaimResult",
    "UnknownPrefixError",
    "run_claims",
    "emit_report",
    "exit_status",
]


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    DISCREPANCY_NOTED = "discrepancy-noted"


@dataclass(frozen=True)
class ClaimResult:
    id: str
    description: str
    paper_location: str
    computed: Union[Interval, int, None]
    expected_text: str
    status: Status
    mode: Mode
    precision_used: int
    elapsed: float

    def computed_json(self):
        if self.computed is None:
            return None
        if isinstance(self.computed, int):
            return {"int": str(self.computed)}
        return self.computed.to_decimal_dict()


class UnknownPrefixError(ValueError):
    def __init__(self, prefix: str, valid: Sequence[str]):
        self.prefix = prefix
        self.valid = list(valid)
        super().__init__(
            f"no claims match prefix {prefix!r}; valid prefixes: {', '.join(valid)}"
        )


def _compare(value: Union[Interval, int], expected) -> MatchVerdict:
    if isinstance(expected, ExpectInt):
        if not isinstance(value, int):
            raise TypeError("integer claim computed a non-integer")
        return MatchVerdict.PASS if value == expected.value else MatchVerdict.FAIL
    if not isinstance(value, Interval):
        raise TypeError("interval claim computed a non-interval")
    if isinstance(expected, ExpectDecimal):
        return matches_decimal(value, expected.literal)
    if isinstance(expected, ExpectEncloses):
        if not value.contains(expected.value):
            return MatchVerdict.FAIL
        if value.hi_fraction - value.lo_fraction <= expected.max_width:
            return MatchVerdict.PASS
        return MatchVerdict.INCONCLUSIVE
    if isinstance(expected, ExpectBand):
        lo, hi = expected.lo, expected.hi
        if value.lo_fraction >= lo and value.hi_fraction <= hi:
            return MatchVerdict.PASS
        if value.hi_fraction < lo or value.lo_fraction > hi:
            return MatchVerdict.FAIL
        return MatchVerdict.INCONCLUSIVE
    if isinstance(expected, ExpectPositive):
        if value.lo > 0:
            return MatchVerdict.PASS
        if value.hi <= 0:
            return MatchVerdict.FAIL
        return MatchVerdict.INCONCLUSIVE
    raise TypeError(f"unknown expectation {expected!r}")


def run_claims(
    filter_prefix: Optional[str] = None,
    start_precision: int = DEFAULT_PRECISION,
    precision_cap: int = MAX_PRECISION,
    registry: Optional[list[Claim]] = None,
) -> list[ClaimResult]:
    """Evaluate the selected claims with precision escalation."""
    if registry is None:
        registry = build_registry()
    selected = registry
    if filter_prefix is not None:
        selected = [c for c in registry if c.id.startswith(filter_prefix)]
        if registry and not selected:
            raise UnknownPrefixError(filter_prefix, section_prefixes(registry))
    results = []
    for claim in sorted(selected, key=lambda c: c.id):
        results.append(_run_one(claim, start_precision, precision_cap))
    return results


def _run_one(claim: Claim, start_precision: int, precision_cap: int) -> ClaimResult:
    bits = start_precision
    t0 = time.monotonic()
    value: Union[Interval, int, None] = None
    verdict = MatchVerdict.INCONCLUSIVE
    while True:
        try:
            with precision(bits):
                value = claim.compute()
                verdict = _compare(value, claim.expected)
        except InconclusiveError:
            verdict = MatchVerdict.INCONCLUSIVE
            value = None
        if verdict is not MatchVerdict.INCONCLUSIVE or bits >= precision_cap:
            break
        bits = min(bits * 2, precision_cap)
    elapsed = time.monotonic() - t0
    if verdict is MatchVerdict.PASS:
        status = Status.PASS
    elif verdict is MatchVerdict.FAIL:
        status = (
            Status.FAIL if claim.mode is Mode.MUST_MATCH else Status.DISCREPANCY_NOTED
        )
    else:
        status = Status.INCONCLUSIVE
    return ClaimResult(
        id=claim.id,
        description=claim.description,
        paper_location=claim.paper_location,
        computed=value,
        expected_text=claim.expected.text(),
        status=status,
        mode=claim.mode,
        precision_used=bits,
        elapsed=elapsed,
    )


def exit_status(results: Sequence[ClaimResult]) -> int:
    """0 iff no MustMatch claim failed."""
    return 1 if any(r.status is Status.FAIL for r in results) else 0


def emit_report(
    results: Sequence[ClaimResult],
    fmt: str = "json",
    precision_bits: int = DEFAULT_PRECISION,
) -> str:
    if fmt == "json":
        return _emit_json(results, precision_bits)
    if fmt in ("md", "markdown"):
        return _emit_markdown(results, precision_bits)
    raise ValueError(f"unknown report format {fmt!r} (expected json or md)")


def _emit_json(results: Sequence[ClaimResult], precision_bits: int) -> str:
    doc = {
        "version": __version__,
        "precision_bits": precision_bits,
        "results": [
            {
                "id": r.id,
                "paper_location": r.paper_location,
                "computed": r.computed_json(),
                "expected": r.expected_text,
                "status": r.status.value,
            }
            for r in results
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _format_computed(r: ClaimResult) -> str:
    if r.computed is None:
        return "(undecided)"
    if isinstance(r.computed, int):
        return str(r.computed)
    d = r.computed.to_decimal_dict()
    return f"[{d['lo']}, {d['hi']}]"


def _emit_markdown(results: Sequence[ClaimResult], precision_bits: int) -> str:
    lines = [
        "# Claim verification report",
        "",
        f"toolkit version {__version__}, starting precision {precision_bits} bits",
        "",
    ]
    sections: dict[str, list[ClaimResult]] = {}
    for r in results:
        sections.setdefault(r.id.split(".", 1)[0], []).append(r)
    for name in sorted(sections):
        rows = sections[name]
        npass = sum(1 for r in rows if r.status is Status.PASS)
        lines.append(f"## {name} ({npass}/{len(rows)} pass)")
        lines.append("")
        lines.append("| claim | computed | expected | status |")
        lines.append("|---|---|---|---|")
        for r in rows:
            lines.append(
                f"| {r.id} | {_format_computed(r)} | {r.expected_text} | {r.status.value} |"
            )
        lines.append("")
    return "\n".join(lines)
