"""Run bounds against a polynomial, validate with the root oracle, and render
text/CSV/JSON reports; also evaluate the bundled fixtures.

Disk methods produce a single radius, rectangle methods four extents. CSV
keeps a fixed seven-column shape (method, variant, value, applicability,
oracle_max_modulus, verdict, margin) with the value cell empty for rectangles;
rectangle extents appear in the text and JSON renderings. Machine formats
render every number as a 12-significant-digit decimal string so that reports
round-trip byte-for-byte through a JSON parse.
"""

from __future__ import annotations

import io
import csv
import json
import math
from dataclasses import dataclass, replace

from . import classical
from .cartesian import (
    Rectangle,
    block_cartesian_radius,
    cartesian_disk,
    hermitian_rectangle,
    kittaneh_rectangle,
    mw_bound,
    partition_disk,
    partition_rectangle,
    unit_tail_disk,
)
from .classical import BoundResult
from .companion import build_block_companion, build_companion
from .errors import HypothesisViolatedError, NoConvergenceError
from .fixtures import DIVERGENT, EXACT, FIXTURES, Fixture, get_fixture
from .linalg import numerical_radius_sweep
from .polynomial import Polynomial, odd_reduce, parse_polynomial
from .roots import RootSet, find_roots, validate_bound, validate_rectangle

__all__ = [
    "CompareOptions",
    "ReportRow",
    "CompareReport",
    "FixtureCheck",
    "FixtureReport",
    "DISK_METHODS",
    "RECTANGLE_METHODS",
    "ALL_METHODS",
    "run_compare",
    "run_fixture",
    "run_all_fixtures",
    "format_compare_text",
    "format_compare_csv",
    "format_compare_json",
    "format_fixture_text",
    "format_fixture_json",
]

# method id -> (kind, needs even degree, minimum degree)
_REGISTRY: dict[str, tuple[str, bool, int]] = {
    "cauchy": ("disk", False, 1),
    "carmichael_mason": ("disk", False, 1),
    "montel": ("disk", False, 1),
    "fujii_kubo": ("disk", False, 1),
    "abdurakhmanov": ("disk", False, 2),
    "linden": ("disk", False, 2),
    "kittaneh_disk": ("disk", False, 3),
    "abu_omar_kittaneh": ("disk", False, 2),
    "al_dolat": ("disk", False, 2),
    "cartesian_disk": ("disk", True, 4),
    "block_cartesian": ("disk", True, 4),
    "partition_disk": ("disk", True, 4),
    "unit_tail_disk": ("disk", True, 4),
    "mw": ("disk", False, 2),
    "radius_sweep": ("disk", False, 2),
    "kittaneh_rectangle": ("rectangle", False, 3),
    "partition_rectangle": ("rectangle", True, 4),
    "hermitian_rectangle": ("rectangle", False, 2),
}

ALL_METHODS: tuple[str, ...] = tuple(_REGISTRY)
DISK_METHODS: tuple[str, ...] = tuple(m for m, (k, _, _) in _REGISTRY.items() if k == "disk")
RECTANGLE_METHODS: tuple[str, ...] = tuple(
    m for m, (k, _, _) in _REGISTRY.items() if k == "rectangle"
)


@dataclass(frozen=True)
class CompareOptions:
    methods: tuple[str, ...] | None = None  # None means every registered method
    linden_variant: str = "printed"
    kittaneh_variant: str = "printed"
    alpha: float = 0.5  # block_cartesian interpolation exponent
    theta_samples: int = 512  # radius_sweep resolution
    strict_mw: bool = False
    oracle: bool = True


@dataclass(frozen=True)
class ReportRow:
    method: str
    variant: str | None
    value: float | None
    applicability: str
    rectangle: Rectangle | None = None
    verdict: str | None = None
    margin: float | None = None
    rank: int | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class CompareReport:
    degree: int
    coefficients: tuple[complex, ...]  # monic, degree-descending
    rows: tuple[ReportRow, ...]
    oracle: RootSet | None = None
    oracle_error: str | None = None
    reduced: bool = False  # partition methods ran on the even quotient


def _run_one(method: str, p: Polynomial, opt: CompareOptions) -> tuple[object, tuple[str, ...]]:
    """Evaluate one method; returns (BoundResult | Rectangle, extra notes)."""
    if method == "linden":
        return classical.linden(p, opt.linden_variant), ()
    if method == "kittaneh_disk":
        return classical.kittaneh_disk(p, opt.kittaneh_variant), ()
    if method in ("cauchy", "carmichael_mason", "montel", "fujii_kubo", "abdurakhmanov",
                  "abu_omar_kittaneh", "al_dolat"):
        return getattr(classical, method)(p), ()
    if method == "cartesian_disk":
        return cartesian_disk(build_block_companion(p)), ()
    if method == "block_cartesian":
        bc = build_block_companion(p)
        value = block_cartesian_radius(
            [[bc.a11, bc.a12], [bc.a21, bc.a22]], s_exponent=opt.alpha
        )
        return BoundResult("block_cartesian", value, notes=(f"s={opt.alpha:.10g}",)), ()
    if method == "partition_disk":
        return partition_disk(p), ()
    if method == "unit_tail_disk":
        sign = -1 if p.coefficient(1) == -1 else 1
        return unit_tail_disk(p, sign), ()
    if method == "mw":
        result, applic = mw_bound(p, strict=opt.strict_mw)
        return result, applic.reasons
    if method == "radius_sweep":
        value = numerical_radius_sweep(build_companion(p), samples=opt.theta_samples)
        note = f"samples={opt.theta_samples}"
        return BoundResult("radius_sweep", value, notes=(note,)), ()
    if method == "kittaneh_rectangle":
        return kittaneh_rectangle(p), ()
    if method == "partition_rectangle":
        return partition_rectangle(p), ()
    if method == "hermitian_rectangle":
        return hermitian_rectangle(p), ()
    raise ValueError(f"unknown method {method!r}")


def resolve_methods(spec: str | None) -> tuple[str, ...]:
    """Turn a comma-separated method list (or 'all'/None) into registry ids."""
    if spec is None or spec.strip() == "all":
        return ALL_METHODS
    names = tuple(t for t in (s.strip() for s in spec.split(",")) if t)
    unknown = [n for n in names if n not in _REGISTRY]
    if unknown:
        raise ValueError(f"unknown methods: {', '.join(unknown)} (known: {', '.join(ALL_METHODS)})")
    if not names:
        raise ValueError("empty method list")
    return names


def run_compare(source: str | Polynomial, options: CompareOptions | None = None) -> CompareReport:
    opt = options or CompareOptions()
    p = parse_polynomial(source) if isinstance(source, str) else source
    requested = opt.methods if opt.methods is not None else ALL_METHODS

    quotient, reduced = (p, False)
    if p.degree % 2 == 1:
        quotient, reduced = odd_reduce(p)

    oracle: RootSet | None = None
    oracle_error: str | None = None
    if opt.oracle:
        try:
            oracle = find_roots(p)
        except NoConvergenceError as exc:
            oracle_error = str(exc)

    rows: list[ReportRow] = []
    for method in requested:
        kind, needs_even, min_degree = _REGISTRY[method]
        target = p
        notes: list[str] = []
        if needs_even and p.degree % 2 == 1:
            if reduced:
                target = quotient
                notes.append("zero root factored out; computed on the even quotient")
            else:
                rows.append(
                    ReportRow(method, None, None, "refused",
                              notes=("requires even degree (constant term is nonzero)",))
                )
                continue
        if target.degree < min_degree:
            rows.append(
                ReportRow(method, None, None, "refused",
                          notes=(f"requires degree >= {min_degree}",))
            )
            continue
        try:
            outcome, extra = _run_one(method, target, opt)
        except HypothesisViolatedError as exc:
            rows.append(ReportRow(method, None, None, "refused", notes=(str(exc),)))
            continue
        notes.extend(extra)

        if isinstance(outcome, Rectangle):
            verdict = margin = None
            if oracle is not None:
                v = validate_rectangle(p, outcome, oracle)
                verdict, margin = v.verdict, v.margin
            rows.append(
                ReportRow(method, None, None, "valid", rectangle=outcome,
                          verdict=verdict, margin=margin, notes=tuple(notes))
            )
        else:
            result: BoundResult = outcome
            notes.extend(result.notes)
            verdict = margin = None
            if oracle is not None:
                v = validate_bound(p, result.value, oracle)
                verdict, margin = v.verdict, v.margin
            rows.append(
                ReportRow(method, result.variant, result.value, result.applicability,
                          verdict=verdict, margin=margin, notes=tuple(notes))
            )

    ranked = sorted(
        (i for i, r in enumerate(rows) if r.value is not None and r.applicability != "refused"),
        key=lambda i: rows[i].value,
    )
    for rank, i in enumerate(ranked, start=1):
        rows[i] = replace(rows[i], rank=rank)

    return CompareReport(
        degree=p.degree,
        coefficients=p.descending(),
        rows=tuple(rows),
        oracle=oracle,
        oracle_error=oracle_error,
        reduced=reduced,
    )


@dataclass(frozen=True)
class FixtureCheck:
    method: str
    variant: str | None
    component: str | None
    status: str
    reference: float
    computed: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class FixtureReport:
    name: str
    passed: bool
    checks: tuple[FixtureCheck, ...]
    oracle_max_modulus: float


def _relative_error(computed: float, reference: float) -> float:
    scale = max(abs(reference), 1e-30)
    return abs(computed - reference) / scale


def run_fixture(
    name: str | Fixture,
    options: CompareOptions | None = None,
    tolerance: float = 1e-7,
) -> FixtureReport:
    """Evaluate one bundled fixture.

    exact / variant-matched rows are asserted against the reference value at
    the given relative tolerance. reference-divergent rows can never be
    asserted for equality; instead the reference and computed values are
    reported side by side and both are checked for validity against the
    oracle (disk values must dominate the max root modulus, rectangles must
    contain every root).
    """
    fixture = get_fixture(name) if isinstance(name, str) else name
    opt = options or CompareOptions()
    p = fixture.polynomial()
    oracle = find_roots(p)
    checks: list[FixtureCheck] = []

    for exp in fixture.expected:
        variant = exp.variant
        if exp.method == "max_modulus":
            computed = oracle.max_modulus
            if exp.status == DIVERGENT:
                passed = True
                detail = "reference max modulus does not match the dual-route oracle"
            else:
                passed = _relative_error(computed, exp.value) <= tolerance
                detail = ""
            checks.append(
                FixtureCheck("max_modulus", None, None, exp.status, exp.value,
                             computed, passed, detail)
            )
            continue

        run_opt = opt
        if variant is not None:
            if exp.method == "linden":
                run_opt = CompareOptions(linden_variant=variant, oracle=False)
            elif exp.method == "kittaneh_disk":
                run_opt = CompareOptions(kittaneh_variant=variant, oracle=False)
        outcome, _ = _run_one(exp.method, p, run_opt)

        if isinstance(outcome, Rectangle):
            computed = outcome.re_hi if exp.component == "re_half" else outcome.im_hi
            if exp.status == DIVERGENT:
                verdict = validate_rectangle(p, outcome, oracle)
                passed = verdict.holds
                detail = "divergent reference; computed rectangle checked for root containment"
            else:
                passed = _relative_error(computed, exp.value) <= tolerance
                detail = ""
        else:
            result: BoundResult = outcome
            computed = result.value
            if exp.status == DIVERGENT:
                slack = 1e-9
                ref_valid = exp.value >= oracle.max_modulus - slack
                own_valid = computed >= oracle.max_modulus - slack
                passed = ref_valid and own_valid
                detail = "divergent reference; both values checked against the oracle"
            else:
                passed = _relative_error(computed, exp.value) <= tolerance
                detail = ""
        checks.append(
            FixtureCheck(exp.method, variant, exp.component, exp.status, exp.value,
                         computed, passed, detail)
        )

    if fixture.mw_guard is not None:
        result, applic = mw_bound(p)
        guard_ok = applic.status == fixture.mw_guard
        checks.append(
            FixtureCheck("mw", None, "guard", "exact", math.nan, math.nan, guard_ok,
                         f"guard status {applic.status!r}, expected {fixture.mw_guard!r}")
        )
        if fixture.mw_verdict is not None:
            verdict = validate_bound(p, result.value, oracle)
            verdict_ok = verdict.verdict == fixture.mw_verdict
            checks.append(
                FixtureCheck("mw", None, "verdict", "exact", math.nan, math.nan, verdict_ok,
                             f"oracle verdict {verdict.verdict!r}, expected {fixture.mw_verdict!r}")
            )

    return FixtureReport(
        name=fixture.name,
        passed=all(c.passed for c in checks),
        checks=tuple(checks),
        oracle_max_modulus=oracle.max_modulus,
    )


def run_all_fixtures(
    options: CompareOptions | None = None, tolerance: float = 1e-7
) -> list[FixtureReport]:
    return [run_fixture(name, options, tolerance) for name in FIXTURES]


# ---------------------------------------------------------------------------
# rendering


def _f10(value: float | None) -> str:
    return "" if value is None else format(value, ".10g")


def _f12(value: float | None) -> str | None:
    return None if value is None else format(value, ".12g")


def _coefficient_text(c: complex) -> str:
    if c.imag == 0:
        return format(c.real, ".10g")
    return f"{c.real:.10g}{c.imag:+.10g}i"


def format_compare_text(report: CompareReport) -> str:
    lines = []
    coeffs = ", ".join(_coefficient_text(c) for c in report.coefficients)
    lines.append(f"monic degree {report.degree}: [{coeffs}]")
    if report.oracle is not None:
        lines.append(
            f"oracle max |z| = {_f10(report.oracle.max_modulus)} "
            f"({report.oracle.iterations} iterations)"
        )
    elif report.oracle_error is not None:
        lines.append(f"oracle failed: {report.oracle_error}")
    else:
        lines.append("oracle disabled")
    if report.reduced:
        lines.append("odd degree with zero constant term: partition bounds use the even quotient")
    lines.append("")

    header = f"{'method':<20} {'variant':<9} {'value':<22} {'applicability':<13} " \
             f"{'verdict':<9} {'margin':<13} {'rank':<4} notes"
    lines.append(header)
    lines.append("-" * len(header))
    for row in report.rows:
        if row.rectangle is not None:
            rect = row.rectangle
            value_text = (
                f"[{_f10(rect.re_lo)}, {_f10(rect.re_hi)}] x "
                f"[{_f10(rect.im_lo)}, {_f10(rect.im_hi)}]"
            )
        else:
            value_text = _f10(row.value)
        lines.append(
            f"{row.method:<20} {row.variant or '':<9} {value_text:<22} "
            f"{row.applicability:<13} {row.verdict or '':<9} {_f10(row.margin):<13} "
            f"{row.rank if row.rank is not None else '':<4} {'; '.join(row.notes)}"
        )
    return "\n".join(lines) + "\n"


_CSV_COLUMNS = ("method", "variant", "value", "applicability",
                "oracle_max_modulus", "verdict", "margin")


def format_compare_csv(report: CompareReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    maxmod = report.oracle.max_modulus if report.oracle is not None else None
    for row in report.rows:
        writer.writerow([
            row.method,
            row.variant or "",
            "" if row.value is None else format(row.value, ".12g"),
            row.applicability,
            "" if maxmod is None else format(maxmod, ".12g"),
            row.verdict or "",
            "" if row.margin is None else format(row.margin, ".12g"),
        ])
    return out.getvalue()


def format_compare_json(report: CompareReport) -> str:
    maxmod = report.oracle.max_modulus if report.oracle is not None else None
    payload = {
        "degree": report.degree,
        "coefficients": [_coefficient_text(c) for c in report.coefficients],
        "oracle": None if report.oracle is None else {
            "max_modulus": _f12(report.oracle.max_modulus),
            "iterations": report.oracle.iterations,
        },
        "oracle_error": report.oracle_error,
        "reduced": report.reduced,
        "rows": [
            {
                "method": row.method,
                "variant": row.variant,
                "value": _f12(row.value),
                "applicability": row.applicability,
                "oracle_max_modulus": _f12(maxmod),
                "verdict": row.verdict,
                "margin": _f12(row.margin),
                "rank": row.rank,
                "rectangle": None if row.rectangle is None else {
                    "re_lo": _f12(row.rectangle.re_lo),
                    "re_hi": _f12(row.rectangle.re_hi),
                    "im_lo": _f12(row.rectangle.im_lo),
                    "im_hi": _f12(row.rectangle.im_hi),
                },
                "notes": list(row.notes),
            }
            for row in report.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def format_fixture_text(report: FixtureReport) -> str:
    lines = [f"fixture {report.name}: {'PASS' if report.passed else 'FAIL'} "
             f"(oracle max |z| = {_f10(report.oracle_max_modulus)})"]
    for c in report.checks:
        tag = "ok " if c.passed else "FAIL"
        if c.status == DIVERGENT:
            tag = "ok*" if c.passed else "FAIL"
        label = c.method
        if c.variant:
            label += f"[{c.variant}]"
        if c.component:
            label += f".{c.component}"
        if math.isnan(c.reference):
            body = c.detail
        else:
            body = f"reference {_f10(c.reference)}  computed {_f10(c.computed)}"
            if c.status != EXACT:
                body += f"  ({c.status})"
            if c.detail:
                body += f"  {c.detail}"
        lines.append(f"  [{tag}] {label:<34} {body}")
    return "\n".join(lines) + "\n"


def format_fixture_json(reports: list[FixtureReport]) -> str:
    payload = [
        {
            "name": r.name,
            "passed": r.passed,
            "oracle_max_modulus": _f12(r.oracle_max_modulus),
            "checks": [
                {
                    "method": c.method,
                    "variant": c.variant,
                    "component": c.component,
                    "status": c.status,
                    "reference": None if math.isnan(c.reference) else _f12(c.reference),
                    "computed": None if math.isnan(c.computed) else _f12(c.computed),
                    "passed": c.passed,
                    "detail": c.detail,
                }
                for c in r.checks
            ],
        }
        for r in reports
    ]
    return json.dumps(payload, indent=2) + "\n"
