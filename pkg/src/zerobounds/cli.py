"""Command-line front door.

    zerobounds compare --poly "1, 5/4, 4/3, 1, 2, 3, 4" --methods all
    zerobounds fixture all
    zerobounds roots --poly "1, 0, -1"

Exit codes: 0 ok; 1 fixture assertion failure; 2 unparseable input (polynomial,
method list, config, fixture name); 3 MW bound refused under --strict-mw;
4 root-oracle failure (bounds are still printed, without verdicts).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .errors import NoConvergenceError, PolynomialParseError, UnknownFixtureError
from .polynomial import parse_polynomial
from .report import (
    ALL_METHODS,
    CompareOptions,
    format_compare_csv,
    format_compare_json,
    format_compare_text,
    format_fixture_json,
    format_fixture_text,
    resolve_methods,
    run_all_fixtures,
    run_compare,
    run_fixture,
)
from .roots import find_roots

__all__ = ["main"]

_LINDEN_VARIANTS = ("printed", "table")
_KITTANEH_VARIANTS = ("printed", "plus_one")
_CONFIG_KEYS = (
    "methods", "linden", "kittaneh", "alpha", "theta-samples",
    "strict-mw", "oracle", "format", "tolerance",
)


class CliInputError(Exception):
    """Bad user input other than the polynomial text (exit code 2)."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerobounds",
        description="Bound the zeros of a monic polynomial and compare the bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compare = sub.add_parser("compare", help="evaluate bounds for one polynomial")
    compare.add_argument("--poly", required=True,
                         help="degree-descending coefficients, comma separated; "
                              "entries like 2, -1/3, 1/4+1/4i")
    compare.add_argument("--methods", default=None,
                         help=f"comma-separated method ids or 'all' (default); "
                              f"known: {', '.join(ALL_METHODS)}")
    compare.add_argument("--variant", action="append", default=None, metavar="NAME=VALUE",
                         help="formula variant, repeatable: linden=printed|table, "
                              "kittaneh=printed|plus_one")
    compare.add_argument("--alpha", type=float, default=None,
                         help="block_cartesian interpolation exponent in (0,1), default 0.5")
    compare.add_argument("--theta-samples", type=int, default=None,
                         help="radius_sweep grid resolution, default 512")
    compare.add_argument("--strict-mw", action="store_true", default=None,
                         help="refuse the MW bound when its guard is not guaranteed")
    compare.add_argument("--format", choices=("text", "csv", "json"), default=None)
    compare.add_argument("--oracle", action=argparse.BooleanOptionalAction, default=None,
                         help="validate bounds against computed roots (default on)")
    compare.add_argument("--config", default=None, help="key=value preset file")

    fixture = sub.add_parser("fixture", help="check bundled reference fixtures")
    fixture.add_argument("name", help="table1..table5, h1, h2, h3, or 'all'")
    fixture.add_argument("--format", choices=("text", "json"), default=None)
    fixture.add_argument("--tolerance", type=float, default=None,
                         help="relative tolerance for asserted rows, default 1e-7")
    fixture.add_argument("--config", default=None, help="key=value preset file")

    roots = sub.add_parser("roots", help="compute all roots of one polynomial")
    roots.add_argument("--poly", required=True)
    roots.add_argument("--format", choices=("text", "json"), default=None)

    return parser


def _load_config(path: str | None) -> dict[str, str]:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise CliInputError(f"cannot read config file: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CliInputError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("_", "-")
        if key not in _CONFIG_KEYS:
            raise CliInputError(
                f"{path}:{lineno}: unknown key {key!r} (known: {', '.join(_CONFIG_KEYS)})"
            )
        values[key] = value.strip()
    return values


def _config_bool(text: str, key: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise CliInputError(f"config key {key} wants a boolean, got {text!r}")


def _parse_variants(pairs: list[str] | None) -> dict[str, str]:
    chosen: dict[str, str] = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep:
            raise CliInputError(f"--variant wants NAME=VALUE, got {pair!r}")
        name, value = name.strip(), value.strip()
        if name == "linden":
            allowed = _LINDEN_VARIANTS
        elif name == "kittaneh":
            allowed = _KITTANEH_VARIANTS
        else:
            raise CliInputError(f"unknown variant family {name!r} (linden, kittaneh)")
        if value not in allowed:
            raise CliInputError(f"variant {name} must be one of {', '.join(allowed)}")
        chosen[name] = value
    return chosen


@dataclass
class _Effective:
    """Flag value if given, else config value, else default."""

    config: dict[str, str]

    def text(self, flag, key: str, default: str | None) -> str | None:
        if flag is not None:
            return flag
        return self.config.get(key, default)

    def number(self, flag, key: str, default, cast) -> object:
        if flag is not None:
            return flag
        if key in self.config:
            try:
                return cast(self.config[key])
            except ValueError as exc:
                raise CliInputError(f"config key {key}: {exc}") from exc
        return default

    def flag_bool(self, flag, key: str, default: bool) -> bool:
        if flag is not None:
            return flag
        if key in self.config:
            return _config_bool(self.config[key], key)
        return default


def _compare_options(args: argparse.Namespace) -> tuple[CompareOptions, str]:
    eff = _Effective(_load_config(args.config))
    variants = _parse_variants(args.variant)
    linden = variants.get("linden") or eff.text(None, "linden", "printed")
    kittaneh = variants.get("kittaneh") or eff.text(None, "kittaneh", "printed")
    if linden not in _LINDEN_VARIANTS:
        raise CliInputError(f"config: linden must be one of {', '.join(_LINDEN_VARIANTS)}")
    if kittaneh not in _KITTANEH_VARIANTS:
        raise CliInputError(f"config: kittaneh must be one of {', '.join(_KITTANEH_VARIANTS)}")

    alpha = float(eff.number(args.alpha, "alpha", 0.5, float))
    if not 0.0 < alpha < 1.0:
        raise CliInputError(f"--alpha must lie in (0, 1), got {alpha}")
    theta = int(eff.number(args.theta_samples, "theta-samples", 512, int))
    if theta < 64:
        raise CliInputError(f"--theta-samples must be at least 64, got {theta}")

    methods_text = eff.text(args.methods, "methods", None)
    try:
        methods = resolve_methods(methods_text)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc

    options = CompareOptions(
        methods=methods,
        linden_variant=linden,
        kittaneh_variant=kittaneh,
        alpha=alpha,
        theta_samples=theta,
        strict_mw=eff.flag_bool(args.strict_mw, "strict-mw", False),
        oracle=eff.flag_bool(args.oracle, "oracle", True),
    )
    out_format = eff.text(args.format, "format", "text")
    if out_format not in ("text", "csv", "json"):
        raise CliInputError(f"config: format must be text, csv, or json, got {out_format!r}")
    return options, out_format


def _cmd_compare(args: argparse.Namespace) -> int:
    options, out_format = _compare_options(args)
    report = run_compare(args.poly, options)
    if out_format == "csv":
        sys.stdout.write(format_compare_csv(report))
    elif out_format == "json":
        sys.stdout.write(format_compare_json(report))
    else:
        sys.stdout.write(format_compare_text(report))
    if options.oracle and report.oracle_error is not None:
        return 4
    if options.strict_mw and any(
        row.method == "mw" and row.applicability == "refused" for row in report.rows
    ):
        return 3
    return 0


def _cmd_fixture(args: argparse.Namespace) -> int:
    eff = _Effective(_load_config(args.config))
    tolerance = float(eff.number(args.tolerance, "tolerance", 1e-7, float))
    out_format = eff.text(args.format, "format", "text")
    if out_format not in ("text", "json"):
        raise CliInputError(f"fixture format must be text or json, got {out_format!r}")
    if args.name == "all":
        reports = run_all_fixtures(tolerance=tolerance)
    else:
        reports = [run_fixture(args.name, tolerance=tolerance)]
    if out_format == "json":
        sys.stdout.write(format_fixture_json(reports))
    else:
        for report in reports:
            sys.stdout.write(format_fixture_text(report))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_roots(args: argparse.Namespace) -> int:
    p = parse_polynomial(args.poly)
    rootset = find_roots(p)
    if args.format == "json":
        import json

        payload = {
            "degree": p.degree,
            "max_modulus": format(rootset.max_modulus, ".12g"),
            "iterations": rootset.iterations,
            "roots": [
                {
                    "re": format(z.real, ".12g"),
                    "im": format(z.imag, ".12g"),
                    "modulus": format(abs(z), ".12g"),
                    "residual": format(r, ".12g"),
                }
                for z, r in zip(rootset.roots, rootset.residuals)
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"degree {p.degree}, max |z| = {rootset.max_modulus:.10g}, "
            f"{rootset.iterations} iterations\n"
        )
        for z, residual in zip(rootset.roots, rootset.residuals):
            sys.stdout.write(
                f"  {z.real:+.10g} {z.imag:+.10g}i   |z| = {abs(z):.10g}   "
                f"residual {residual:.3g}\n"
            )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "fixture":
            return _cmd_fixture(args)
        return _cmd_roots(args)
    except PolynomialParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownFixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoConvergenceError as exc:
        print(f"error: root oracle failed: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
