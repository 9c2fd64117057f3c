"""Nine classical zero-modulus bounds computed from coefficient data.

Each bound maps a monic polynomial p(z) = z^n + a_n z^{n-1} + ... + a_1 to a
radius R such that every zero satisfies |z| <= R. Two of the formulas
(linden, kittaneh_disk) ship in two variants because the displayed form and
the form that reproduces the published comparison tables differ; the default
is the displayed form and fixtures select variants explicitly.

Note: the displayed kittaneh_disk variant is retained exactly as printed even
though it can dip below the true max root modulus on some inputs (the
plus_one variant is the safe one); see the validity tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegreeTooSmallError, NegativeRadicandError
from .polynomial import Polynomial

__all__ = [
    "BoundResult",
    "cauchy",
    "carmichael_mason",
    "montel",
    "fujii_kubo",
    "abdurakhmanov",
    "linden",
    "kittaneh_disk",
    "abu_omar_kittaneh",
    "al_dolat",
]


@dataclass(frozen=True)
class BoundResult:
    """A computed zero bound with its provenance knobs.

    applicability: "valid" for unconditional bounds, "conditional" when the
    formula's guarantee depends on unverified hypotheses, "refused" when the
    inputs fail a hard premise (value may still be reported for context).
    """

    method: str
    value: float
    variant: str | None = None
    applicability: str = "valid"
    notes: tuple[str, ...] = ()


def _moduli(p: Polynomial) -> list[float]:
    return [abs(c) for c in p.lower]


def cauchy(p: Polynomial) -> BoundResult:
    """1 + max|a_k|."""
    return BoundResult("cauchy", 1.0 + max(_moduli(p)))


def carmichael_mason(p: Polynomial) -> BoundResult:
    """sqrt(1 + sum |a_k|^2)."""
    return BoundResult("carmichael_mason", math.sqrt(1.0 + sum(m * m for m in _moduli(p))))


def montel(p: Polynomial) -> BoundResult:
    """max(1, sum |a_k|)."""
    return BoundResult("montel", max(1.0, sum(_moduli(p))))


def fujii_kubo(p: Polynomial) -> BoundResult:
    """cos(pi/(n+1)) + (|a_n| + sum_{k=1}^{n} |a_k|^2) / 2."""
    n = p.degree
    mods = _moduli(p)
    value = math.cos(math.pi / (n + 1)) + 0.5 * (mods[-1] + sum(m * m for m in mods))
    return BoundResult("fujii_kubo", value)


def abdurakhmanov(p: Polynomial) -> BoundResult:
    """(|a_n| + cos(pi/n) + sqrt((|a_n| - cos(pi/n))^2 + (1 + S)^2)) / 2,
    where S = sum_{k=1}^{n-1} |a_k|^2."""
    n = p.degree
    if n < 2:
        raise DegreeTooSmallError("abdurakhmanov needs degree >= 2")
    mods = _moduli(p)
    a_n = mods[-1]
    head = sum(m * m for m in mods[:-1])
    cos_n = math.cos(math.pi / n)
    value = 0.5 * (a_n + cos_n + math.sqrt((a_n - cos_n) ** 2 + (1.0 + head) ** 2))
    return BoundResult("abdurakhmanov", value)


def linden(p: Polynomial, variant: str = "printed") -> BoundResult:
    """|a_n|/n + sqrt(((n-1)/n) (n - 1 + sum|a_k|^2 - T)).

    printed: T = |a_n|^2/n. table: T = |a_n|/n (the substitution that
    reproduces the published comparison tables).
    """
    if variant not in ("printed", "table"):
        raise ValueError(f"unknown linden variant {variant!r}")
    n = p.degree
    if n < 2:
        raise DegreeTooSmallError("linden needs degree >= 2")
    mods = _moduli(p)
    a_n = mods[-1]
    total = sum(m * m for m in mods)
    subtracted = a_n * a_n / n if variant == "printed" else a_n / n
    radicand = (n - 1) / n * (n - 1 + total - subtracted)
    if radicand < 0:
        raise NegativeRadicandError("linden radicand is negative")
    return BoundResult("linden", a_n / n + math.sqrt(radicand), variant=variant)


def kittaneh_disk(p: Polynomial, variant: str = "printed") -> BoundResult:
    """(|a_n| + cos(pi/n) + sqrt((|a_n| - cos(pi/n))^2 + E + S)) / 2,
    with S = sum_{j=1}^{n-2} |a_j|^2.

    printed: E = (|a_{n-1}| - 1)^2. plus_one: E = (1 + |a_{n-1}|)^2 (the form
    the published tables use; also the only variant that is a valid bound in
    general).
    """
    if variant not in ("printed", "plus_one"):
        raise ValueError(f"unknown kittaneh_disk variant {variant!r}")
    n = p.degree
    if n < 3:
        raise DegreeTooSmallError("kittaneh_disk needs degree >= 3")
    mods = _moduli(p)
    a_n = mods[-1]
    a_n1 = mods[-2]
    tail = sum(m * m for m in mods[: n - 2])
    edge = (a_n1 - 1.0) ** 2 if variant == "printed" else (1.0 + a_n1) ** 2
    cos_n = math.cos(math.pi / n)
    value = 0.5 * (a_n + cos_n + math.sqrt((a_n - cos_n) ** 2 + edge + tail))
    return BoundResult("kittaneh_disk", value, variant=variant)


def abu_omar_kittaneh(p: Polynomial) -> BoundResult:
    """(m + cos(pi/(n+1)) + sqrt((m - cos(pi/(n+1)))^2 + 4 beta)) / 2, with
    m = (|a_n| + alpha)/2, alpha = sqrt(sum_{k<=n} |a_k|^2),
    beta = sqrt(sum_{k<=n-1} |a_k|^2)."""
    n = p.degree
    if n < 2:
        raise DegreeTooSmallError("abu_omar_kittaneh needs degree >= 2")
    mods = _moduli(p)
    alpha = math.sqrt(sum(m * m for m in mods))
    beta = math.sqrt(sum(m * m for m in mods[:-1]))
    mid = (mods[-1] + alpha) / 2
    cos_n1 = math.cos(math.pi / (n + 1))
    value = 0.5 * (mid + cos_n1 + math.sqrt((mid - cos_n1) ** 2 + 4.0 * beta))
    return BoundResult("abu_omar_kittaneh", value)


def al_dolat(p: Polynomial, grid: int = 1024) -> BoundResult:
    """min over t in [0,1] of
    (|a_n| + 2 cos(pi/n) + sqrt(t^2 |a_n|^2 + S) + sqrt(1 + (1-t)^2 |a_n|^2)) / 2,
    S = sum_{k<=n-1} |a_k|^2. Dense grid then golden-section refinement;
    the minimizing t is reported in notes.
    """
    n = p.degree
    if n < 2:
        raise DegreeTooSmallError("al_dolat needs degree >= 2")
    mods = _moduli(p)
    a_n = mods[-1]
    head = sum(m * m for m in mods[:-1])
    two_cos = 2.0 * math.cos(math.pi / n)

    def objective(t: float) -> float:
        return 0.5 * (
            a_n
            + two_cos
            + math.sqrt(t * t * a_n * a_n + head)
            + math.sqrt(1.0 + (1.0 - t) ** 2 * a_n * a_n)
        )

    step = 1.0 / grid
    samples = [i * step for i in range(grid + 1)]
    values = [objective(t) for t in samples]
    best = min(range(len(samples)), key=values.__getitem__)
    lo = samples[max(0, best - 1)]
    hi = samples[min(len(samples) - 1, best + 1)]

    ratio = (math.sqrt(5.0) - 1) / 2
    c = hi - ratio * (hi - lo)
    d = lo + ratio * (hi - lo)
    fc, fd = objective(c), objective(d)
    while hi - lo > 1e-10:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - ratio * (hi - lo)
            fc = objective(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + ratio * (hi - lo)
            fd = objective(d)
    t_star = (lo + hi) / 2
    return BoundResult(
        "al_dolat", min(fc, fd), notes=(f"t_star={t_star:.6f}",)
    )
