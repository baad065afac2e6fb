"""Number of arcs in an (m+2)-angulation and the existence criterion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .surface import SurfaceSignature

__all__ = [
    "ArcCountResult",
    "InvalidSignature",
    "NoAngulation",
    "NegativeCount",
    "angulation_exists",
    "arc_count",
    "arc_count_formula",
]


class InvalidSignature(ValueError):
    pass


class NoAngulation(ValueError):
    pass


class NegativeCount(ValueError):
    pass


@dataclass(frozen=True)
class ArcCountResult:
    exists: bool
    n: Optional[int] = None


def _check(sig: SurfaceSignature, m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidSignature(f"m must be an integer >= 1, got {m!r}")
    problems = sig.problems()
    if problems:
        raise InvalidSignature("; ".join(problems))


def angulation_exists(sig: SurfaceSignature, m: int) -> bool:
    """True iff c + 2b + 4g - 4 + p is divisible by m."""
    _check(sig, m)
    return (sig.c + 2 * sig.b + 4 * sig.g - 4 + sig.p) % m == 0


def arc_count_formula(g: int, b: int, c: int, p: int, m: int) -> Fraction:
    """c/m + (1 + 2/m)(b + 2(g-1)) + (2 + 1/m)p, exactly.

    No validity checks; used directly for the cut recurrences, which step
    through signatures that need not be realizable.
    """
    M = Fraction(m)
    return c / M + (1 + 2 / M) * (b + 2 * (g - 1)) + (2 + 1 / M) * p


def arc_count(sig: SurfaceSignature, m: int) -> ArcCountResult:
    """Arc count of any (m+2)-angulation of the surface.

    Raises :class:`NoAngulation` when the congruence fails and
    :class:`NegativeCount` for degenerate signatures where the formula is
    negative.
    """
    if not angulation_exists(sig, m):
        raise NoAngulation(
            f"no ({m}+2)-angulation: c+2b+4g-4+p = "
            f"{sig.c + 2 * sig.b + 4 * sig.g - 4 + sig.p} is not divisible by {m}"
        )
    n = arc_count_formula(sig.g, sig.b, sig.c, sig.p, m)
    if n.denominator != 1:
        # cannot happen when the congruence holds; kept as a hard check
        raise ArithmeticError(f"non-integral arc count {n} for {sig}, m={m}")
    if n < 0:
        raise NegativeCount(f"formula gives n = {n} for {sig}, m={m}")
    return ArcCountResult(exists=True, n=int(n))
