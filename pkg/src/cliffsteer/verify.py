"""Exact residual computation for every supported differential system.

Each operation literally applies the differential operators and returns
the residual together with an exact-zero flag.  The operators work over
both steering expressions and plain Clifford polynomials, which expose
the same cr_left / cr_right / hypercomplex_d surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .algebra import ScalarLike, coerce_fraction, format_fraction
from .polynomials import CliffordPolynomial
from .steering import SteeringExpression

Verifiable = Union[SteeringExpression, CliffordPolynomial]


@dataclass
class ResidualReport:
    """Residual of an operator chain; is_zero holds exactly when the
    residual has no terms left."""

    operator_description: str
    residual: Verifiable
    is_zero: bool
    term_count: int

    def to_obj(self) -> dict:
        return {
            "operator": self.operator_description,
            "is_zero": self.is_zero,
            "term_count": self.term_count,
            "residual": self.residual.to_obj(),
        }


def _report(description: str, residual: Verifiable) -> ResidualReport:
    return ResidualReport(description, residual, not residual, len(residual))


def _apply_cr(f: Verifiable, side: str, times: int) -> Verifiable:
    out = f
    for _ in range(times):
        out = out.cr_left() if side == "left" else out.cr_right()
    return out


def n_monogenic_residual(f: Verifiable, n: int, side: str = "left") -> ResidualReport:
    """Residual of the n-fold Cauchy-Riemann operator; n = 0 returns f."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return _report(f"cr_{side}^{n}", _apply_cr(f, side, n))


def inframonogenic_residual(f: Verifiable) -> ResidualReport:
    """Residual of the sandwich operator dX f dX."""
    return _report("cr_right(cr_left(f))", f.cr_left().cr_right())


def lame_navier_residual(
    f: Verifiable, mu: ScalarLike, lam: ScalarLike
) -> ResidualReport:
    """((mu+lam)/2) dX f dX + ((3mu+lam)/2) dX^2 f."""
    mu = coerce_fraction(mu)
    lam = coerce_fraction(lam)
    once = f.cr_left()
    sandwich = once.cr_right()
    second = once.cr_left()
    residual = sandwich * Fraction(mu + lam, 2) + second * Fraction(3 * mu + lam, 2)
    return _report(
        f"lame_navier(mu={format_fraction(mu)}, lambda={format_fraction(lam)})", residual
    )


def alpha_beta_residual(
    f: Verifiable, alpha: ScalarLike, beta: ScalarLike
) -> ResidualReport:
    """alpha * (f dX) + beta * (dX f)."""
    alpha = coerce_fraction(alpha)
    beta = coerce_fraction(beta)
    residual = f.cr_right() * alpha + f.cr_left() * beta
    return _report(
        f"alpha_beta(alpha={format_fraction(alpha)}, beta={format_fraction(beta)})",
        residual,
    )


def infrapoly_residual(f: Verifiable, p: int, q: int) -> ResidualReport:
    """dX^p f dX^q; the interleaving order is immaterial since the
    one-sided operators commute."""
    if p < 0 or q < 0:
        raise ValueError("orders must be nonnegative")
    out = _apply_cr(f, "left", p)
    out = _apply_cr(out, "right", q)
    return _report(f"cr_left^{p} then cr_right^{q}", out)


def d_equation_residual(f: Verifiable, coeffs: Sequence[ScalarLike]) -> ResidualReport:
    """sum_j a_j D^(n-j) f for the hypercomplex derivative D.

    The input must be left monogenic: the hypercomplex derivative is only
    defined there, so a non-monogenic input is refused rather than
    silently evaluated.
    """
    coeffs = tuple(coerce_fraction(c) for c in coeffs)
    if not coeffs:
        raise ValueError("at least one coefficient is required")
    if f.cr_left():
        raise ValueError(
            "input is not left monogenic; the hypercomplex derivative is undefined"
        )
    n = len(coeffs) - 1
    powers = [f]
    for _ in range(n):
        powers.append(powers[-1].hypercomplex_d())
    residual = powers[n] * coeffs[0]
    for j in range(1, n + 1):
        residual = residual + powers[n - j] * coeffs[j]
    label = ",".join(format_fraction(c) for c in coeffs)
    return _report(f"d_equation({label})", residual)
