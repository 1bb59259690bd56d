"""Closed-form lower and upper bounds on the spectral radius.

All four bounds are driven by c (number of type-1 vertices), the b
counts of the type-0 vertices, and F_1 = sum(b_i^2):

* ``lower_cubic``: largest real root of
  ``x^3 - (c+1) x^2 + c x - F_1``, minus one.  This is the growth rate
  of the lower-bracket walk sequence; the root always exceeds c.
* ``lower_corollary``: the explicit relaxation ``c - 1 + F_1 / n^2``.
* ``lower_quadratic``: ``(c - 2 + sqrt(c^2 + 4 F_1 / (c-1))) / 2``.
* ``upper_cubic``: largest real root of
  ``x^3 - (c+1) x^2 + (c - sum b) x + (c sum b - F_1)``, minus one,
  the growth rate of the upper-bracket walk sequence.
* ``inequality_root``: the largest real root of a degree-based quartic
  h that is nonnegative at rho, so the root sits at or below rho.  It
  coincides with rho exactly when every b_i is 1 or c - 1, and is a
  sharp lower estimate otherwise.

The bounds assume n >= 4, c >= 3, z >= 1, and n - 1 < m < C(n, 2);
outside that range they raise :class:`PreconditionError`, or are marked
not applicable when a report is built leniently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

from .graph_model import ThresholdGraph, degree_sequence, to_bzp
from .spectral import DEFAULT_TOL, Polynomial, greatest_real_root, spectral_radius

__all__ = [
    "BoundReport",
    "PreconditionError",
    "SANDWICH_TOL",
    "bound_report",
    "inequality_check",
    "inequality_polynomial",
    "inequality_root",
    "lower_corollary",
    "lower_cubic",
    "lower_cubic_polynomial",
    "lower_quadratic",
    "upper_cubic",
    "upper_cubic_polynomial",
]

SANDWICH_TOL = 1e-9
_INEQUALITY_REL = 1e-9


class PreconditionError(ValueError):
    """The graph is outside the range where a bound is stated."""


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one graph, or rho alone when they do not apply."""

    rho: float
    lower_cubic: float | None
    lower_corollary: float | None
    lower_quadratic: float | None
    upper_cubic: float | None
    inequality_root: float | None
    sandwich_ok: bool | None
    gaps: dict[str, float] | None
    applicable: bool


def _bound_inputs(g: ThresholdGraph) -> tuple[int, tuple[int, ...], int, int]:
    """(c, b, sum b, F_1) after checking the standing assumptions."""
    require_applicable(g)
    b = to_bzp(g).b
    return g.c, b, sum(b), sum(bi * bi for bi in b)


def require_applicable(g: ThresholdGraph) -> None:
    if not g.is_connected:
        raise PreconditionError("bounds require a connected graph")
    if g.n < 4:
        raise PreconditionError(f"bounds require n >= 4, got n = {g.n}")
    if g.c < 3:
        raise PreconditionError(f"bounds require c >= 3, got c = {g.c}")
    if g.z < 1:
        raise PreconditionError(f"bounds require z >= 1, got z = {g.z}")
    if not g.m > g.n - 1:
        raise PreconditionError(f"bounds require m > n - 1, got m = {g.m}, n = {g.n}")
    if not g.m < comb(g.n, 2):
        raise PreconditionError(f"bounds require m < C(n,2), got m = {g.m}, n = {g.n}")


def lower_cubic_polynomial(g: ThresholdGraph) -> Polynomial:
    c, _, _, f1 = _bound_inputs(g)
    return Polynomial((1.0, -(c + 1.0), float(c), -float(f1)))


def upper_cubic_polynomial(g: ThresholdGraph) -> Polynomial:
    c, _, sb, f1 = _bound_inputs(g)
    return Polynomial((1.0, -(c + 1.0), float(c - sb), float(c * sb - f1)))


def lower_cubic(g: ThresholdGraph) -> float:
    """Shifted largest root of the lower-bracket characteristic cubic.

    The cubic is negative at x = c (its value there is -F_1), so the
    largest root exceeds c and the bound exceeds c - 1.
    """
    poly = lower_cubic_polynomial(g)
    return greatest_real_root(poly, float(g.c)).value - 1.0


def upper_cubic(g: ThresholdGraph) -> float:
    """Shifted largest root of the upper-bracket characteristic cubic."""
    poly = upper_cubic_polynomial(g)
    return greatest_real_root(poly, float(g.c)).value - 1.0


def lower_corollary(g: ThresholdGraph) -> float:
    """Explicit relaxation of the cubic lower bound: c - 1 + F_1 / n^2."""
    c, _, _, f1 = _bound_inputs(g)
    return c - 1.0 + f1 / float(g.n * g.n)


def lower_quadratic(g: ThresholdGraph) -> float:
    """Closed-form quadratic lower bound from a two-block weighting."""
    c, _, _, f1 = _bound_inputs(g)
    return (c - 2.0 + sqrt(c * c + 4.0 * f1 / (c - 1.0))) / 2.0


def inequality_polynomial(g: ThresholdGraph) -> Polynomial:
    """Quartic h with h(rho) >= 0; expanded from the degree inequality.

    With S the degree sum over the positions c..n (S = c - 1 + sum b),
    T1 = sum (d_i - 1)^2, T2 = sum (d_i - 1), and
    T3 = sum (d_i - 1)(S - d_i (z+1)) over those same positions:

    h(x) = (c-2) x^4 + (c-2)(3-c) x^3 - ((c-2)(z+c-1) + T1) x^2
           + (c-2)((c-2)(z+1) - S - T2) x - T3

    h(rho) = 0 exactly when every b_i is 1 or c - 1; otherwise
    h(rho) > 0 and the largest real root of h sits strictly below rho.
    """
    c, _, sb, _ = _bound_inputs(g)
    z = g.z
    tail = degree_sequence(g)[c - 1 :]
    s = c - 1 + sb
    t1 = sum((d - 1) ** 2 for d in tail)
    t2 = sum(d - 1 for d in tail)
    t3 = sum((d - 1) * (s - d * (z + 1)) for d in tail)
    return Polynomial(
        (
            float(c - 2),
            float((c - 2) * (3 - c)),
            -float((c - 2) * (z + c - 1) + t1),
            float((c - 2) * ((c - 2) * (z + 1) - s - t2)),
            -float(t3),
        )
    )


def inequality_check(g: ThresholdGraph, rho: float) -> tuple[bool, float]:
    """Evaluate the degree inequality at rho: (holds, slack).

    The left side collects the walk mass balanced through the dominating
    block by the principal eigenvector; replacing each tail-degree
    partial sum there by its proportional share can only shrink the
    right side, so slack = left - right is >= 0 (within rounding) at the
    true spectral radius, with equality exactly when every b_i is 1 or
    c - 1.  Values below the largest root of the quartic fail the check.
    """
    c, _, sb, _ = _bound_inputs(g)
    z = g.z
    tail = degree_sequence(g)[c - 1 :]
    s = c - 1 + sb
    left = rho * ((rho - c + 2.0) * (rho * rho + rho - (z + 1.0)) - s) * (c - 2.0)
    right = sum(
        (d * (rho * rho - (z + 1.0)) - rho * (rho - c + 2.0) + s) * (d - 1.0) for d in tail
    )
    slack = left - right
    scale = max(1.0, abs(left), abs(right))
    return slack >= -_INEQUALITY_REL * scale, slack


def inequality_root(
    g: ThresholdGraph, rho: float | None = None, tol: float = DEFAULT_TOL
) -> float:
    """Largest real root of the inequality quartic; sits at or below rho.

    The quartic is nonnegative at rho and has positive leading
    coefficient, so its rightmost sign change happens at or below rho;
    the bracket is scanned over [0, rho + 1] to avoid locking onto an
    inner root.
    """
    poly = inequality_polynomial(g)
    if rho is None:
        rho = spectral_radius(g, tol)
    return greatest_real_root(poly, 0.0, bracket_high=rho + 1.0).value


def bound_report(
    g: ThresholdGraph, tol: float = DEFAULT_TOL, allow_inapplicable: bool = False
) -> BoundReport:
    """Compute rho, the four bounds, and the inequality root, with gaps.

    ``sandwich_ok`` asserts that every lower-side value (the three lower
    bounds and the inequality root) is at most rho and that rho is at
    most ``upper_cubic``, all within :data:`SANDWICH_TOL`.

    With ``allow_inapplicable`` the report degrades gracefully for
    graphs outside the standing assumptions (stars, complete graphs,
    c < 3): rho is still reported and every bound is None.  Otherwise
    such graphs raise :class:`PreconditionError`.
    """
    rho = spectral_radius(g, tol)
    try:
        require_applicable(g)
    except PreconditionError:
        if allow_inapplicable:
            return BoundReport(
                rho=rho,
                lower_cubic=None,
                lower_corollary=None,
                lower_quadratic=None,
                upper_cubic=None,
                inequality_root=None,
                sandwich_ok=None,
                gaps=None,
                applicable=False,
            )
        raise
    lo_cubic = lower_cubic(g)
    lo_corollary = lower_corollary(g)
    lo_quadratic = lower_quadratic(g)
    up_cubic = upper_cubic(g)
    ineq_root = inequality_root(g, rho=rho)
    lowers = (lo_cubic, lo_corollary, lo_quadratic, ineq_root)
    sandwich_ok = max(lowers) <= rho + SANDWICH_TOL and rho <= up_cubic + SANDWICH_TOL
    gaps = {
        "lower_cubic": rho - lo_cubic,
        "lower_corollary": rho - lo_corollary,
        "lower_quadratic": rho - lo_quadratic,
        "upper_cubic": up_cubic - rho,
        "inequality_root": rho - ineq_root,
    }
    return BoundReport(
        rho=rho,
        lower_cubic=lo_cubic,
        lower_corollary=lo_corollary,
        lower_quadratic=lo_quadratic,
        upper_cubic=up_cubic,
        inequality_root=ineq_root,
        sandwich_ok=sandwich_ok,
        gaps=gaps,
        applicable=True,
    )
