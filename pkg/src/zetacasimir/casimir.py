"""Closed-form renormalized Casimir stress-energy and plate pressure.

Between the plates the tensor is

    A diag(-1, 1, 1, -3) + (1 - 6 xi) B(x3) diag(-1, 1, 1, 0),

with A = pi^2/(1440 a^4) and B(x3) the closed trigonometric form; the
Hurwitz-zeta ("Milton") representation of B is provided as an
independent cross-check.  Outside the plates the tensor is the
single-plate a -> infinity limit, with the distance measured to the
adjacent plate face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .hurwitz import hurwitz_zeta
from .modesum import EvalPoint, PlateConfig, Region, TensorDiag

_MIN_PLATE_FRACTION = 1e-6  # below this x3/a the Hurwitz route degrades


@dataclass(frozen=True)
class RenormalizedCoefficients:
    A: float
    B: float


@dataclass(frozen=True)
class PressureVector:
    """Force per unit area on a plate; only the normal component is
    nonzero for this geometry."""

    p1: float
    p2: float
    p3: float


def _require_between(cfg: PlateConfig, p: EvalPoint) -> None:
    if cfg.region is not Region.BETWEEN:
        raise DomainError("operation is defined between the plates")
    if not (0.0 < p.x3 < cfg.a):
        raise DomainError(
            f"x3 = {p.x3} must lie strictly inside (0, {cfg.a}); the "
            "coefficient B diverges on the plates"
        )


def coefficient_A(a: float) -> float:
    return math.pi**2 / (1440.0 * a**4)


def coefficient_B(a: float, x3: float) -> float:
    """Position-dependent coefficient, sine form."""
    sin2 = math.sin(math.pi * x3 / a) ** 2
    return math.pi**2 / (48.0 * a**4) * (3.0 - 2.0 * sin2) / sin2**2


def coefficient_B_cosine(a: float, x3: float) -> float:
    """Equivalent cosine form of B, kept separate as a consistency check."""
    c = math.cos(2.0 * math.pi * x3 / a)
    return math.pi**2 / (12.0 * a**4) * (2.0 + c) / (1.0 - c) ** 2


def renormalized_coefficients(cfg: PlateConfig, p: EvalPoint) -> RenormalizedCoefficients:
    """A and B(x3), with the two closed forms of B cross-asserted."""
    _require_between(cfg, p)
    b_sin = coefficient_B(cfg.a, p.x3)
    b_cos = coefficient_B_cosine(cfg.a, p.x3)
    if abs(b_sin - b_cos) > 1e-12 * abs(b_sin):
        raise DomainError(
            f"closed forms of B disagree at x3 = {p.x3}: {b_sin} vs {b_cos}"
        )
    return RenormalizedCoefficients(A=coefficient_A(cfg.a), B=b_sin)


def tensor_between_plates(cfg: PlateConfig, p: EvalPoint) -> TensorDiag:
    coeffs = renormalized_coefficients(cfg, p)
    w = (1.0 - 6.0 * cfg.xi) * coeffs.B
    return TensorDiag(
        t00=-coeffs.A - w,
        t11=coeffs.A + w,
        t22=coeffs.A + w,
        t33=-3.0 * coeffs.A,
    )


def milton_B(cfg: PlateConfig, p: EvalPoint) -> float:
    """Hurwitz-zeta representation of B(x3); must coincide with the
    trigonometric closed form."""
    _require_between(cfg, p)
    q = p.x3 / cfg.a
    if q < _MIN_PLATE_FRACTION or 1.0 - q < _MIN_PLATE_FRACTION:
        raise DomainError(
            f"x3/a = {q} too close to a plate for the Hurwitz route"
        )
    z4 = hurwitz_zeta(4.0, q).real + hurwitz_zeta(4.0, 1.0 - q).real
    return z4 / (16.0 * math.pi**2 * cfg.a**4)


def tensor_outside(cfg: PlateConfig, p: EvalPoint) -> TensorDiag:
    """Tensor in the outer half-spaces; distance is to the adjacent plate."""
    if cfg.region is Region.LEFT_OUTSIDE:
        if p.x3 >= 0.0:
            raise DomainError(f"left-outside region requires x3 < 0, got {p.x3}")
        dist = -p.x3
    elif cfg.region is Region.RIGHT_OUTSIDE:
        if p.x3 <= cfg.a:
            raise DomainError(
                f"right-outside region requires x3 > a = {cfg.a}, got {p.x3}"
            )
        dist = p.x3 - cfg.a
    else:
        raise DomainError("tensor_outside requires an outside region")
    w = (1.0 - 6.0 * cfg.xi) / (16.0 * math.pi**2 * dist**4)
    return TensorDiag(t00=-w, t11=w, t22=w, t33=0.0)


def single_plate_limit_check(
    cfg: PlateConfig, p: EvalPoint, a_sequence: list[float]
) -> list[float]:
    """Deviation |B_a(x3) * 16 pi^2 x3^4 - 1| along an increasing sequence
    of separations; the leading correction is (pi x3/a)^4 / 45, so the
    deviation decays like a^-4."""
    if p.x3 <= 0.0:
        raise DomainError("the limit check needs a fixed x3 > 0")
    if any(a <= p.x3 for a in a_sequence):
        raise DomainError("every separation must exceed x3")
    if any(b <= a for a, b in zip(a_sequence, a_sequence[1:])):
        raise DomainError("a_sequence must be strictly increasing")
    return [
        abs(coefficient_B(a, p.x3) * 16.0 * math.pi**2 * p.x3**4 - 1.0)
        for a in a_sequence
    ]


def pressure(cfg: PlateConfig) -> tuple[PressureVector, PressureVector]:
    """Force per unit area on the plates at x3 = 0 and x3 = a.

    The inner region contributes t33 = -3A, the outer region zero; with
    the normals of the two faces this gives (0, 0, +pi^2/(480 a^4)) at
    x3 = 0 and the opposite vector at x3 = a (mutual attraction).
    """
    t33_in = -3.0 * coefficient_A(cfg.a)
    t33_out = 0.0
    p_at_0 = PressureVector(0.0, 0.0, t33_out - t33_in)
    p_at_a = PressureVector(0.0, 0.0, t33_in - t33_out)
    return p_at_0, p_at_a
