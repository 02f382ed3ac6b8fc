"""Input validation shared by all model layers.

Every public constructor and operation in this package rejects malformed
input by raising :class:`ValidationError`. Numerical checks use absolute
tolerances; the defaults are meant for analytically computed inputs.
"""

from __future__ import annotations

import math

# Construction-time tolerance for probability vectors built from analytic
# formulas or empirical frequencies (both land within a few ulp of exact).
PROB_ATOL = 1e-9

# Geometric tolerance for unit-norm checks on directions and pure states.
UNIT_ATOL = 1e-12


class ValidationError(ValueError):
    """An input violates its documented contract."""


def check_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError(f"{name} must be finite, got {x!r}")
    return x


def check_probability(p: float, name: str, atol: float = PROB_ATOL) -> float:
    p = check_finite(p, name)
    if p < -atol or p > 1.0 + atol:
        raise ValidationError(f"{name} must lie in [0, 1], got {p}")
    return p


def check_epsilon(epsilon: float) -> float:
    eps = check_finite(epsilon, "epsilon")
    if eps < 0.0 or eps > 1.0:
        raise ValidationError(f"epsilon must lie in [0, 1], got {eps}")
    return eps


def check_unit_interval_sum(total: float, name: str, atol: float = PROB_ATOL) -> None:
    if abs(total - 1.0) > atol:
        raise ValidationError(f"{name} must sum to 1, got {total}")


def check_polar_angle(theta: float, name: str = "theta") -> float:
    theta = check_finite(theta, name)
    if theta < 0.0 or theta > math.pi:
        raise ValidationError(f"{name} must lie in [0, pi] radians, got {theta}")
    return theta


def check_azimuthal_angle(phi: float, name: str = "phi") -> float:
    phi = check_finite(phi, name)
    if phi < 0.0 or phi >= 2.0 * math.pi:
        raise ValidationError(f"{name} must lie in [0, 2*pi) radians, got {phi}")
    return phi


def check_trials(trials: int) -> int:
    if not isinstance(trials, int) or isinstance(trials, bool):
        raise ValidationError(f"trials must be an integer, got {trials!r}")
    if trials < 1:
        raise ValidationError(f"trials must be >= 1, got {trials}")
    return trials


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValidationError(f"seed must be an integer, got {seed!r}")
    if seed < 0:
        raise ValidationError(f"seed must be >= 0, got {seed}")
    return seed
