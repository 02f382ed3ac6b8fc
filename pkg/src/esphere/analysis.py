"""Correlations, CHSH values, and classification scans over the model grid.

The correlation of a joint test is E = p1 + p4 - p2 - p3. For the singlet
preparation it collapses to a one-parameter law: with c = u1 . u2,

    E = clamp(-c / epsilon, -1, +1)      for epsilon > 0
    E = +1 if c <= 0 else -1             for epsilon = 0

so epsilon = 1 gives the quantum singlet correlation -c and smaller
epsilon steepens the curve until it saturates. Plugging the law into the
CHSH combination at the canonical coplanar angles gives

    S(epsilon) = min(4, 2 * sqrt(2) / epsilon)

interpolating from the quantum value 2*sqrt(2) at epsilon = 1 up to the
algebraic maximum 4 reached for every epsilon <= sqrt(2)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .operational import (
    DEFAULT_TOLERANCE,
    Tolerance,
    classify,
)
from .singlet import experiment_triple, joint_distribution_analytic
from .sphere import Direction
from .validation import ValidationError, check_epsilon, check_finite

# Coplanar polar angles (left pair, right pair) realizing both extremes of
# the CHSH law: 2*sqrt(2) at epsilon = 1 and 4 at epsilon = 0.
CANONICAL_CHSH_ANGLES = (0.0, 0.5 * math.pi, 0.25 * math.pi, 0.75 * math.pi)


def correlation(u1: Direction, u2: Direction, epsilon: float) -> float:
    """E = p1 + p4 - p2 - p3 of the analytic singlet joint distribution."""
    j = joint_distribution_analytic(u1, u2, epsilon)
    return (j.p1 + j.p4) - (j.p2 + j.p3)


def correlation_closed_form(u1: Direction, u2: Direction, epsilon: float) -> float:
    """The same correlation law written without the four-outcome detour.

    Kept separate from :func:`correlation` on purpose: the two routes are
    independent derivations and are checked against each other in tests.
    """
    epsilon = check_epsilon(epsilon)
    c = u1.dot(u2)
    if epsilon == 0.0:
        return 1.0 if c <= 0.0 else -1.0
    return max(-1.0, min(1.0, -c / epsilon))


@dataclass(frozen=True, slots=True)
class ChshSetup:
    """Two measurement settings per side and one elastic length."""

    a: Direction
    a_prime: Direction
    b: Direction
    b_prime: Direction
    epsilon: float

    def __post_init__(self) -> None:
        check_epsilon(self.epsilon)

    @classmethod
    def coplanar(
        cls,
        epsilon: float,
        a: float = CANONICAL_CHSH_ANGLES[0],
        a_prime: float = CANONICAL_CHSH_ANGLES[1],
        b: float = CANONICAL_CHSH_ANGLES[2],
        b_prime: float = CANONICAL_CHSH_ANGLES[3],
    ) -> "ChshSetup":
        """Settings in the phi = 0 plane, given by polar angles in radians.

        The defaults are the canonical angles (0, pi/2, pi/4, 3*pi/4).
        """
        return cls(
            a=Direction.from_angles(a),
            a_prime=Direction.from_angles(a_prime),
            b=Direction.from_angles(b),
            b_prime=Direction.from_angles(b_prime),
            epsilon=epsilon,
        )


@dataclass(frozen=True, slots=True)
class ChshResult:
    """The four correlations and the CHSH value they combine into."""

    e_ab: float
    e_ab_prime: float
    e_a_prime_b: float
    e_a_prime_b_prime: float
    s: float


def chsh(setup: ChshSetup) -> ChshResult:
    """S = |E(a,b) - E(a,b') + E(a',b) + E(a',b')|."""
    e_ab = correlation(setup.a, setup.b, setup.epsilon)
    e_ab_prime = correlation(setup.a, setup.b_prime, setup.epsilon)
    e_a_prime_b = correlation(setup.a_prime, setup.b, setup.epsilon)
    e_a_prime_b_prime = correlation(setup.a_prime, setup.b_prime, setup.epsilon)
    s = abs(e_ab - e_ab_prime + e_a_prime_b + e_a_prime_b_prime)
    return ChshResult(
        e_ab=e_ab,
        e_ab_prime=e_ab_prime,
        e_a_prime_b=e_a_prime_b,
        e_a_prime_b_prime=e_a_prime_b_prime,
        s=s,
    )


@dataclass(frozen=True, slots=True)
class ScanRow:
    """One grid point of the (epsilon, theta) classification landscape.

    Field order fixes the CSV column order emitted by the command line;
    ``correlation`` is rendered under the header ``E``.
    """

    epsilon: float
    theta: float
    p1: float
    p2: float
    p3: float
    p4: float
    correlation: float
    compatible: bool
    separated: bool
    classical_joint: bool


def scan(
    epsilons: list[float],
    thetas: list[float],
    tol: Tolerance | float = DEFAULT_TOLERANCE,
) -> list[ScanRow]:
    """Classify the singlet joint test over an (epsilon, theta) grid.

    Directions are placed in a common plane, separated by the relative
    angle theta; only that angle matters for the singlet statistics. Rows
    are emitted in grid order, epsilon outermost.
    """
    epsilons = [check_epsilon(e) for e in epsilons]
    thetas = [check_finite(t, "theta") for t in thetas]
    for t in thetas:
        if t < 0.0 or t > math.pi:
            raise ValidationError(f"theta grid values must lie in [0, pi], got {t}")
    rows: list[ScanRow] = []
    pole = Direction.from_angles(0.0)
    for eps in epsilons:
        for theta in thetas:
            u2 = Direction.from_angles(theta)
            triple = experiment_triple(pole, u2, eps)
            report = classify(triple, tol)
            j = triple.joint
            rows.append(
                ScanRow(
                    epsilon=eps,
                    theta=theta,
                    p1=j.p1,
                    p2=j.p2,
                    p3=j.p3,
                    p4=j.p4,
                    correlation=(j.p1 + j.p4) - (j.p2 + j.p3),
                    compatible=report.compatible,
                    separated=report.separated,
                    classical_joint=report.classical_joint,
                )
            )
    return rows
