"""Dichotomic tests, outcome statistics, and their operational classification.

A *test* is a yes/no experiment on a physical entity in a given state. Two
tests performed together form a joint experiment with four outcomes,

    x1 = (yes, yes), x2 = (yes, no), x3 = (no, yes), x4 = (no, no).

Given the stand-alone outcome distributions of the two tests and the joint
four-outcome distribution, this module decides three operational questions:

* **compatibility**: the stand-alone probabilities are recovered as marginals
  of the joint experiment,

      P(left, yes)  = p1 + p2        P(left, no)  = p3 + p4
      P(right, yes) = p1 + p3        P(right, no) = p2 + p4

* **separability**: the joint probabilities factor into products of the
  stand-alone ones, p1 = P(left, yes) * P(right, yes) and the three
  analogous equations. Separability implies compatibility; among compatible
  pairs it is equivalent to the product criterion p1*p4 == p2*p3.

* **classicality**: a test (or joint test) is classical in a state when a
  single outcome occurs with certainty.

All predicates compare residuals of the defining equations against an
absolute tolerance. The default suits analytic inputs; empirical
frequencies need a caller-supplied statistical tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .validation import (
    ValidationError,
    check_finite,
    check_probability,
    check_unit_interval_sum,
)

Residuals = tuple[float, float, float, float]


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Absolute tolerance on probability residuals.

    ``eps_prob`` defaults to 1e-9, appropriate for analytically computed
    distributions. Classify Monte Carlo frequencies with a tolerance sized
    to the sampling error (a few standard errors); this module makes no
    assumption about sample sizes.
    """

    eps_prob: float = 1e-9

    def __post_init__(self) -> None:
        check_finite(self.eps_prob, "eps_prob")
        if self.eps_prob <= 0.0:
            raise ValidationError(f"eps_prob must be > 0, got {self.eps_prob}")


DEFAULT_TOLERANCE = Tolerance()


def _eps(tol: Tolerance | float) -> float:
    if isinstance(tol, Tolerance):
        return tol.eps_prob
    return Tolerance(float(tol)).eps_prob


@dataclass(frozen=True, slots=True)
class OutcomeProb:
    """Bernoulli distribution over {yes, no} for one test in one state."""

    p_yes: float
    p_no: float

    def __post_init__(self) -> None:
        check_probability(self.p_yes, "p_yes")
        check_probability(self.p_no, "p_no")
        check_unit_interval_sum(self.p_yes + self.p_no, "p_yes + p_no")

    @classmethod
    def from_yes(cls, p_yes: float) -> "OutcomeProb":
        p_yes = check_probability(p_yes, "p_yes")
        return cls(p_yes, 1.0 - p_yes)


@dataclass(frozen=True, slots=True)
class JointOutcomeProb:
    """Distribution over the four outcomes of a joint test.

    The labeling is fixed: ``p1`` is (yes, yes), ``p2`` is (yes, no),
    ``p3`` is (no, yes), ``p4`` is (no, no), with yes/no of the left test
    first in each pair.
    """

    p1: float
    p2: float
    p3: float
    p4: float

    def __post_init__(self) -> None:
        for name in ("p1", "p2", "p3", "p4"):
            check_probability(getattr(self, name), name)
        check_unit_interval_sum(self.p1 + self.p2 + self.p3 + self.p4, "p1 + p2 + p3 + p4")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p1, self.p2, self.p3, self.p4)


@dataclass(frozen=True, slots=True)
class ExperimentTriple:
    """The data the classification predicates consume.

    ``left`` and ``right`` are the stand-alone outcome distributions of each
    test measured alone; ``joint`` is the four-outcome distribution of the
    joint experiment. No cross-constraint is imposed here: whether the
    marginals of ``joint`` reproduce ``left`` and ``right`` is exactly the
    compatibility question, a property to test, not an invariant.
    """

    left: OutcomeProb
    right: OutcomeProb
    joint: JointOutcomeProb


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    """Aggregate answer of all predicates for one experiment triple.

    ``separated`` is reported true only when ``compatible`` also holds;
    separability implies compatibility, so a triple whose product equations
    hold but whose marginals do not match is reported as neither.
    """

    compatible: bool
    separated: bool
    classical_left: bool
    classical_right: bool
    classical_joint: bool
    compatibility_residuals: Residuals
    separability_residuals: Residuals


def compatibility_residuals(t: ExperimentTriple) -> Residuals:
    """Absolute residuals of the four marginal-recovery equations."""
    j = t.joint
    return (
        abs(t.left.p_yes - (j.p1 + j.p2)),
        abs(t.left.p_no - (j.p3 + j.p4)),
        abs(t.right.p_yes - (j.p1 + j.p3)),
        abs(t.right.p_no - (j.p2 + j.p4)),
    )


def separability_residuals(t: ExperimentTriple) -> Residuals:
    """Absolute residuals of the four product equations."""
    j = t.joint
    return (
        abs(j.p1 - t.left.p_yes * t.right.p_yes),
        abs(j.p2 - t.left.p_yes * t.right.p_no),
        abs(j.p3 - t.left.p_no * t.right.p_yes),
        abs(j.p4 - t.left.p_no * t.right.p_no),
    )


def check_compatibility(
    t: ExperimentTriple, tol: Tolerance | float = DEFAULT_TOLERANCE
) -> tuple[bool, Residuals]:
    """Decide whether the two tests are compatible in this state.

    Returns the verdict together with the four residuals, which are
    reported regardless of the verdict.
    """
    eps = _eps(tol)
    residuals = compatibility_residuals(t)
    return (max(residuals) <= eps, residuals)


def check_separability(
    t: ExperimentTriple, tol: Tolerance | float = DEFAULT_TOLERANCE
) -> tuple[bool, Residuals]:
    """Decide whether the two tests are separated in this state."""
    eps = _eps(tol)
    residuals = separability_residuals(t)
    return (max(residuals) <= eps, residuals)


def check_product_criterion(
    j: JointOutcomeProb, tol: Tolerance | float = DEFAULT_TOLERANCE
) -> bool:
    """Test p1*p4 == p2*p3 within tolerance.

    For a joint distribution already known compatible with its marginals
    this is equivalent to separability; on its own it is only the
    necessary half.
    """
    return abs(j.p1 * j.p4 - j.p2 * j.p3) <= _eps(tol)


def is_classical_test(o: OutcomeProb, tol: Tolerance | float = DEFAULT_TOLERANCE) -> bool:
    """True when exactly one outcome is possible in this state."""
    eps = _eps(tol)
    return o.p_yes >= 1.0 - eps or o.p_no >= 1.0 - eps


def is_classical_joint(j: JointOutcomeProb, tol: Tolerance | float = DEFAULT_TOLERANCE) -> bool:
    """True when a single outcome pair occurs with certainty."""
    eps = _eps(tol)
    return max(j.as_tuple()) >= 1.0 - eps


def classify(
    t: ExperimentTriple, tol: Tolerance | float = DEFAULT_TOLERANCE
) -> ClassificationReport:
    """Run every predicate on one experiment triple."""
    compatible, comp_res = check_compatibility(t, tol)
    separated_raw, sep_res = check_separability(t, tol)
    return ClassificationReport(
        compatible=compatible,
        separated=separated_raw and compatible,
        classical_left=is_classical_test(t.left, tol),
        classical_right=is_classical_test(t.right, tol),
        classical_joint=is_classical_joint(t.joint, tol),
        compatibility_residuals=comp_res,
        separability_residuals=sep_res,
    )


VESSEL_KINDS = ("alpha_alpha", "alpha_beta")


def vessels_scenario(kind: str) -> ExperimentTriple:
    """Connected-vessels-of-water scenarios with 20 liters split over two vessels.

    Each single test alone succeeds with certainty, yet the joint experiment
    couples them through the shared water:

    * ``alpha_alpha``: both sides try to draw more than 10 liters at once.
      The (yes, yes) outcome is impossible; by left/right symmetry of the
      split we put probability 1/2 on each of (yes, no) and (no, yes).
    * ``alpha_beta``: the right side instead grabs a random amount first and
      checks transparency, which always succeeds; the left side then gets
      more than 10 liters only half the time. Outcomes (yes, yes) and
      (no, yes) each carry probability 1/2.

    Both triples have deterministic (classical) marginals but fail
    compatibility: no single four-outcome experiment reproduces them.
    """
    if kind == "alpha_alpha":
        joint = JointOutcomeProb(0.0, 0.5, 0.5, 0.0)
    elif kind == "alpha_beta":
        joint = JointOutcomeProb(0.5, 0.0, 0.5, 0.0)
    else:
        raise ValidationError(f"unknown vessels scenario {kind!r}, expected one of {VESSEL_KINDS}")
    certain_yes = OutcomeProb(1.0, 0.0)
    return ExperimentTriple(left=certain_yes, right=certain_yes, joint=joint)
