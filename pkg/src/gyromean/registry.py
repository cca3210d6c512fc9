"""Property registry for the verification campaign.

Each registered property verifies one statement (or a small family sharing a
source anchor) over seeded random samples and reports the worst violation it
observed.  The campaign requires every canonical anchor to be covered; a
missing anchor is a structural failure of the harness itself, independent of
any numerical outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

# Canonical anchors, one per source statement the campaign must exercise.
REQUIRED_ANCHORS = (
    # two-variable means
    "geometric-mean-block-characterization",
    "geodesic-curve",
    "riccati-equation",
    "karcher-equation",
    "mean-bijection",
    # spectral mean and the semi-metric
    "spectral-curve",
    "spectral-defining-equation",
    "spectral-mean-algebra",
    "spectral-mean-bounds",
    "semimetric-axioms",
    "semimetric-invariance",
    "spectral-midpoint",
    "triangle-counterexample",
    # order inequalities
    "loewner-heinz",
    "congruence-inversion-order",
    "furuta",
    "contraction-lemma",
    "power-chain",
    "five-way-equivalence",
    "spectral-ando-hiai",
    "ando-hiai",
    "sufficient-conditions",
    # gyrogroups and gyrolines
    "gyrogroup-axioms",
    "cooperation",
    "gyrovector-axioms",
    "ball-gyrogroups",
    "cone-gyrovector-space",
    "cone-gyration",
    "density-gyrovector-space",
    "gyroline-cogyroline-defs",
    "cone-gyrolines",
    "density-gyrolines",
    "gyration-trace-invariance",
    # 2x2 closed forms and qubits
    "difference-quotient-map",
    "two-by-two-mean-combination",
    "block-norm-bound",
    "sum-norm-bound",
    "det-shift-identity",
    "two-by-two-spectral-closed-form",
    "qubit-state",
    "qubit-eigenvalues",
    "qubit-inverse-normalization",
    "qubit-mean-combination",
    "mean-eigenvalue-rewrite",
    "qubit-spectral-closed-form",
    "gyromidpoint-norm-bound",
    # Frobenius variant and majorization
    "frobenius-semimetric",
    "majorization-definitions",
    "semimetric-riemannian-bound",
)

# Anchors that may appear in addition to the required ones.
EXTRA_ANCHORS = ("thompson-metric",)


@dataclass(frozen=True)
class PropertyRecord:
    """One row of a campaign report."""

    property_id: str
    anchor: str
    samples: int
    premise_held: int
    max_violation: float
    threshold: float
    passed: bool
    asserted: bool = True
    note: str = ""

    def to_dict(self) -> dict:
        threshold = float(self.threshold)
        return {
            "property_id": self.property_id,
            "anchor": self.anchor,
            "samples": int(self.samples),
            "premise_held": int(self.premise_held),
            "max_violation": float(self.max_violation),
            # non-finite only for recorded-only properties; keep JSON strict
            "threshold": threshold if threshold == threshold and abs(threshold) != float("inf") else None,
            "passed": bool(self.passed),
            "asserted": bool(self.asserted),
            "note": self.note,
        }


@dataclass(frozen=True)
class PropertySpec:
    property_id: str
    anchor: str
    runner: Callable
    asserted: bool = True
    min_premise: int = 0


_REGISTRY: dict[str, PropertySpec] = {}


def prop(property_id: str, anchor: str, asserted: bool = True,
         min_premise: int = 0):
    """Register a campaign property runner.

    The runner receives the campaign config and returns
    (samples, premise_held, max_violation, threshold, note).
    """
    if anchor not in REQUIRED_ANCHORS and anchor not in EXTRA_ANCHORS:
        raise ValueError(f"unknown anchor {anchor!r} for property {property_id!r}")

    def register(fn):
        if property_id in _REGISTRY:
            raise ValueError(f"duplicate property id {property_id!r}")
        _REGISTRY[property_id] = PropertySpec(property_id, anchor, fn,
                                              asserted, min_premise)
        return fn

    return register


def all_properties() -> list[PropertySpec]:
    from . import properties  # noqa: F401  (populates the registry on import)

    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def run_property(spec: PropertySpec, config) -> PropertyRecord:
    samples, premise_held, max_violation, threshold, note = spec.runner(config)
    passed = True
    if spec.asserted:
        passed = bool(max_violation <= threshold)
        # the premise quota cannot exceed what the trial budget allows
        quota = min(spec.min_premise, getattr(config, "trials", spec.min_premise))
        if spec.min_premise and premise_held < quota:
            passed = False
            note = (note + "; " if note else "") + (
                f"sampler starvation: only {premise_held} premise-held samples")
    return PropertyRecord(
        property_id=spec.property_id,
        anchor=spec.anchor,
        samples=int(samples),
        premise_held=int(premise_held),
        max_violation=float(max_violation),
        threshold=float(threshold),
        passed=passed,
        asserted=spec.asserted,
        note=note,
    )
