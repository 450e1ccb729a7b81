"""Seeded randomized verification of the identities and the solver.

Every trial draws an arc partition and radius, builds the polygon, and
checks the general identity, every embedded quadrilateral relation, the
last-corner law-of-cosines step, and the diameter-solver round trip.
Failures are data, not exceptions, and the whole run is reproducible:
the generator is splitmix64 (a 64-bit Weyl counter hashed through two
xor-multiply rounds), implemented in pure integer arithmetic so streams
are identical on every platform, and each trial owns a disjoint
substream reached by jumping the counter, so results do not depend on
execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .geometry import CentralAngles, side_lengths, vertices_from_angles
from .identity import (
    corner_identity_residual,
    evaluate_general,
    nested_quadrilateral_check,
)
from .solver import solve_diameter

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

#: Generator draws reserved per trial; bounds the substream jump.
_TRIAL_STRIDE = 256

#: Per-trial probability of forcing one arc below the degeneracy
#: threshold, probing the coincident-vertex regime where cancellation
#: is worst.
_STRESS_PROBABILITY = 0.1
_STRESS_ARC = 1e-6

GENERATOR_NAME = "splitmix64"


class SplitMix64:
    """Portable 64-bit generator with O(1) substream jumps."""

    __slots__ = ("state",)

    def __init__(self, state: int) -> None:
        self.state = state & _MASK64

    @classmethod
    def for_trial(cls, seed: int, trial: int) -> SplitMix64:
        """Substream for one trial: the counter jumped past all earlier ones."""
        return cls(seed + trial * _TRIAL_STRIDE * _GAMMA)

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_positive_float(self) -> float:
        """Uniform in (0, 1]; never returns zero."""
        return ((self.next_u64() >> 11) + 1) * 2.0**-53

    def next_below(self, n: int) -> int:
        return self.next_u64() % n


@dataclass(frozen=True, slots=True)
class FuzzConfig:
    trials: int = 100
    n_min: int = 3
    n_max: int = 12
    radius_min: float = 0.5
    radius_max: float = 50.0
    seed: int = 42
    tolerance_rel: float = 1e-9

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if not 3 <= self.n_min <= self.n_max <= 64:
            raise DomainError("need 3 <= n_min <= n_max <= 64")
        if not 0.0 < self.radius_min <= self.radius_max:
            raise DomainError("need 0 < radius_min <= radius_max")
        if self.tolerance_rel <= 0.0:
            raise DomainError("tolerance_rel must be positive")


@dataclass(frozen=True, slots=True)
class FuzzFailure:
    description: str
    residual: float


@dataclass(frozen=True, slots=True)
class FuzzReport:
    generator: str
    seed: int
    trials_run: int
    worst_residual_rel: float
    worst_case_seed_state: int
    failures: tuple[FuzzFailure, ...]
    histogram: dict[str, int]


def random_angles(n: int, gen: SplitMix64) -> CentralAngles:
    """n-1 strictly positive arcs summing to the half turn.

    Draws n-1 positive uniform variates and rescales them to total pi;
    deterministic for a given generator state.
    """
    if n < 3:
        raise DomainError("need at least 3 vertices")
    variates = [gen.next_positive_float() for _ in range(n - 1)]
    total = math.fsum(variates)
    return CentralAngles(math.pi * u / total for u in variates)


def _stressed(angles: CentralAngles, gen: SplitMix64) -> CentralAngles:
    """Force one arc below the degeneracy threshold, keeping the sum."""
    arcs = list(angles.arcs)
    target = gen.next_below(len(arcs))
    tiny = gen.next_positive_float() * _STRESS_ARC
    others = math.pi - arcs[target]
    if others <= 0.0:
        return angles  # one arc already rounded to the full half turn
    factor = (math.pi - tiny) / others
    rescaled = [tiny if i == target else a * factor for i, a in enumerate(arcs)]
    return CentralAngles(rescaled)


def _decade(residual: float) -> str:
    if residual <= 0.0:
        return "0"
    return f"1e{math.floor(math.log10(residual))}"


def run_fuzz(config: FuzzConfig) -> FuzzReport:
    """Run every check over ``config.trials`` seeded random polygons."""
    worst = 0.0
    worst_state = SplitMix64.for_trial(config.seed, 0).state
    failures: list[FuzzFailure] = []
    histogram: dict[str, int] = {}

    for trial in range(config.trials):
        gen = SplitMix64.for_trial(config.seed, trial)
        trial_state = gen.state
        n = config.n_min + gen.next_below(config.n_max - config.n_min + 1)
        radius = config.radius_min + gen.next_float() * (
            config.radius_max - config.radius_min
        )
        angles = random_angles(n, gen)
        if gen.next_float() < _STRESS_PROBABILITY:
            angles = _stressed(angles, gen)
        poly = vertices_from_angles(angles, radius)

        checks = [("general", evaluate_general(poly).residual_rel)]
        for k in range(1, n - 2):
            checks.append(
                (f"nested k={k}", nested_quadrilateral_check(poly, k).residual_rel)
            )
        if n >= 4:
            checks.append(("corner", corner_identity_residual(poly)))
        solution = solve_diameter(side_lengths(poly))
        target_d = 2.0 * radius
        checks.append(("solver round trip", abs(solution.d - target_d) / target_d))

        for name, residual in checks:
            bucket = _decade(residual)
            histogram[bucket] = histogram.get(bucket, 0) + 1
            if residual > worst:
                worst = residual
                worst_state = trial_state
            if residual > config.tolerance_rel:
                failures.append(
                    FuzzFailure(
                        description=(
                            f"trial={trial} n={n} R={radius!r} "
                            f"check={name} state={trial_state}"
                        ),
                        residual=residual,
                    )
                )

    ordered = dict(
        sorted(histogram.items(), key=lambda kv: (kv[0] != "0", _bucket_order(kv[0])))
    )
    return FuzzReport(
        generator=GENERATOR_NAME,
        seed=config.seed,
        trials_run=config.trials,
        worst_residual_rel=worst,
        worst_case_seed_state=worst_state,
        failures=tuple(failures),
        histogram=ordered,
    )


def _bucket_order(key: str) -> int:
    return 0 if key == "0" else int(key[2:])
