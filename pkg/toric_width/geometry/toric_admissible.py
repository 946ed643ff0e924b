#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Sampled reparametrizing profiles f with flat ends and 0 <= f' < 1.

This is the only floating-point module of the package. Nothing computed
here flows back into the exact engine.
"""

import colorlog
import numpy as np

from dataclasses import dataclass
from typing import NamedTuple

from toric_width.toric_errors import InfeasibleProfileError, ProfileError

log = colorlog.getLogger(__name__)

TOLERANCE = 1e-9
MIN_SAMPLES = 100


class QuinticRamp:
    """
    S(s) = 6s^5 - 15s^4 + 10s^3, peak slope 15/8.
    """
    name = "quintic"
    peak_slope = 15 / 8

    def __call__(self, s):
        s = np.clip(s, 0.0, 1.0)
        return s ** 3 * (10.0 - 15.0 * s + 6.0 * s ** 2)


class ShoulderRamp:
    """
    Linear ramp whose two ends are blended into the plateaus over a
    relative width `shoulder`; the slope climbs along a quintic smoothstep
    so the profile stays C^2. Peak slope 1 / (1 - shoulder).
    """
    name = "shoulder"

    def __init__(self, shoulder=0.01):
        if not 0 < shoulder < 0.5:
            raise ProfileError(f"Shoulder width must lie in (0, 0.5), got "
                               f"{shoulder}.")
        self.shoulder = shoulder
        self.peak_slope = 1.0 / (1.0 - shoulder)

    def _blend(self, y):
        # integral of the quintic smoothstep, 1/2 at y = 1
        return self.peak_slope * self.shoulder * (
            y ** 6 - 3.0 * y ** 5 + 2.5 * y ** 4)

    def __call__(self, s):
        s = np.clip(np.asarray(s, dtype=float), 0.0, 1.0)
        width = self.shoulder
        rising = self._blend(np.minimum(s / width, 1.0))
        falling = 1.0 - self._blend(np.minimum((1.0 - s) / width, 1.0))
        middle = self.peak_slope * (width / 2.0 + (s - width))
        return np.where(s < width, rising,
                        np.where(s > 1.0 - width, falling, middle))


RAMPS = {
    QuinticRamp.name: QuinticRamp,
    ShoulderRamp.name: ShoulderRamp,
}


@dataclass(frozen=True, eq=False)
class Profile:
    domain_min: float
    domain_max: float
    epsilon: float
    delta: float
    xs: np.ndarray
    fs: np.ndarray
    ramp: str = ShoulderRamp.name

    @property
    def rise(self):
        return (self.domain_max - self.domain_min) - self.delta

    @property
    def samples(self):
        return list(zip(self.xs.tolist(), self.fs.tolist()))


class ProfileCheck(NamedTuple):
    plateau_ok: bool
    monotone_ok: bool
    slope_ok: bool
    max_slope: float


def feasibility_ratio(domain_min, domain_max, epsilon, delta, ramp):
    """
    (max - min - delta) / (max - min - 2 epsilon) * S_max; must be < 1.
    """
    run = (domain_max - domain_min) - 2.0 * epsilon
    if run <= 0:
        return float("inf")
    return ((domain_max - domain_min) - delta) / run * ramp.peak_slope


def build_profile(domain_min, domain_max, epsilon, delta, sample_count,
                  ramp=None):
    """
    Sample f(x) = rise * S((x - min - eps) / (max - min - 2 eps)) with exact
    plateaus f = 0 on [min, min + eps] and f = rise on [max - eps, max],
    where rise = (max - min) - delta.

    Args:
        domain_min (float): left end of the domain.
        domain_max (float): right end, > domain_min.
        epsilon (float): plateau width, > 0.
        delta (float): rise deficit, > 0.
        sample_count (int): uniform grid size, >= 100.
        ramp: ramp object with `peak_slope` and a vectorised `__call__`;
            defaults to ShoulderRamp().
    """
    ramp = ramp or ShoulderRamp()
    if not domain_max > domain_min:
        raise ProfileError(f"Empty domain [{domain_min}, {domain_max}].")
    if epsilon <= 0 or delta <= 0:
        raise ProfileError(f"epsilon and delta must be positive, got "
                           f"epsilon={epsilon}, delta={delta}.")
    if sample_count < MIN_SAMPLES:
        raise ProfileError(f"At least {MIN_SAMPLES} samples are required.")
    span = domain_max - domain_min
    rise = span - delta
    if rise <= 0:
        raise ProfileError(f"delta={delta} leaves no rise over a span of "
                           f"{span}.")
    ratio = feasibility_ratio(domain_min, domain_max, epsilon, delta, ramp)
    if not ratio < 1.0:
        raise InfeasibleProfileError(
            f"(max - min - delta) / (max - min - 2*epsilon) * S_max = "
            f"{ratio:.6f} must be < 1 (ramp '{ramp.name}', S_max = "
            f"{ramp.peak_slope:.6f})."
        )

    xs = np.linspace(domain_min, domain_max, sample_count)
    run = span - 2.0 * epsilon
    fs = rise * ramp((xs - domain_min - epsilon) / run)
    fs[xs <= domain_min + epsilon] = 0.0
    fs[xs >= domain_max - epsilon] = rise
    log.debug(f"Profile on [{domain_min}, {domain_max}]: rise {rise}, "
              f"feasibility ratio {ratio:.6f}.")
    return Profile(float(domain_min), float(domain_max), float(epsilon),
                   float(delta), xs, fs, ramp.name)


def verify_profile(profile):
    """
    Recompute the profile invariants from the samples alone.
    """
    xs, fs = profile.xs, profile.fs
    if len(xs) < 3:
        raise ProfileError("At least three samples are needed to verify a "
                           "profile.")
    low = xs <= profile.domain_min + profile.epsilon
    high = xs >= profile.domain_max - profile.epsilon
    plateau_ok = bool(np.all(np.abs(fs[low]) <= TOLERANCE)
                      and np.all(np.abs(fs[high] - profile.rise)
                                 <= TOLERANCE))
    monotone_ok = bool(np.all(np.diff(fs) >= -TOLERANCE))
    central = (fs[2:] - fs[:-2]) / (xs[2:] - xs[:-2])
    max_slope = float(np.max(central))
    return ProfileCheck(plateau_ok, monotone_ok, max_slope < 1.0, max_slope)


def profile_for_direction(report, epsilon, delta, sample_count=1000,
                          ramp=None):
    """
    Profile over [0, T_u] for a direction report: the rescaled moment map
    <Phi, u> / m_u has range of length T_u, so the admissible function built
    from it has oscillation T_u - delta.
    """
    return build_profile(0.0, float(report.T_u), epsilon, delta,
                         sample_count, ramp)
