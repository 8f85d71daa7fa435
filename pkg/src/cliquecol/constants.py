"""Closed-form constants of the regular-pentagon C5 configuration.

A regular pentagon with unit diagonals realises C5 as a unit disk graph. The
controlled region is the union of the lenses cut out by the unit disks around
consecutive corners; it must be empty of other points for the C5 to have no
edge in a triangle.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

# threshold multipliers of sqrt(log n) for the dense regimes
LOW_DENSE_CONSTANT = 0.46
HIGH_DENSE_CONSTANT = 9.27
HIGH_DENSE_PROOF_CONSTANT = 9.2616


@dataclass(frozen=True)
class PentagonConstants:
    radius_a: float
    side_s: float
    ot: float
    tr: float
    h: float
    alpha: float
    gamma: float
    a0_1: float
    a0_2: float
    a0_3: float
    area_A: float
    b_max: float
    two_colour_constant: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)

    def format_lines(self) -> list[str]:
        return [f"{k}={v:.6f}" for k, v in self.as_dict().items()]


def pentagon_constants() -> PentagonConstants:
    a = 1 / (2 * math.sin(2 * math.pi / 5))
    s = 1 / (2 * math.cos(math.pi / 5))
    ot = a * math.sqrt(1 - math.sin(math.pi / 5) ** 2)
    tr = math.sqrt(1 - a**2 * math.sin(math.pi / 5) ** 2)
    # positive root of (s + cot(3pi/10) h)^2 + h^2 = 1
    c = 1 / math.tan(3 * math.pi / 10)
    qa, qb, qc = 1 + c * c, 2 * s * c, s * s - 1
    h = (-qb + math.sqrt(qb * qb - 4 * qa * qc)) / (2 * qa)
    alpha = math.asin(tr)
    gamma = math.asin(h)
    a0_1 = (alpha - gamma) / 2
    a0_2 = s * ot / 4 + s * tr / 4
    a0_3 = s * h / 2 + s * ot / 2
    area = 10 * (a0_1 - a0_2 + a0_3)
    return PentagonConstants(
        radius_a=a,
        side_s=s,
        ot=ot,
        tr=tr,
        h=h,
        alpha=alpha,
        gamma=gamma,
        a0_1=a0_1,
        a0_2=a0_2,
        a0_3=a0_3,
        area_A=area,
        b_max=area**-0.5,
        two_colour_constant=(1 + math.sqrt(3) / 2) * 2**3.5 * 3**-0.75,
    )


def pentagon_vertices(scale: float = 1.0) -> np.ndarray:
    """Corners ``v_1..v_5`` clockwise from ``(0, a)``, diagonals of length ``scale``."""
    a = scale / (2 * math.sin(2 * math.pi / 5))
    ang = math.pi / 2 - 2 * math.pi * np.arange(5) / 5
    return a * np.stack([np.cos(ang), np.sin(ang)], axis=1)


def controlled_region_area_mc(samples: int = 10**7, seed: int = 0, chunk: int = 10**6):
    """Rejection-sampling estimate of the controlled region's area.

    Returns ``(estimate, standard_error)``. Samples are uniform on
    ``[-2, 2]^2``, which contains the region.
    """
    v = pentagon_vertices()
    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        z = rng.uniform(-2.0, 2.0, size=(m, 2))
        d2 = ((z[:, None, :] - v[None]) ** 2).sum(axis=2) <= 1.0
        hits += int((d2 & np.roll(d2, -1, axis=1)).any(axis=1).sum())
        done += m
    p = hits / samples
    return 16.0 * p, 16.0 * math.sqrt(p * (1 - p) / samples)
