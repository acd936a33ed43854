"""Classical correlator: closed form and Monte Carlo check.

A classical particle on the ring has uniform angle and Gaussian angular
momentum of variance m R^2/beta; averaging R^2 cos(phi(0)) cos(phi(t))
over that ensemble gives the hbar-free Gaussian

    C1_cl(t) = (R^2/2) exp(-t^2/(2 beta m R^2)).
"""

import math
from dataclasses import dataclass

import numpy as np

GENERATOR_ID = "pcg64"


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int


def c1_classical(params, t):
    """Closed-form classical correlator; even in t and independent of hbar."""
    spread = params.beta * params.mass * params.radius * params.radius
    return 0.5 * params.radius * params.radius * math.exp(-0.5 * t * t / spread)


def mc_classical(params, t_grid, n_samples, seed):
    """Monte Carlo estimate of the classical correlator on a time grid.

    Each grid point draws from its own substream, spawned from (seed,
    point index), so estimates do not depend on grid order and identical
    inputs reproduce identical output.  Draw order per point is fixed:
    angles first, then momenta.
    """
    if n_samples < 2:
        raise ValueError(f"n_samples must be at least 2, got {n_samples}")
    grid = [float(t) for t in t_grid]
    if not grid:
        raise ValueError("time grid must not be empty")
    substreams = np.random.SeedSequence(seed).spawn(len(grid))
    r2 = params.radius * params.radius
    sigma_l = params.radius * math.sqrt(params.mass / params.beta)
    inertia = params.mass * r2
    estimates = []
    for t, stream in zip(grid, substreams):
        rng = np.random.Generator(np.random.PCG64(stream))
        phi = rng.uniform(0.0, 2.0 * math.pi, n_samples)
        ell = rng.normal(0.0, sigma_l, n_samples)
        values = r2 * np.cos(phi) * np.cos(phi + ell * (t / inertia))
        estimates.append(
            McEstimate(
                mean=float(values.mean()),
                std_error=float(values.std(ddof=1) / math.sqrt(n_samples)),
                samples=n_samples,
                seed=seed,
            )
        )
    return estimates
