"""Randomized batch verification over valid Seifert data."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .invariants import InvariantReport, compute_report
from .seifert import SeifertData


MAX_DRAWS = 100_000


@dataclass(frozen=True)
class BatchConfig:
    count: int = 500
    seed: int = 0
    max_alpha: int = 10
    max_arms: int = 5
    h_cap: int = 5000
    max_depth: int = 2  # how far b may drop below its largest admissible value


def random_seifert(rng: random.Random, cfg: BatchConfig) -> SeifertData:
    """Draw valid data: nu in [3, max_arms], alpha_i in [2, max_alpha], omega_i a unit mod alpha_i.

    b is the largest integer with e < 0, lowered by a uniform depth in
    [0, max_depth]; draws with |H| above the cap are rejected.
    """
    if cfg.max_arms < 3 or cfg.max_alpha < 2:
        raise ValueError("need max_arms >= 3 and max_alpha >= 2")
    for _ in range(MAX_DRAWS):
        nu = rng.randint(3, cfg.max_arms)
        alphas = [rng.randint(2, cfg.max_alpha) for _ in range(nu)]
        omegas = [rng.choice([w for w in range(1, a) if gcd(w, a) == 1]) for a in alphas]
        frac = sum((Fraction(w, a) for a, w in zip(alphas, omegas)), Fraction(0))
        b = -(frac.numerator // frac.denominator) - 1 - rng.randint(0, cfg.max_depth)
        e = b + frac
        if prod(alphas) * -e <= cfg.h_cap:
            return SeifertData(b, tuple(zip(alphas, omegas)))
    raise ValueError(f"no draw met h_cap={cfg.h_cap} after {MAX_DRAWS} attempts")


def generate(cfg: BatchConfig) -> list[SeifertData]:
    rng = random.Random(cfg.seed)
    return [random_seifert(rng, cfg) for _ in range(cfg.count)]


def run_batch(cfg: BatchConfig, workers: int = 1) -> list[InvariantReport]:
    """Reports in generation order; the result does not depend on ``workers``."""
    data = generate(cfg)
    if workers <= 1 or len(data) < 2:
        return [compute_report(s) for s in data]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(compute_report, data, chunksize=8))
