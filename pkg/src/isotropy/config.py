"""Tunable desk-scale limits and search behaviour."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the dispatcher and its subsolvers.

    seed=None runs the deterministic ascending prime search; an integer
    switches the append-a-prime loops to seeded random selection.
    """

    seed: int | None = None
    max_appended_primes: int = 64
    small_c_bound: int = 5000
    solution_enum_cap: int = 1 << 14
    legendre_box_cap: int = 10 ** 6
    class_group_disc_bound: int = 10 ** 7
    cf_step_cap: int = 10 ** 6
    factor_digit_bound: int = 100


DEFAULT_CONFIG = SolverConfig()
