"""Concrete Collatz iteration on Python ints, the ground truth for every symbolic claim."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ZeroInput


class Variant(enum.Enum):
    FULL = "full"
    COMPACT = "compact"


def _check(n: int) -> None:
    if n == 0:
        raise ZeroInput("0 is a fixed point of halving and is not iterated")
    if n < 0:
        raise ValueError(f"expected a positive integer, got {n}")


def step_full(n: int) -> int:
    _check(n)
    return n // 2 if n % 2 == 0 else 3 * n + 1


def step_compact(n: int) -> int:
    _check(n)
    return n // 2 if n % 2 == 0 else (3 * n + 1) // 2


_STEP = {Variant.FULL: step_full, Variant.COMPACT: step_compact}


@dataclass(frozen=True)
class Trajectory:
    """``values[t]`` is the value after t steps; ``values[0]`` is the seed."""

    seed: int
    values: tuple[int, ...]
    variant: Variant

    @property
    def steps(self) -> tuple[int, ...]:
        return self.values[1:]

    def __len__(self):
        return len(self.values) - 1


def run(seed: int, steps: int, variant: Variant = Variant.COMPACT) -> Trajectory:
    """Iterate exactly ``steps`` times; reaching 1 does not stop the run."""
    _check(seed)
    if steps < 0:
        raise ValueError(f"step count must be nonnegative, got {steps}")
    step = _STEP[Variant(variant)]
    values = [seed]
    n = seed
    for _ in range(steps):
        n = step(n)
        values.append(n)
    return Trajectory(seed, tuple(values), Variant(variant))


class Repeat(NamedTuple):
    first: int
    second: int
    value: int


def detect_value_repeat(t: Trajectory) -> Repeat | None:
    seen: dict[int, int] = {}
    for pos, v in enumerate(t.values):
        if v in seen:
            return Repeat(seen[v], pos, v)
        seen[v] = pos
    return None


def parity_word(seed: int, steps: int) -> str:
    """Branch letters ('e'/'o') taken by the first ``steps`` compact steps."""
    values = run(seed, steps).values
    return "".join("e" if v % 2 == 0 else "o" for v in values[:steps])
