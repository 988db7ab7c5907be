"""Arithmetic progressions S(a, b) = (a*i + b) for i = 0, 1, 2, ...

The two index operators T1 (i -> 2j) and T2 (i -> 2j+1) pick out the
even-indexed and odd-indexed subsequences.  When the difference ``a`` is odd,
one of them yields exactly the even terms and the other exactly the odd
terms, which is what lets a Collatz step be applied symbolically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidProgression, NotUniformlyEven, NotUniformlyOdd, UniformParity


class Op(enum.IntEnum):
    """Index operator.  The integer value doubles as the word digit."""

    T1 = 1
    T2 = 2

    @property
    def bit(self) -> int:
        return self.value - 1

    def __str__(self):
        return str(self.value)


class ParityClass(enum.Enum):
    ALL_EVEN = "AllEven"                  # a even, b even
    ALL_ODD = "AllOdd"                    # a even, b odd
    MIXED_EVEN_FIRST = "MixedEvenFirst"   # a odd, b even: even terms at even i
    MIXED_ODD_FIRST = "MixedOddFirst"     # a odd, b odd: even terms at odd i

    @property
    def uniform(self) -> bool:
        return self in (ParityClass.ALL_EVEN, ParityClass.ALL_ODD)

    def __str__(self):
        return self.value


@dataclass(frozen=True, slots=True)
class Progression:
    a: int
    b: int

    def __post_init__(self):
        for name in ("a", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidProgression(f"{name} must be an int, got {v!r}")
        if self.a < 1:
            raise InvalidProgression(f"difference a must be >= 1, got {self.a}")
        if self.b < 0:
            raise InvalidProgression(f"offset b must be >= 0, got {self.b}")

    def __str__(self):
        return f"S({self.a},{self.b})"

    def __call__(self, j: int) -> int:
        return value_at(self, j)


class Branch(NamedTuple):
    progression: Progression
    op: Op


class Split(NamedTuple):
    even: Branch
    odd: Branch


def value_at(p: Progression, j: int) -> int:
    if j < 0:
        raise ValueError(f"index must be nonnegative, got {j}")
    return p.a * j + p.b


def classify_parity(p: Progression) -> ParityClass:
    if p.a % 2 == 0:
        return ParityClass.ALL_EVEN if p.b % 2 == 0 else ParityClass.ALL_ODD
    return ParityClass.MIXED_EVEN_FIRST if p.b % 2 == 0 else ParityClass.MIXED_ODD_FIRST


def t1(p: Progression) -> Progression:
    """Even-indexed subsequence: S(a, b) -> S(2a, b)."""
    return Progression(2 * p.a, p.b)


def t2(p: Progression) -> Progression:
    """Odd-indexed subsequence: S(a, b) -> S(2a, a + b)."""
    return Progression(2 * p.a, p.a + p.b)


def apply(op: Op, p: Progression) -> Progression:
    return t1(p) if op is Op.T1 else t2(p)


def split_parity(p: Progression) -> Split:
    """Split a progression with odd difference into its even and odd terms.

    Each branch carries the operator that extracted it; which operator gives
    the even terms depends on the parity of ``b``.

    >>> split_parity(Progression(3, 1))
    Split(even=Branch(progression=Progression(a=6, b=4), op=<Op.T2: 2>), odd=Branch(progression=Progression(a=6, b=1), op=<Op.T1: 1>))
    """
    if p.a % 2 == 0:
        raise UniformParity(f"{p} has even difference; its terms share one parity")
    lo, hi = Branch(t1(p), Op.T1), Branch(t2(p), Op.T2)
    if p.b % 2 == 0:
        return Split(even=lo, odd=hi)
    return Split(even=hi, odd=lo)


def step_even(p: Progression) -> Progression:
    """Halve every term of an all-even progression."""
    if classify_parity(p) is not ParityClass.ALL_EVEN:
        raise NotUniformlyEven(f"{p} is not uniformly even")
    return Progression(p.a // 2, p.b // 2)


def step_odd_compact(p: Progression) -> Progression:
    """Map every term n of an all-odd progression to (3n + 1) / 2."""
    if classify_parity(p) is not ParityClass.ALL_ODD:
        raise NotUniformlyOdd(f"{p} is not uniformly odd")
    return Progression(3 * p.a // 2, (3 * p.b + 1) // 2)
