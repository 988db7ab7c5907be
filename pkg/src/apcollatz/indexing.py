"""Index maps from a node's local index back to the root seed.

A node reached by the extraction word w = (op_1, ..., op_k), read from the root,
has local index j related to the root seed i by ``i = 2**k * j + beta``.
Substituting ``i_local = 2*j + s`` at every step shows that the first
extraction contributes the lowest bit of ``beta``:

    beta = s_1 * 2**0 + s_2 * 2**1 + ... + s_k * 2**(k-1),   s_t = 1 iff op_t is T2

so the word's bit string, read leaf to root, is ``beta`` in binary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import WordSyntaxError
from .progression import Op, Progression

__all__ = [
    "IndexMap",
    "Op",
    "OperatorWord",
    "compose",
    "compose_word",
    "density",
    "identity_map",
    "seed_from_word",
    "seed_progression",
]


@dataclass(frozen=True, slots=True)
class IndexMap:
    """Affine map ``j -> alpha * j + beta`` onto root seeds."""

    alpha: int
    beta: int

    def __call__(self, j: int) -> int:
        if j < 0:
            raise ValueError(f"index must be nonnegative, got {j}")
        return self.alpha * j + self.beta

    def compose(self, op: Op) -> IndexMap:
        return compose(self, op)

    def __str__(self):
        head = "j" if self.alpha == 1 else f"{self.alpha}j"
        return head if self.beta == 0 else f"{head}+{self.beta}"


@dataclass(frozen=True, slots=True)
class OperatorWord:
    """Extraction history of a node, root first."""

    ops: tuple[Op, ...] = ()

    @classmethod
    def parse(cls, text: str) -> OperatorWord:
        """Parse a digit string such as ``"21112"`` (1 = T1, 2 = T2)."""
        text = text.strip()
        bad = set(text) - {"1", "2"}
        if bad:
            raise WordSyntaxError(f"word may contain only '1' and '2', got {text!r}")
        return cls(tuple(Op(int(c)) for c in text))

    @classmethod
    def of(cls, word: OperatorWord | str | Iterable[Op]) -> OperatorWord:
        if isinstance(word, OperatorWord):
            return word
        if isinstance(word, str):
            return cls.parse(word)
        return cls(tuple(Op(o) for o in word))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(op.bit for op in self.ops)

    def extend(self, op: Op) -> OperatorWord:
        return OperatorWord(self.ops + (op,))

    def __len__(self):
        return len(self.ops)

    def __iter__(self) -> Iterator[Op]:
        return iter(self.ops)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return OperatorWord(self.ops[key])
        return self.ops[key]

    def __str__(self):
        return "".join(str(op.value) for op in self.ops)


def identity_map() -> IndexMap:
    return IndexMap(1, 0)


def compose(m: IndexMap, op: Op) -> IndexMap:
    """Account for one more extraction below the node mapped by ``m``."""
    return IndexMap(2 * m.alpha, m.beta + Op(op).bit * m.alpha)


def compose_word(word: OperatorWord | str, start: IndexMap | None = None) -> IndexMap:
    m = identity_map() if start is None else start
    for op in OperatorWord.of(word):
        m = compose(m, op)
    return m


def _offset(word: OperatorWord) -> int:
    return sum(s << t for t, s in enumerate(word.bits))


def seed_from_word(word: OperatorWord | str, j: int) -> int:
    """Root seed that lands on local index ``j`` after the extractions in ``word``."""
    if j < 0:
        raise ValueError(f"index must be nonnegative, got {j}")
    word = OperatorWord.of(word)
    return (j << len(word)) + _offset(word)


def seed_progression(word: OperatorWord | str) -> Progression:
    """All seeds reaching the node of ``word``: S(2**k, beta)."""
    word = OperatorWord.of(word)
    return Progression(1 << len(word), _offset(word))


def density(word: OperatorWord | str) -> Fraction:
    return Fraction(1, 1 << len(OperatorWord.of(word)))
