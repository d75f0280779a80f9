"""Binary addresses: finite words and eventually periodic infinite words."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, Sequence

BinaryWord = tuple  # tuple of 0/1 digits


def as_word(digits) -> BinaryWord:
    """Coerce a string like ``"1011"`` or any iterable of 0/1 into a word."""
    if isinstance(digits, str):
        digits = [int(ch) for ch in digits if not ch.isspace()]
    word = tuple(int(d) for d in digits)
    if any(d not in (0, 1) for d in word):
        raise ValueError(f"binary word may only contain 0 and 1: {digits!r}")
    return word


def _primitive_root(period: BinaryWord) -> BinaryWord:
    n = len(period)
    for k in range(1, n + 1):
        if n % k == 0 and period[:k] * (n // k) == period:
            return period[:k]
    return period


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    """The infinite word ``preperiod`` followed by ``period`` repeated forever."""

    preperiod: BinaryWord
    period: BinaryWord

    def __post_init__(self):
        object.__setattr__(self, "preperiod", as_word(self.preperiod))
        object.__setattr__(self, "period", as_word(self.period))
        if not self.period:
            raise ValueError("period must be nonempty")

    def canonical(self) -> "EventuallyPeriodicWord":
        """Shortest period, then shortest preperiod, describing the same sequence."""
        pre, per = list(self.preperiod), _primitive_root(self.period)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = (per[-1],) + per[:-1]
        return EventuallyPeriodicWord(tuple(pre), per)

    def same_sequence(self, other: "EventuallyPeriodicWord") -> bool:
        return self.canonical() == other.canonical()

    def digits(self) -> Iterator[int]:
        yield from self.preperiod
        while True:
            yield from self.period

    def prefix(self, n: int) -> BinaryWord:
        return tuple(islice(self.digits(), n))

    def tail(self) -> "EventuallyPeriodicWord":
        """Drop the first digit."""
        if self.preperiod:
            return EventuallyPeriodicWord(self.preperiod[1:], self.period)
        return EventuallyPeriodicWord((), self.period[1:] + self.period[:1])

    def prepend(self, word: Sequence[int]) -> "EventuallyPeriodicWord":
        return EventuallyPeriodicWord(as_word(word) + self.preperiod, self.period)

    def value(self) -> Fraction:
        """The number ``0.d1 d2 d3 ...`` in base two."""
        pre, per = self.preperiod, self.period
        head = Fraction(int("".join(map(str, pre)) or "0", 2), 2 ** len(pre))
        cycle = Fraction(int("".join(map(str, per)), 2), 2 ** len(per) - 1)
        return head + cycle / 2 ** len(pre)

    def __str__(self):
        pre = "".join(map(str, self.preperiod))
        return f"{pre}({''.join(map(str, self.period))})"
