"""Exact Farey-coordinate arithmetic.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms).  Continued fractions have integer part 0 and may end with
the sentinel ``INF``; ``[0; a1, ..., an, INF]`` means ``[0; a1, ..., an]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exceptions import EmptyCF, OutOfRange
from .words import EventuallyPeriodicWord

INF = math.inf
LN2 = math.log(2)


def as_rational(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("pass an exact rational (Fraction, int or 'p/q'), not a float")
    return Fraction(x)


def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def mediant(x: Fraction, y: Fraction) -> Fraction:
    """Farey sum ``p/q (+) r/s = (p+r)/(q+s)``."""
    return Fraction(x.numerator + y.numerator, x.denominator + y.denominator)


# -- eta on dyadic rationals, by mediants ------------------------------------------

@lru_cache(maxsize=None)
def _eta_reduced(m: int, n: int) -> Fraction:
    # m/2**n in lowest terms (m odd unless n == 0)
    if n == 0:
        return Fraction(m)
    left, right = m - 1, m + 1
    return mediant(_eta_dyadic(left, n), _eta_dyadic(right, n))


def _eta_dyadic(m: int, n: int) -> Fraction:
    while n > 0 and m % 2 == 0:
        m //= 2
        n -= 1
    return _eta_reduced(m, n)


def eta_dyadic(m: int, n: int) -> Fraction:
    """Farey coordinate of ``m / 2**n`` via the mediant recursion."""
    if n < 0 or not 0 <= m <= 2 ** n:
        raise OutOfRange(f"need 0 <= m <= 2**n, got m={m}, n={n}")
    return _eta_dyadic(m, n)


# -- binary expansions and run lengths ------------------------------------------

def _dyadic_exponent(x: Fraction) -> int | None:
    d = x.denominator
    if d & (d - 1):
        return None
    return d.bit_length() - 1


def binary_expansion(alpha, upper: bool = False) -> EventuallyPeriodicWord:
    """Digits of ``alpha`` in base two, led by the integer-part digit 0.

    Dyadic ``alpha`` take the terminating-then-zeros form unless ``upper`` is
    set, in which case the last 1 becomes 0 followed by ones.  ``alpha = 1`` is
    written ``0.111...``.
    """
    alpha = as_rational(alpha)
    if not 0 <= alpha <= 1:
        raise OutOfRange(f"alpha={alpha} outside [0, 1]")
    if alpha == 1:
        return EventuallyPeriodicWord((0,), (1,))
    k = _dyadic_exponent(alpha)
    if k is not None:
        bits = tuple(int(c) for c in format(alpha.numerator, f"0{k}b")) if k else ()
        if upper and alpha != 0:
            bits = bits[:-1] + (0,)
            return EventuallyPeriodicWord((0,) + bits, (1,))
        return EventuallyPeriodicWord((0,) + bits, (0,))
    p, q = alpha.numerator, alpha.denominator
    seen: dict[int, int] = {}
    digits = []
    while p not in seen:
        seen[p] = len(digits)
        p *= 2
        digits.append(p // q)
        p %= q
    start = seen[p]
    return EventuallyPeriodicWord((0,) + tuple(digits[:start]), tuple(digits[start:]))


def _runs(digits) -> list[int]:
    runs: list[int] = []
    prev = None
    for d in digits:
        if d == prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = d
    return runs


@dataclass(frozen=True)
class RunLengths:
    """Run lengths ``a1, a2, ...`` of an L/R word, first run counting zeros.

    ``runs`` may end with ``INF``; a nonempty ``period`` repeats after ``runs``.
    """

    runs: tuple
    period: tuple = ()

    def __str__(self):
        letters = "LR"
        out = []
        for i, a in enumerate(self.runs + self.period):
            tag = letters[i % 2] + ("^inf" if a == INF else f"^{a}")
            out.append(tag)
        s = "".join(out[: len(self.runs)])
        if self.period:
            s += "(" + "".join(out[len(self.runs):]) + ")"
        return s


def lr_decomposition(w: EventuallyPeriodicWord) -> RunLengths:
    """Run-length encoding of the full digit sequence of ``w``."""
    seq = list(w.preperiod)
    per = list(w.period)
    if len(set(per)) == 1:
        runs = _runs(seq)
        if seq and seq[-1] == per[0]:
            runs[-1] = INF
        else:
            runs.append(INF)
        if seq and seq[0] != 0 or not seq and per[0] != 0:
            runs.insert(0, 0)
        return RunLengths(tuple(runs))
    # rotate the cycle so that it starts at a digit change
    j = next(i for i in range(len(per)) if per[i] != per[i - 1])
    seq += per[:j]
    per = per[j:] + per[:j]
    head, cycle = _runs(seq), _runs(per)
    if seq and seq[-1] == per[0]:
        head[-1] += cycle[0]
        head += cycle[1:]
    else:
        head += cycle
    if (seq or per)[0] != 0:
        head.insert(0, 0)
    return RunLengths(tuple(head), tuple(cycle))


# -- continued fractions ---------------------------------------------------------------

@dataclass(frozen=True)
class ContinuedFraction:
    """``[0; terms..., (period)...]`` with positive integer terms."""

    terms: tuple
    period: tuple = ()

    def __post_init__(self):
        terms = tuple(self.terms)
        period = tuple(self.period)
        for i, a in enumerate(terms):
            if a == INF:
                if i != len(terms) - 1 or period:
                    raise ValueError("INF may only be the final term")
            elif not (isinstance(a, int) and a >= 1):
                raise ValueError(f"continued fraction terms must be positive integers, got {a!r}")
        for a in period:
            if not (isinstance(a, int) and a >= 1):
                raise ValueError(f"periodic terms must be positive integers, got {a!r}")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "period", period)

    @property
    def is_periodic(self) -> bool:
        return bool(self.period)

    def finite_terms(self) -> tuple:
        if self.terms and self.terms[-1] == INF:
            return self.terms[:-1]
        return self.terms

    def expand(self, n: int) -> tuple:
        """The first ``n`` partial quotients, unrolling the period."""
        out = list(self.finite_terms()[:n])
        while self.period and len(out) < n:
            out.extend(self.period)
        return tuple(out[:n])

    def __str__(self):
        body = ",".join("inf" if a == INF else str(a) for a in self.terms)
        if self.period:
            cyc = "(" + ",".join(map(str, self.period)) + ")"
            body = f"{body},{cyc}" if body else cyc
        return f"[0;{body}]"


def _evaluate(terms) -> Fraction:
    # convergent recurrence h_k = a_k h_{k-1} + h_{k-2}
    h_prev, h = 1, 0
    k_prev, k = 0, 1
    for a in terms:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return Fraction(h, k)


def cf_eval(cf: ContinuedFraction) -> Fraction:
    """Exact value of a finite continued fraction; ``[0; INF]`` is 0."""
    if cf.is_periodic:
        raise ValueError("periodic continued fraction has an irrational value; use cf_float")
    return _evaluate(cf.finite_terms())


def cf_float(cf: ContinuedFraction, tol: float = 1e-17, max_terms: int = 10_000) -> float:
    """Float value, for periodic expansions via converging convergents."""
    if not cf.is_periodic:
        return float(cf_eval(cf))
    prev = None
    n = len(cf.terms) + len(cf.period)
    while n <= max_terms:
        val = _evaluate(cf.expand(n))
        if prev is not None and abs(val - prev) < tol:
            return float(val)
        prev = val
        n += len(cf.period)
    return float(prev)


def cf_from_runs(runs: RunLengths) -> ContinuedFraction:
    """Continued fraction with partial quotients equal to the run lengths.

    A leading zero run (word starting with 1) only occurs for alpha = 1 and
    is folded by the identity ``[0; 0, a2, ...] = a2 + [0; a3, ...]`` into
    the single value 1, represented here as ``[0; 1]``.
    """
    terms = runs.runs
    if terms and terms[0] == 0:
        if terms[1:] == (INF,):
            return ContinuedFraction((1,))
        raise ValueError("digit sequences must start with the integer-part digit 0")
    return ContinuedFraction(*_shortest_cycle(terms, runs.period))


def _shortest_cycle(head: tuple, cycle: tuple) -> tuple[tuple, tuple]:
    if not cycle:
        return head, cycle
    n = len(cycle)
    cycle = next(cycle[:k] for k in range(1, n + 1) if n % k == 0 and cycle[:k] * (n // k) == cycle)
    head = list(head)
    while head and head[-1] == cycle[-1]:
        head.pop()
        cycle = (cycle[-1],) + cycle[:-1]
    return tuple(head), cycle


@dataclass(frozen=True)
class QuadraticLimit:
    """Farey coordinate of a non-dyadic rational: a periodic continued fraction."""

    cf: ContinuedFraction
    approx: float

    def __str__(self):
        return f"{self.cf} ~ {self.approx!r}"


def eta(alpha) -> Union[Fraction, QuadraticLimit]:
    """Farey coordinate via binary expansion, run lengths and continued fraction."""
    alpha = as_rational(alpha)
    cf = cf_from_runs(lr_decomposition(binary_expansion(alpha)))
    if cf.is_periodic:
        return QuadraticLimit(cf, cf_float(cf))
    return cf_eval(cf)


def eta_cf(alpha) -> ContinuedFraction:
    alpha = as_rational(alpha)
    return cf_from_runs(lr_decomposition(binary_expansion(alpha)))


def gauss_map_cf(cf: ContinuedFraction) -> ContinuedFraction:
    """Forget the first partial quotient: ``[0; a1, a2, ...] -> [0; a2, ...]``."""
    terms = cf.finite_terms()
    if terms:
        rest = cf.terms[1:]
        if not rest and not cf.period:
            rest = (INF,)
        return ContinuedFraction(rest, cf.period)
    if cf.period:
        return ContinuedFraction((), cf.period[1:] + cf.period[:1])
    raise EmptyCF(f"{cf} has no partial quotient to drop")


def gauss_measure(a: float, b: float) -> float:
    """Gauss measure of [a, b]: integral of 1/((1+x) ln 2)."""
    if not 0 <= a <= b <= 1:
        raise OutOfRange(f"need 0 <= a <= b <= 1, got a={a}, b={b}")
    return (math.log1p(b) - math.log1p(a)) / LN2
