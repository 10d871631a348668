"""Order-m Farey sequences, their open intervals, mediants, and totient sums.

All arithmetic is exact: fractions are ``fractions.Fraction`` values, which
are stored reduced and compare exactly.  Text form is always "p/q" (so 0 and
1 print as "0/1" and "1/1"); JSON form is ``{"num": p, "den": q}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer) into an exact Fraction."""
    tok = text.strip()
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid fraction token {tok!r}") from None


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def fraction_to_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def fraction_from_json(obj: dict) -> Fraction:
    return Fraction(obj["num"], obj["den"])


@dataclass(frozen=True)
class FareyInterval:
    """Open interval (lo, hi) between successive order-m Farey terms.

    ``index`` is the 1-based position of the interval in the left-to-right
    interval list of its order.
    """

    lo: Fraction
    hi: Fraction
    index: int

    def __contains__(self, alpha: Fraction) -> bool:
        return self.lo < alpha < self.hi

    def __str__(self) -> str:
        return f"({format_fraction(self.lo)}, {format_fraction(self.hi)})"


def farey_sequence(m: int) -> list[Fraction]:
    """All reduced fractions p/q with 0 <= p <= q <= m, ascending.

    Uses the classic next-term recurrence: from consecutive terms a/b < c/d
    the successor is (kc - a)/(kd - b) with k = (m + b) // d, so the whole
    sequence costs O(N) after the first two terms.

    >>> [str(f) for f in farey_sequence(3)]
    ['0', '1/3', '1/2', '2/3', '1']
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    a, b, c, d = 0, 1, 1, m
    terms = [Fraction(0, 1)]
    while c <= m and not (c == 1 and d == 1):
        terms.append(Fraction(c, d))
        k = (m + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    terms.append(Fraction(1, 1))
    return terms


def farey_intervals(m: int) -> list[FareyInterval]:
    """The open intervals between successive order-m Farey terms, indexed 1..N."""
    terms = farey_sequence(m)
    return [FareyInterval(lo, hi, t) for t, (lo, hi) in enumerate(zip(terms, terms[1:]), start=1)]


def mediant(interval: FareyInterval) -> Fraction:
    """Mediant (p+p')/(q+q') of the interval endpoints.

    For an order-m Farey interval the mediant lies strictly inside and its
    denominator exceeds m, so the m fractional parts {i*alpha} are distinct.
    """
    return Fraction(
        interval.lo.numerator + interval.hi.numerator,
        interval.lo.denominator + interval.hi.denominator,
    )


def totients(m: int) -> list[int]:
    """Euler phi for 0..m by sieve; totients(m)[k] == phi(k) (phi(0) := 0)."""
    if m < 0:
        raise ValueError(f"negative bound {m}")
    phi = list(range(m + 1))
    for p in range(2, m + 1):
        if phi[p] == p:
            for k in range(p, m + 1, p):
                phi[k] -= phi[k] // p
    return phi


def totient_sum(m: int) -> int:
    """Sum of phi(k) for k = 1..m: the number of order-m Farey intervals.

    >>> totient_sum(1), totient_sum(4), totient_sum(6)
    (1, 6, 12)
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    return sum(totients(m)[1:])
