"""Sos permutations of rational angles and the Farey-interval correspondence.

A Sos permutation sigma of degree m sorts the fractional parts {i*alpha},
i in [m], increasingly; tau = sigma^{-1} is the object most constructions
here work with.  All angle arithmetic is exact: the fractional part {i*p/q}
is represented by the integer key (i*p) mod q, never by a float.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .farey import FareyInterval, farey_intervals, mediant, totient_sum
from .perm_core import Permutation, gamma, inverse, psi, supermod_m

SIDES = ("below", "at", "above")


def _keys(m: int, alpha: Fraction) -> list[int]:
    """Integer sort keys (i*p) mod q for i = 1..m; validates alpha.

    Distinctness of the m fractional parts needs denominator q >= m: for
    q > m this is the generic interior case, and for q = m the key of i = m
    is 0, so the ascending sort places i = m first, which is exactly the
    boundary convention "the leftmost strict inequality becomes <=".
    """
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must satisfy 0 < alpha < 1, got {alpha}")
    p, q = alpha.numerator, alpha.denominator
    if q < m:
        raise ValueError(
            f"alpha too coarse: {p}/{q} has denominator below m = {m}, "
            "so the fractional parts collide"
        )
    return [(i * p) % q for i in range(1, m + 1)]


def sos_from_alpha(m: int, alpha: Fraction) -> Permutation:
    """The permutation sorting {alpha}, {2 alpha}, ..., {m alpha} increasingly."""
    keys = _keys(m, alpha)
    return Permutation(sorted(range(1, m + 1), key=lambda i: keys[i - 1]))


def tau_from_alpha(m: int, alpha: Fraction) -> Permutation:
    """tau_alpha(i) = |{j in [m] : {j alpha} <= {i alpha}}|, the inverse of sos_from_alpha."""
    keys = _keys(m, alpha)
    return Permutation(sum(1 for kj in keys if kj <= ki) for ki in keys)


def tau_explicit(m: int, alpha: Fraction) -> Permutation:
    """Closed-form tau via floor sums, valid off the order-m Farey sequence.

    tau_alpha(i) = m (1 - floor(i alpha)) + sum_{j=1}^{m} floor(j alpha)
                   + sum_{j=1}^{m} floor((i-j) alpha)

    The formula is only quoted for alpha that is not an order-m Farey term,
    so reduced denominators <= m are rejected rather than extrapolated.
    """
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must satisfy 0 < alpha < 1, got {alpha}")
    p, q = alpha.numerator, alpha.denominator
    if q <= m:
        raise ValueError(
            f"alpha = {p}/{q} is a term of the order-{m} Farey sequence; "
            "the closed form is undefined there"
        )
    floors = {k: (k * p) // q for k in range(1 - m, m + 1)}
    total = sum(floors[j] for j in range(1, m + 1))
    vals = [
        m * (1 - floors[i]) + total + sum(floors[i - j] for j in range(1, m + 1))
        for i in range(1, m + 1)
    ]
    return Permutation(vals)


def theta_ab(m: int, a: int, b: int) -> Permutation:
    """The affine permutation i -> ((a i + b - 1) mod m) + 1.

    Bijective exactly when gcd(a, m) = 1.
    """
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"theta_ab not invertible: gcd({a}, {m}) != 1")
    return Permutation(supermod_m(a * i + b, m) for i in range(1, m + 1))


def satisfies_sos_recurrence(sigma: Permutation) -> bool:
    """Check the three-case additive recurrence of Sos permutations.

    sigma(i+1) = sigma(i) + sigma(1)            if sigma(i) <= m - sigma(1)
                 sigma(i) + sigma(1) - sigma(m) if m - sigma(1) < sigma(i) < sigma(m)
                 sigma(i) - sigma(m)            if sigma(m) <= sigma(i)

    The guards can overlap only when sigma(1) + sigma(m) <= m (never the
    case for an actual Sos permutation); every guard that fires must then
    agree, so the predicate is order-independent.
    """
    m = sigma.m
    first, last = sigma(1), sigma(m)
    vals = sigma.values
    for i in range(m - 1):
        cur, nxt = vals[i], vals[i + 1]
        if cur <= m - first and nxt != cur + first:
            return False
        if m - first < cur < last and nxt != cur + first - last:
            return False
        if last <= cur and nxt != cur - last:
            return False
    return True


@dataclass(frozen=True)
class SuranyiTable:
    """The order-m pairing of Farey intervals with their tau permutations.

    ``entries[t-1]`` is (F_t, tau at the mediant of F_t); the permutation
    column is pairwise distinct and enumerates the degree-m class V.
    """

    m: int
    entries: tuple[tuple[FareyInterval, Permutation], ...]

    def permutations(self) -> list[Permutation]:
        return [perm for _, perm in self.entries]

    def interval_of(self, perm: Permutation) -> FareyInterval:
        for interval, p in self.entries:
            if p == perm:
                return interval
        raise KeyError(f"{perm.one_line()} is not in the order-{self.m} table")


def suranyi_table(m: int) -> SuranyiTable:
    """Evaluate tau at the mediant of every order-m Farey interval, in order."""
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    entries = []
    prev_hi = None
    for interval in farey_intervals(m):
        if prev_hi is not None and interval.lo != prev_hi:
            raise AssertionError(f"non-adjacent Farey intervals at index {interval.index}")
        prev_hi = interval.hi
        entries.append((interval, tau_from_alpha(m, mediant(interval))))
    perms = [perm for _, perm in entries]
    if len(set(perms)) != len(perms):
        raise AssertionError(f"tau collision in the order-{m} table")
    if len(entries) != totient_sum(m):
        raise AssertionError(f"expected {totient_sum(m)} intervals, built {len(entries)}")
    return SuranyiTable(m, tuple(entries))


def tau_near_fraction(m: int, a: int, side: str) -> Permutation:
    """tau just below, exactly at, or just above alpha = a/m.

    Uses the exact offset eps = 1/(2 m^2), strictly inside the window
    (0, 1/m^2) on which tau is constant on each side.  Below gives
    theta_ab(m, a, 0); at and above give theta_ab(m, a, 1).
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if not 1 <= a <= m:
        raise ValueError(f"a must lie in [1, {m}], got {a}")
    if gcd(a, m) != 1:
        raise ValueError(f"a = {a} is not coprime to m = {m}")
    alpha = Fraction(a, m)
    if side == "below":
        alpha -= Fraction(1, 2 * m * m)
    elif side == "above":
        alpha += Fraction(1, 2 * m * m)
    return tau_from_alpha(m, alpha)


def random_interior_rational(m: int, rng: random.Random) -> Fraction:
    """A uniform-ish reduced fraction in (0, 1) with denominator in (m, 4m]."""
    while True:
        q = rng.randint(m + 1, 4 * m)
        p = rng.randint(1, q - 1)
        if gcd(p, q) == 1:
            return Fraction(p, q)


def verify_invariants(m_max: int, samples: int = 200, seed: int = 1729) -> list[dict]:
    """Exact cross-checks of the tau formulas, one report record per check.

    Covers: tau_from_alpha = inverse(sos_from_alpha) at every order-m
    mediant; tau_explicit = tau_from_alpha on seeded random interior
    rationals with the first/last-term identities; the degree-compatibility
    psi(gamma(tau_m)) = tau_{m-1}; and the behavior of tau around each
    boundary fraction a/m.
    """
    rng = random.Random(seed)
    records = []

    def record(m: int, check: str, passed: bool, detail: str = "") -> None:
        records.append({"m": m, "check": check, "passed": passed, "detail": detail})

    for m in range(2, m_max + 1):
        mediants = [mediant(F) for F in farey_intervals(m)]
        ok = all(tau_from_alpha(m, al) == inverse(sos_from_alpha(m, al)) for al in mediants)
        record(m, "tau = inverse(sos) at mediants", ok, f"{len(mediants)} mediants")

        ok_exp = True
        ok_fl = True
        for _ in range(samples):
            al = random_interior_rational(m, rng)
            tau = tau_from_alpha(m, al)
            ok_exp = ok_exp and tau_explicit(m, al) == tau
            p, q = al.numerator, al.denominator
            fsum = sum((j * p) // q for j in range(1, m + 1))
            ok_fl = ok_fl and tau(1) == 1 + (m * p) // q
            ok_fl = ok_fl and tau(m) == 2 * m + 1 - (m + 1) * tau(1) + 2 * fsum
        record(m, "tau_explicit = tau_from_alpha on random rationals", ok_exp, f"{samples} samples")
        record(m, "first/last-term identities", ok_fl, f"{samples} samples")

        if m >= 3:
            ok = all(
                psi(gamma(tau_from_alpha(m, al))) == tau_from_alpha(m - 1, al)
                for al in mediants
            )
            record(m, "psi(gamma(tau_m)) = tau_{m-1} at mediants", ok, f"{len(mediants)} mediants")

        ok = all(
            tau_near_fraction(m, a, "below") == theta_ab(m, a, 0)
            and tau_near_fraction(m, a, "at") == theta_ab(m, a, 1)
            and tau_near_fraction(m, a, "above") == theta_ab(m, a, 1)
            for a in range(1, m + 1)
            if gcd(a, m) == 1
        )
        record(m, "tau around a/m matches the affine layers", ok)
    return records
