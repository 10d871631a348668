"""Membership predicates and brute-force enumeration of the permutation classes.

Classes by label:

  V       congruential recurrence theta(i+1)-theta(i) = theta(1) - [theta(m)<=theta(i)] mod m
  W       the same recurrence as an exact integer equation
  Y       constant delta sequence (m >= 3); all of S_2 for m = 2
  Yprime  delta identically equal to -A_theta (the ascent count)
  X       congruential difference set inside some {k, k+1}
  Sstar   inverses of the Sos permutations (via the Farey interval table)
  SstarTilde  shift closure of Sstar
  VL0/VL1 affine layers {theta_ab(m, a, b) : gcd(a, m) = 1}
  Vminus  V minus VL1
  SosRec  permutations satisfying the three-case Sos recurrence (exploratory)

Brute-force enumeration walks the symmetric group in lexicographic order and
is capped at m = 10 unless the SOSLIFT_MAX_BRUTE_M environment variable
raises the cap.
"""
from __future__ import annotations

import os
from itertools import combinations, permutations as _sym_group
from math import gcd

from . import lifting
from .farey import totient_sum, totients
from .perm_core import (
    PermClass,
    Permutation,
    ascents,
    cds,
    delta,
    inverse,
    psi,
    shift_closure,
    shift_equivalent,
)
from .sos import satisfies_sos_recurrence, suranyi_table, theta_ab

LABELS = ("V", "W", "Y", "Yprime", "X", "Sstar", "SstarTilde", "VL0", "VL1", "Vminus", "SosRec")
METHODS = ("brute", "lift", "farey")
DEFAULT_MAX_BRUTE_M = 10
ENV_MAX_BRUTE_M = "SOSLIFT_MAX_BRUTE_M"


def in_V(theta: Permutation) -> bool:
    """Congruential recurrence membership (the class V)."""
    m = theta.m
    vals = theta.values
    first, last = vals[0], vals[-1]
    return all(
        (vals[i + 1] - vals[i]) % m == (first - (last <= vals[i])) % m
        for i in range(m - 1)
    )


def in_W(theta: Permutation) -> bool:
    """Exact-integer variant of the recurrence (the class W)."""
    m = theta.m
    vals = theta.values
    first, last = vals[0], vals[-1]
    return all(
        vals[i + 1] - vals[i]
        == first - (last <= vals[i]) + m * ((vals[i] <= vals[i + 1]) - 1)
        for i in range(m - 1)
    )


def in_Y(theta: Permutation) -> bool:
    """Constant-delta membership; every degree-2 permutation qualifies."""
    if theta.m < 3:
        return True
    d = delta(theta)
    return all(v == d[0] for v in d)


def in_Yprime(theta: Permutation) -> bool:
    """delta identically -A_theta; defined for m >= 3 only."""
    if theta.m < 3:
        raise ValueError(f"Yprime needs degree >= 3, got {theta.m}")
    a = ascents(theta)
    return all(v == -a for v in delta(theta))


def in_X(theta: Permutation) -> bool:
    """Quasi-progression of diameter 1: cds inside {k, k+1} for some k in [m-1]."""
    residues = cds(theta)
    return max(residues) - min(residues) <= 1 and 0 not in residues


def _max_brute_m() -> int:
    raw = os.environ.get(ENV_MAX_BRUTE_M)
    if raw is None:
        return DEFAULT_MAX_BRUTE_M
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_BRUTE_M} must be an integer, got {raw!r}") from None


def _check_brute_guard(m: int) -> None:
    cap = _max_brute_m()
    if m > cap:
        raise ValueError(
            f"brute-force enumeration over S_{m} refused (cap {cap}); "
            f"set {ENV_MAX_BRUTE_M} to raise it"
        )


def _sym(m: int):
    for vals in _sym_group(range(1, m + 1)):
        yield Permutation(vals)


def _brute(label: str, m: int) -> list[Permutation]:
    if label == "Sstar":
        targets = set(suranyi_table(m).permutations())
        return [p for p in _sym(m) if p in targets]
    predicate = {
        "V": in_V,
        "W": in_W,
        "Y": in_Y,
        "Yprime": in_Yprime,
        "X": in_X,
        "SosRec": satisfies_sos_recurrence,
    }[label]
    return [p for p in _sym(m) if predicate(p)]


def enumerate_class(label: str, m: int, method: str = "brute") -> PermClass:
    """Enumerate one labeled class of degree m.

    method 'brute' filters the symmetric group (guarded; see module doc),
    'lift' runs the degree-lifting recursion, and 'farey' reads the interval
    table; the latter two apply to V and Sstar only.
    """
    if label not in LABELS:
        raise ValueError(f"unknown class label {label!r}; expected one of {LABELS}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")

    if method in ("lift", "farey"):
        if label not in ("V", "Sstar"):
            raise ValueError(f"method {method!r} only enumerates V or Sstar, not {label}")
        if method == "lift":
            lifted = lifting.generate_up_to(m)[-1]
            return PermClass.from_array(label, m, lifted.as_array())
        return PermClass(label, m, suranyi_table(m).permutations())

    if label == "VL0":
        return PermClass(label, m, (theta_ab(m, a, 0) for a in range(1, m + 1) if gcd(a, m) == 1))
    if label == "VL1":
        return PermClass(label, m, (theta_ab(m, a, 1) for a in range(1, m + 1) if gcd(a, m) == 1))

    _check_brute_guard(m)
    if m == 1:
        # every class degenerates to S_1 except the delta-based ones,
        # which are undefined below degree 2
        if label in ("Yprime",):
            raise ValueError("Yprime needs degree >= 3")
        return PermClass(label, 1, [Permutation((1,))])
    if label == "SstarTilde":
        return shift_closure(PermClass(label, m, _brute("Sstar", m)))
    if label == "Vminus":
        vl1 = {theta_ab(m, a, 1) for a in range(1, m + 1) if gcd(a, m) == 1}
        return PermClass(label, m, (p for p in _brute("V", m) if p not in vl1))
    return PermClass(label, m, _brute(label, m))


def enumerate_sos_recurrence(m: int) -> PermClass:
    """All permutations satisfying the Sos recurrence, by exhaustive search.

    Whether this set ever exceeds the genuine Sos permutations is an open
    question; compare it against {inverse(theta) : theta in V} yourself, no
    claim is encoded here.
    """
    return enumerate_class("SosRec", m)


def verify_theorems(m_max: int) -> list[dict]:
    """Exhaustively check the structural theorems for every m up to m_max.

    Returns one record per check: {"m", "check", "passed", "detail"}.
    Failures become records, not exceptions.
    """
    if not 2 <= m_max <= 10:
        raise ValueError(f"m_max must lie in [2, 10] for exhaustive checks, got {m_max}")
    phi = totients(m_max)
    records = []

    def record(m: int, check: str, passed: bool, detail: str = "") -> None:
        records.append({"m": m, "check": check, "passed": passed, "detail": detail})

    prev_w: PermClass | None = None
    for m in range(2, m_max + 1):
        v = enumerate_class("V", m)
        w = enumerate_class("W", m)
        y = enumerate_class("Y", m)
        x = enumerate_class("X", m)
        sstar = enumerate_class("Sstar", m, method="farey")
        vl0 = enumerate_class("VL0", m)
        vl1 = enumerate_class("VL1", m)

        record(m, "V = W", v == w, f"|V|={len(v)}, |W|={len(w)}")
        record(m, "W subset of Y", set(w.members) <= set(y.members))
        if m >= 3:
            yprime = enumerate_class("Yprime", m)
            record(m, "Y = Yprime", y == yprime, f"|Y|={len(y)}")
        record(m, "Y is shift-closed", shift_closure(y) == y)
        record(m, "X = shift-closure of V", x == shift_closure(v), f"|X|={len(x)}")
        record(m, "Sstar (Farey table) = V", sstar == v)
        record(m, "|V| = totient sum", len(v) == totient_sum(m), f"{len(v)} vs {totient_sum(m)}")
        y_expected = m * totient_sum(m - 1)
        record(m, "|Y| = m * totient sum up to m-1", len(y) == y_expected, f"{len(y)} vs {y_expected}")

        singletons = sum(1 for p in v if len(cds(p)) == 1)
        record(m, "singleton-CDS members of V number 2*phi(m)", singletons == 2 * phi[m],
               f"{singletons} vs {2 * phi[m]}")

        record(m, "affine layers VL0, VL1 disjoint subsets of V, each of size phi(m)",
               set(vl0.members).isdisjoint(vl1.members)
               and set(vl0.members) <= set(v.members)
               and set(vl1.members) <= set(v.members)
               and len(vl0) == phi[m] and len(vl1) == phi[m])

        fixers = PermClass("Y1", m, (p for p in y if p(1) == 1))
        image = PermClass("psi-image", m - 1, (psi(p) for p in fixers))
        w_prev = prev_w if prev_w is not None else PermClass("W", 1, [Permutation((1,))])
        record(m, "psi(S^1 intersect Y) = W of degree m-1", image == w_prev,
               f"|image|={len(image)}")

        if m >= 3:
            layer0, layer1 = set(vl0.members), set(vl1.members)
            pairs = [(p, q) for p, q in combinations(v.members, 2) if shift_equivalent(p, q)]
            ok = all(
                (p in layer0 and q in layer1) or (p in layer1 and q in layer0)
                for p, q in pairs
            )
            record(m, "equivalent pairs inside V pair up the affine layers", ok,
                   f"{len(pairs)} pairs, phi(m)={phi[m]}")
        prev_w = w
    return records


def report_passed(records: list[dict]) -> bool:
    return all(r["passed"] for r in records)
