"""Degree lifting: reconstruct the class V of degree m from degree m-1.

The construction is purely arithmetic on integer sequences.  For each parent
pi of degree m-1, prepend a fixed point and add one to get theta_pi; the set
of adjacent differences of theta_pi mod m is either a singleton {a}, in which
case the parent contributes the two affine children (a*i mod m and its
shift), or a consecutive pair {a, a+1}, in which case it contributes the
single child theta_pi shifted by a.  Children of a branching parent are
emitted (0)-child first, (1)-child second; the tree module relies on that
emission order.

This module deliberately depends on nothing but the permutation core: no
fractions, no angles, no sorting of fractional parts anywhere.
"""
from __future__ import annotations

import numpy as np

from .perm_core import PermClass, Permutation, _dtype_for, gamma, psi

FORCE_THRESHOLD = 500
MAX_LIFT_DEGREE = 2000

TAG_SINGLE = -1
TAG_LEFT = 0
TAG_RIGHT = 1


def lift_fibers(parents: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized one-level lift kernel.

    parents: (N, m-1) integer array whose rows are the degree-(m-1) class V,
    in any row order.  Returns (children, parent_index, tags): children is
    (N', m) with each parent's children consecutive and in (0)/(1) order,
    parent_index maps each child row back to its parent row, and tags holds
    -1 for a single child, 0 and 1 for a branching pair.
    """
    if parents.ndim != 2:
        raise ValueError(f"expected a 2-d parent array, got shape {parents.shape}")
    n, prev_m = parents.shape
    m = prev_m + 1
    work = parents.astype(np.int64)

    theta = np.empty((n, m), dtype=np.int64)
    theta[:, 0] = 1
    theta[:, 1:] = work + 1

    diffs = (theta[:, 1:] - theta[:, :-1]) % m
    lo = diffs.min(axis=1)
    hi = diffs.max(axis=1)
    bad = hi - lo > 1
    if bad.any():
        row = parents[int(np.argmax(bad))]
        raise ValueError(
            "difference set is neither a singleton nor a consecutive pair "
            f"for parent {' '.join(map(str, row.tolist()))}; input is not the class V"
        )

    branching = lo == hi
    counts = np.where(branching, 2, 1)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    total = int(offsets[-1])

    dtype = _dtype_for(m)
    children = np.empty((total, m), dtype=dtype)
    tags = np.empty(total, dtype=np.int8)
    parent_index = np.repeat(np.arange(n, dtype=np.int64), counts)

    pair_rows = np.nonzero(~branching)[0]
    if pair_rows.size:
        a = lo[pair_rows, None]
        children[offsets[pair_rows]] = ((theta[pair_rows] + a - 1) % m + 1).astype(dtype)
        tags[offsets[pair_rows]] = TAG_SINGLE

    branch_rows = np.nonzero(branching)[0]
    if branch_rows.size:
        a = lo[branch_rows, None]
        i_range = np.arange(1, m + 1, dtype=np.int64)
        left = (a * i_range - 1) % m + 1
        children[offsets[branch_rows]] = left.astype(dtype)
        children[offsets[branch_rows] + 1] = (left % m + 1).astype(dtype)
        tags[offsets[branch_rows]] = TAG_LEFT
        tags[offsets[branch_rows] + 1] = TAG_RIGHT

    return children, parent_index, tags


def lift_once(vprev: PermClass) -> PermClass:
    """Lift the degree-(m-1) class V to degree m."""
    children, _, _ = lift_fibers(vprev.as_array())
    return PermClass.from_array("V", vprev.m + 1, children)


def generate_up_to(M: int, force: bool = False) -> list[PermClass]:
    """Run the lifting recursion from degree 1, returning every level.

    Storage for all levels grows like M^4/13 bytes, which is why degrees
    above 500 require force=True and degrees above 2000 are refused.
    """
    if M < 1:
        raise ValueError(f"target degree must be positive, got {M}")
    if M > MAX_LIFT_DEGREE:
        raise ValueError(f"lifting beyond degree {MAX_LIFT_DEGREE} is not supported")
    if M > FORCE_THRESHOLD and not force:
        raise ValueError(
            f"lifting to degree {M} > {FORCE_THRESHOLD} needs force=True "
            "(output grows quartically)"
        )
    level = np.array([[1]], dtype=_dtype_for(1))
    levels = [PermClass.from_array("V", 1, level)]
    for _ in range(1, M):
        level, _, _ = lift_fibers(level)
        levels.append(PermClass.from_array("V", levels[-1].m + 1, level))
    return levels


def _in_v(theta: Permutation) -> bool:
    # local congruence guard; the public predicate lives in perm_sets, which
    # this module must not import
    m = theta.m
    vals = theta.values
    first, last = vals[0], vals[-1]
    return all(
        (vals[i + 1] - vals[i]) % m == (first - (last <= vals[i])) % m
        for i in range(m - 1)
    )


def project(theta: Permutation) -> Permutation:
    """Down the generation tree: the degree-(m-1) parent of a class-V member."""
    if theta.m < 2:
        raise ValueError("projection needs degree >= 2")
    if not _in_v(theta):
        raise ValueError(f"{theta.one_line()} is not in the class V; projection undefined")
    return psi(gamma(theta))
