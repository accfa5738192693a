"""Independent ground-truth engines.

Three cheap classical computations that the main predicates are tested
against: the interlacing rule for restricting a unitary-group highest weight
one rank down, detection of spherical highest weights, and the explicit
rank-one matrix-coefficient model whose normalized values are Legendre
polynomials.  None of these share code with the modules they check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

import numpy as np

from .reps import HighestWeight


@dataclass(frozen=True)
class GTBranchResult:
    """Restriction multiplicity together with the inequalities that decided it."""

    multiplicity: int
    witness: tuple[tuple[str, bool], ...]


def un_branch_mult(lam: HighestWeight, mu: HighestWeight) -> GTBranchResult:
    """Multiplicity of mu in the restriction of lam one rank down.

    The classical rule: multiplicity 1 iff the entries interlace,
    lam_i >= mu_i >= lam_(i+1) for every i; otherwise 0.  Restriction one
    rank down is multiplicity free, so the result is always 0 or 1.
    """
    if len(mu) != len(lam) - 1:
        raise ValueError(f"rank mismatch: |mu| = {len(mu)} must be |lam| - 1 = {len(lam) - 1}")
    for e in lam.entries + mu.entries:
        if not e.is_integer:
            raise ValueError("weights must be integral")
    checks = []
    ok = True
    for i, m in enumerate(mu.entries):
        hi, lo = lam.entries[i], lam.entries[i + 1]
        sat = hi >= m >= lo
        checks.append((f"{hi} >= {m} >= {lo}", sat))
        ok = ok and sat
    return GTBranchResult(1 if ok else 0, tuple(checks))


def is_spherical(lam: HighestWeight) -> bool:
    """True iff the weight has the form (a, 0, ..., 0, -a) with a >= 0."""
    entries = lam.entries
    if len(entries) == 1:
        return entries[0].twice == 0
    first, last = entries[0], entries[-1]
    if first.twice < 0 or first != -last:
        return False
    return all(e.twice == 0 for e in entries[1:-1])


def compact_relative_mult(a: int, b: int, n: int) -> int:
    """Multiplicity of the spherical weight (b, 0, ..., -b) in the restriction
    of (a, 0, ..., -a) one rank down: 1 iff a >= b >= 0."""
    if n < 3:
        raise ValueError("need rank n >= 3")
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    return 1 if a >= b >= 0 else 0


def spherical_weight(a: int, n: int) -> HighestWeight:
    """The weight (a, 0, ..., 0, -a) of length n."""
    return HighestWeight.of(a, *([0] * (n - 2)), -a)


def su2_spherical_coefficient(n: int, theta_grid: Sequence[float]) -> np.ndarray:
    """Matrix coefficient of the middle monomial under rotations.

    On degree-2n homogeneous polynomials in (z, w), the rotation by theta
    sends zw to cos(t)sin(t) z^2 + (cos^2(t) - sin^2(t)) zw - cos(t)sin(t) w^2;
    raising that to the n-th power and pairing with z^n w^n under the
    invariant inner product (monomial squared norms j!(m-j)!/m!) gives the
    coefficient.  Normalized to 1 at theta = 0 it equals the Legendre
    polynomial of degree n in cos(2 theta).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    thetas = np.asarray(theta_grid, dtype=float)
    norm_sq = factorial(n) ** 2 / factorial(2 * n)
    out = np.empty_like(thetas)
    for idx, theta in enumerate(thetas.ravel()):
        c, s = np.cos(theta), np.sin(theta)
        action = ((0, c * s), (1, c * c - s * s), (2, -c * s))  # w-degree shift, coeff
        # expand the n-th power, tracking coefficients by w-degree
        poly = {0: 1.0}
        for _ in range(n):
            nxt: dict[int, float] = {}
            for deg, coeff in poly.items():
                for shift, factor in action:
                    nxt[deg + shift] = nxt.get(deg + shift, 0.0) + coeff * factor
            poly = nxt
        out.ravel()[idx] = poly.get(n, 0.0) * norm_sq
    return out
