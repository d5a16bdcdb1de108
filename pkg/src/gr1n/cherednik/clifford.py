"""Descent from G(r,1,n) to G(r,p,n), and the m-core composition-factor filter."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..combinatorics import MultiPartition, dominance_leq, m_core
from ..errors import PreconditionFailed
from ..scalars import ParamPoint
from .findim import findim_check, l_dimension
from .lattice import closed_generators, lattice_graded_dims, radical


@dataclass(frozen=True)
class CliffordReport:
    p_div: int
    orbit_k: int
    num_summands: int
    graded_L: tuple
    graded_per_summand: tuple
    truncated: bool
    small_n: bool  # n < 3: the fixed-point realization of H_p is not asserted

    def to_json(self) -> dict:
        return {
            "p_div": self.p_div,
            "orbit_k": self.orbit_k,
            "num_summands": self.num_summands,
            "graded_L": list(self.graded_L),
            "graded_per_summand": [str(x) if isinstance(x, Fraction) else x for x in self.graded_per_summand],
            "truncated": self.truncated,
            "warning_n_lt_3": self.small_n,
        }


def orbit_k(shape: MultiPartition, p_div: int) -> int:
    """Least k >= 1 with C^{k r/p}.lambda = lambda."""
    step = shape.r // p_div
    k = 1
    while shape.cyclic_shift(k * step) != shape:
        k += 1
    return k


def check_symmetric(p: ParamPoint, p_div: int):
    r = p.r
    if p_div < 1 or r % p_div:
        raise PreconditionFailed(f"p = {p_div} does not divide r = {r}")
    period = r // p_div
    for i in range(r):
        if p.d_at(i) != p.d_at(i % period):
            raise PreconditionFailed(f"d_{i} != d_{i % period}: d must be constant mod r/p")


def clifford_split(shape: MultiPartition, p: ParamPoint, p_div: int, maxdeg: int | None = None,
                   gens=None) -> CliffordReport:
    """Graded dimensions of the summands L(lambda, q) of L(lambda) over H_p.

    If L(lambda) is certified finite dimensional its full graded dimension is
    used; otherwise ``maxdeg`` truncates the computation.
    """
    check_symmetric(p, p_div)
    if gens is None:
        gens = closed_generators(shape, p)
    cert = findim_check(shape, p, gens)
    if cert.finite:
        graded = l_dimension(shape, p, cert, gens).graded
        truncated = False
    else:
        if maxdeg is None:
            raise ValueError("L(lambda) is not certified finite; pass maxdeg")
        graded = tuple(lattice_graded_dims(shape, p, gens, radical(gens), maxdeg, complement=True))
        truncated = True
    k = orbit_k(shape, p_div)
    per = []
    for x in graded:
        v = Fraction(k * x, p_div)
        per.append(int(v) if v.denominator == 1 else v)
    return CliffordReport(p_div, k, p_div // k, graded, tuple(per), truncated, shape.n < 3)


def mcore_dominance_filter(lam, mu, k: int, m: int) -> bool:
    """Necessary condition for [M(lam) : L(mu)] != 0 at r = 1, c0 = k/m."""
    if m < 1 or math.gcd(k, m) != 1:
        raise ValueError("need m >= 1 and gcd(k, m) = 1")
    if sum(lam) != sum(mu):
        return False
    return dominance_leq(mu, lam) and m_core(mu, m) == m_core(lam, m)
