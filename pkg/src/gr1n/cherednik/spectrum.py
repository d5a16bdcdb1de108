"""Exceptional hyperplanes and the simple-spectrum test.

Two families of hyperplanes in (c0, d_1, ..., d_{r-1}) space (kappa = 1):

* cross-component: k = d_l - d_{l-k} + m r c0 with k > 0, k != 0 mod r, both
  lambda^l and lambda^{l-k} non-empty and m in a content window;
* row-column: k = c0 m with k > 0, for each non-empty lambda^i and m in a
  window that depends on whether lambda^i is a row, a column, or neither.

At a rational point the first family has at most one candidate k per
(l, residue, m), so membership is a finite check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..combinatorics import Box, MultiPartition, StandardTableau
from ..errors import OutOfScope
from ..scalars import LinearForm, ParamPoint


@dataclass(frozen=True)
class HyperplaneFamily:
    """k = form(m) for k in Z_{>0}, k = residue mod r, m in ms."""

    family: str
    l: int
    residue: int | None
    ms: tuple
    base: LinearForm  # the m-independent part (d_l - d_{l-k}, or 0)
    per_m: LinearForm  # coefficient form multiplied by m (r c0, or c0)

    def to_json(self) -> dict:
        out = {"family": self.family, "l": self.l, "m": list(self.ms),
               "base": self.base.to_json(), "per_m": self.per_m.to_json()}
        if self.residue is not None:
            out["residue"] = self.residue
        return out


@dataclass(frozen=True)
class Violation:
    family: str
    l: int
    m: int
    k: int

    def to_json(self) -> dict:
        return {"family": self.family, "l": self.l, "m": self.m, "k": self.k}


@dataclass
class SpectrumReport:
    simple: bool
    violations: list = field(default_factory=list)
    normalized: bool = False

    def to_json(self) -> dict:
        return {"simple": self.simple, "violations": [v.to_json() for v in self.violations]}

    def __bool__(self):
        return self.simple


def _row_column_window(shape: MultiPartition, i: int) -> range:
    lo, hi = shape.content_range(i)
    if shape.is_row(i):
        return range(1, hi + 1)
    if shape.is_column(i):
        return range(lo, 0)
    return range(lo - hi, hi - lo + 1)


def exceptional_hyperplanes(shape: MultiPartition) -> list[HyperplaneFamily]:
    r = shape.r
    out = []
    for l in range(r):
        if not shape.components[l]:
            continue
        for rho in range(1, r):
            src = (l - rho) % r
            if not shape.components[src]:
                continue
            lo_l, hi_l = shape.content_range(l)
            lo_s, hi_s = shape.content_range(src)
            ms = tuple(range(lo_l - hi_s, hi_l - lo_s + 1))
            out.append(HyperplaneFamily("cross-component", l, rho, ms,
                                        LinearForm.d(r, l) - LinearForm.d(r, src),
                                        LinearForm.c0(r) * r))
    for i in range(r):
        if not shape.components[i]:
            continue
        ms = tuple(m for m in _row_column_window(shape, i) if m != 0)
        if ms:
            out.append(HyperplaneFamily("row-column", i, None, ms,
                                        LinearForm(r), LinearForm.c0(r)))
    return out


def _positive_integer(v: Fraction) -> bool:
    return v.denominator == 1 and v > 0


def is_simple_spectrum(shape: MultiPartition, p: ParamPoint) -> SpectrumReport:
    """Decide whether the t-spectrum of M(lambda) is simple at p.

    The hyperplanes are stated for kappa = 1; other nonzero kappa are handled
    by rescaling the point to kappa = 1 first.
    """
    if p.r != shape.r:
        raise ValueError(f"point has r={p.r}, shape has r={shape.r}")
    if p.kappa == 0:
        raise OutOfScope("kappa = 0 is not supported")
    normalized = p.kappa != 1
    q = p.normalized() if normalized else p
    if q.c0 == 0:
        raise OutOfScope("c0 = 0: the hyperplane description needs c0 != 0")
    r = shape.r
    violations = []
    for fam in exceptional_hyperplanes(shape):
        base = fam.base.evaluate(q)
        slope = fam.per_m.evaluate(q)
        for m in fam.ms:
            k = base + m * slope
            if not _positive_integer(k):
                continue
            if fam.residue is not None and (int(k) - fam.residue) % r != 0:
                continue
            violations.append(Violation(fam.family, fam.l, m, int(k)))
    return SpectrumReport(not violations, violations, normalized)


def _tableau_with_early(shape: MultiPartition, early: Box) -> StandardTableau:
    """A standard tableau filling the boxes weakly north-west of ``early`` first."""
    ideal = [b for b in shape.boxes
             if b.component == early.component and b.row <= early.row and b.col <= early.col]
    rest = [b for b in shape.boxes if b not in ideal]
    return StandardTableau(shape, ideal + rest)


def _can_precede(first: Box, second: Box) -> bool:
    """Some standard tableau fills ``first`` before ``second``."""
    return not (first.component == second.component
                and first.row >= second.row and first.col >= second.col)


def violation_witness(shape: MultiPartition, v: Violation):
    """An explicit (mu, T, i) whose weight has wt_i = wt_{i+1} on the hyperplane of v.

    The collision needs boxes b = T(w_mu(i)), b' = T(w_mu(i+1)) with
    mu_i - mu_{i+1} = gap, ct(b) - ct(b') = m, and b' filled before b.
    """
    r = shape.r
    if v.family == "cross-component":
        comp_b, comp_b2, gap = v.l, (v.l - v.k) % r, v.k
    else:
        comp_b = comp_b2 = v.l
        gap = r * v.k
    for b in shape.boxes:
        if b.component != comp_b:
            continue
        for b2 in shape.boxes:
            if b2.component != comp_b2 or b2 == b or b.content - b2.content != v.m:
                continue
            if not _can_precede(b2, b):
                continue
            T = _tableau_with_early(shape, b2)
            if T.position(b2) > T.position(b):
                continue
            n = shape.n
            P, Q = T.position(b), T.position(b2)
            i = n - P + 1
            mu = [gap] * i + [0] + [gap] * (n - Q - i) + [0] * (Q - 1)
            return tuple(mu), T, i
    return None
