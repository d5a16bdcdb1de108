"""Closed generators, the submodule lattice, and the calibration graph.

At a point with simple spectrum and kappa = 1, every submodule of M(lambda)
is spanned by the f_{mu,T} it contains, and the lattice is generated by the
closed sets Gamma_{b,k} and Gamma_{b1,b2,k}.  Membership of f_{mu,T} in a
lattice expression is therefore a pointwise test on (mu, T).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from ..combinatorics import (Box, GammaSet, MultiPartition, StandardTableau, compositions,
                             gamma_contains, shift_phi, shift_psi, swap, syt_enumerate, wmu)
from ..errors import KappaNotOne, OutOfScope, SpectrumNotSimple
from ..scalars import LinearForm, ParamPoint
from .spectrum import is_simple_spectrum
from .weights import C0, D, K, psi_transition, sigma_transition


@dataclass(frozen=True)
class ClosedGenerator:
    gamma: GammaSet
    equation: LinearForm  # vanishes at the point

    def contains(self, mu, T: StandardTableau) -> bool:
        return gamma_contains(self.gamma, mu, T)

    def to_json(self) -> dict:
        return {"set": self.gamma.to_json(), "equation": self.equation.to_json()}

    def __str__(self):
        return f"{self.gamma}  [{self.equation} = 0]"


def require_lattice_point(shape: MultiPartition, p: ParamPoint):
    if p.kappa != 1:
        raise KappaNotOne(f"lattice computations need kappa = 1, got {p.kappa}")
    if p.c0 == 0:
        raise OutOfScope("c0 = 0 is outside the scope of the lattice description")
    report = is_simple_spectrum(shape, p)
    if not report.simple:
        raise SpectrumNotSimple("the spectrum of M(lambda) is not simple at this point",
                                witness=[v.to_json() for v in report.violations])
    return report


def single_box_equation(b: Box, k: int, r: int) -> LinearForm:
    return K(r) * k - (D(r, b.component) - D(r, b.component - k)) - C0(r) * (r * b.content)


def pair_equation(b1: Box, b2: Box, k: int, sign: int, r: int) -> LinearForm:
    return (K(r) * k - (D(r, b1.component) - D(r, b2.component))
            - C0(r) * (r * (b1.content - b2.content + sign)))


def pair_set_is_empty(b1: Box, b2: Box) -> bool:
    """Gamma_{b1,b2,k} is empty when b2 is weakly south-east of b1 in one component,
    since then T^{-1}(b1) < T^{-1}(b2) for every standard T."""
    return b1.component == b2.component and b2.row >= b1.row and b2.col >= b1.col


def closed_generators(shape: MultiPartition, p: ParamPoint, check: bool = True) -> list[ClosedGenerator]:
    """All non-empty closed sets Gamma_{b,k} and Gamma_{b1,b2,k} at p."""
    if check:
        require_lattice_point(shape, p)
    r = shape.r
    out = {}
    for b in shape.boxes:
        i = b.component
        for rho in range(r):
            v = p.d_at(i) - p.d_at(i - rho) + r * b.content * p.c0
            if v.denominator == 1 and v > 0 and (int(v) - rho) % r == 0:
                k = int(v)
                g = GammaSet(b, k)
                out.setdefault(g, ClosedGenerator(g, single_box_equation(b, k, r)))
    for b1 in shape.boxes:
        for b2 in shape.boxes:
            if b1 == b2 or pair_set_is_empty(b1, b2):
                continue
            for sign in (1, -1):
                v = (p.d_at(b1.component) - p.d_at(b2.component)
                     + r * (b1.content - b2.content + sign) * p.c0)
                if v.denominator == 1 and v > 0 and (int(v) - (b1.component - b2.component)) % r == 0:
                    k = int(v)
                    g = GammaSet(b1, k, b2)
                    out.setdefault(g, ClosedGenerator(g, pair_equation(b1, b2, k, sign, r)))
    return sorted(out.values(), key=lambda g: (g.gamma.b2 is not None, g.gamma))


# --------------------------------------------------------------------------
# lattice expressions: a GammaSet / ClosedGenerator, or ("union"|"meet", expr, ...)

Expr = Union[GammaSet, ClosedGenerator, tuple]


def contains(expr: Expr, mu, T: StandardTableau) -> bool:
    if isinstance(expr, ClosedGenerator):
        return expr.contains(mu, T)
    if isinstance(expr, GammaSet):
        return gamma_contains(expr, mu, T)
    op, *args = expr
    if op == "union":
        return any(contains(a, mu, T) for a in args)
    if op == "meet":
        return all(contains(a, mu, T) for a in args)
    if op == "zero":
        return False
    if op == "all":
        return True
    raise ValueError(f"unknown lattice operation {op!r}")


def radical(gens: Sequence[ClosedGenerator]) -> Expr:
    return ("union", *gens) if gens else ("zero",)


def cyclic_submodule(mu, T: StandardTableau, gens: Sequence[ClosedGenerator]) -> Expr:
    """The submodule generated by f_{mu,T}: the meet of all closed sets containing it."""
    containing = [g for g in gens if g.contains(mu, T)]
    return ("meet", *containing) if containing else ("all",)


def submodule_span(mu, T: StandardTableau, gens: Sequence[ClosedGenerator]):
    """Membership predicate for the submodule generated by f_{mu,T}."""
    expr = cyclic_submodule(mu, T, gens)
    return lambda nu, S: contains(expr, nu, S)


def lattice_graded_dims(shape: MultiPartition, p: ParamPoint, gens, expr: Expr, maxdeg: int,
                        complement: bool = False) -> list[int]:
    """Graded dimensions of span{f_{mu,T} : (mu,T) in expr}, degrees 0..maxdeg.

    With ``complement`` the pairs outside expr are counted instead (for a
    submodule N this gives the graded dimension of M(lambda)/N).
    """
    tabs = syt_enumerate(shape)
    dims = []
    for d in range(maxdeg + 1):
        count = 0
        for mu in compositions(d, shape.n):
            for T in tabs:
                if contains(expr, mu, T) != complement:
                    count += 1
        dims.append(count)
    return dims


# --------------------------------------------------------------------------
# calibration graph


@dataclass(frozen=True)
class Edge:
    source: tuple
    target: tuple
    kind: str  # "sigma_i", "tableau_i", "phi", "psi"

    def to_json(self) -> dict:
        mu, T = self.target
        return {"kind": self.kind, "mu": list(mu), "tableau": T.to_json()}


def calibration_edges(mu, T: StandardTableau, p: ParamPoint | None = None) -> list[Edge]:
    """Out-edges of (mu, T).  With p=None the generic graph is returned."""
    mu = tuple(mu)
    n = len(mu)
    src = (mu, T)
    edges = []
    for i in range(1, n):
        if mu[i - 1] != mu[i]:
            tr = sigma_transition(i, mu, T, p)
            if p is None or tr.value(p) != 0:
                edges.append(Edge(src, (swap(mu, i), T), f"sigma_{i}"))
        else:
            j = wmu(mu)[0][i - 1]
            if j > 1 and T.swap_is_standard(j - 1):
                edges.append(Edge(src, (mu, T.swapped(j - 1)), f"tableau_{i}"))
    edges.append(Edge(src, (shift_phi(mu), T), "phi"))
    if mu[-1] > 0:
        tr = psi_transition(mu, T)
        if p is None or tr.value(p) != 0:
            edges.append(Edge(src, (shift_psi(mu), T), "psi"))
    return edges
