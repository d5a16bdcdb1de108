"""Finite-dimensionality certificates for L(lambda) and the resulting dimensions.

For every outside corner b we look for a chain

    b = b_0 -(pair, k_0)-> b_1 ~> b_2 -(pair, k_1)-> b_3 ~> ... b_{2m} -(single, k_m)-> stop

where each pair step uses a closed Gamma_{b_{2i}, b_{2i+1}, k_i}, each ``~>``
slides weakly right and down inside one component, and the chain ends with a
closed Gamma_{b_{2m}, k_m}.  The cheapest chain (in sum of k) is found with
Dijkstra; its cost bounds the largest entry of mu for any basis element of
L(lambda) whose tableau has T(n) = b.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from ..combinatorics import Box, GammaSet, MultiPartition, bounded_compositions, syt_enumerate
from ..scalars import ParamPoint
from .lattice import closed_generators, require_lattice_point


@dataclass(frozen=True)
class CornerChain:
    corner: Box
    boxes: tuple  # b_0, b_1, ..., b_{2m}
    ks: tuple  # k_0, ..., k_m

    @property
    def cost(self) -> int:
        return sum(self.ks)

    def to_json(self) -> dict:
        return {"corner": list(self.corner), "boxes": [list(b) for b in self.boxes],
                "k": list(self.ks), "sum": self.cost}


@dataclass(frozen=True)
class FinDimCertificate:
    chains: tuple
    bound: int

    finite = True

    def to_json(self) -> dict:
        return {"finite": True, "bound": self.bound, "chains": [c.to_json() for c in self.chains]}


@dataclass(frozen=True)
class NotProven:
    """No chain was found for some corner; L(lambda) may still be finite dimensional."""

    failed_corners: tuple
    chains: tuple = field(default=())

    finite = False

    def to_json(self) -> dict:
        return {"finite": None, "proven": False,
                "failed_corners": [list(b) for b in self.failed_corners],
                "chains": [c.to_json() for c in self.chains]}


def weakly_southeast(a: Box, b: Box) -> bool:
    """b lies weakly right of and weakly below a, in the same component."""
    return a.component == b.component and b.row >= a.row and b.col >= a.col


def _cheapest_chain(corner: Box, shape: MultiPartition, gens) -> CornerChain | None:
    singles = {}
    pairs = {}
    for g in gens:
        s = g.gamma
        if s.b2 is None:
            singles[s.b] = min(singles.get(s.b, s.k), s.k)
        else:
            pairs.setdefault(s.b, []).append((s.k, s.b2))
    boxes = shape.boxes
    counter = itertools.count()
    # state: the current even-indexed box; payload: (boxes so far, ks so far)
    heap = [(0, next(counter), corner, (corner,), ())]
    best = {}
    while heap:
        cost, _, b, path, ks = heapq.heappop(heap)
        if b == "done":
            return CornerChain(corner, path, ks)
        if best.get(b, float("inf")) <= cost:
            continue
        best[b] = cost
        if b in singles:
            k = singles[b]
            heapq.heappush(heap, (cost + k, next(counter), "done", path, ks + (k,)))
        for k, b_odd in sorted(pairs.get(b, ())):
            for b_even in boxes:
                if weakly_southeast(b_odd, b_even) and best.get(b_even, float("inf")) > cost + k:
                    heapq.heappush(heap, (cost + k, next(counter), b_even,
                                          path + (b_odd, b_even), ks + (k,)))
    return None


def findim_check(shape: MultiPartition, p: ParamPoint, gens=None, check: bool = True):
    """A finite-dimensionality certificate for L(lambda), or NotProven.

    ``check=False`` skips the simple-spectrum precondition; the chain search is
    then purely combinatorial and the result carries no guarantee.
    """
    if check:
        require_lattice_point(shape, p)
    if gens is None:
        gens = closed_generators(shape, p, check=False)
    chains, failed = [], []
    for corner in shape.outside_corners():
        chain = _cheapest_chain(corner, shape, gens)
        if chain is None:
            failed.append(corner)
        else:
            chains.append(chain)
    if failed:
        return NotProven(tuple(failed), tuple(chains))
    return FinDimCertificate(tuple(chains), max(c.cost for c in chains))


def validate_chain(shape: MultiPartition, p: ParamPoint, boxes, ks, gens=None) -> CornerChain:
    """Check a hand-written chain b_0, ..., b_{2m} with k_0, ..., k_m against the closed sets at p.

    No spectrum check is made here; raises ValueError naming the first broken link.
    """
    boxes = tuple(Box(*b) for b in boxes)
    ks = tuple(int(k) for k in ks)
    if len(boxes) != 2 * len(ks) - 1:
        raise ValueError("need 2m+1 boxes for m+1 values of k")
    if boxes[0] not in shape.outside_corners():
        raise ValueError(f"{boxes[0]} is not an outside corner")
    if gens is None:
        gens = closed_generators(shape, p, check=False)
    closed = {g.gamma for g in gens}
    m = len(ks) - 1
    for i in range(m):
        g = GammaSet(boxes[2 * i], ks[i], boxes[2 * i + 1])
        if g not in closed:
            raise ValueError(f"{g} is not closed at the point")
        if not weakly_southeast(boxes[2 * i + 1], boxes[2 * i + 2]):
            raise ValueError(f"{boxes[2 * i + 2]} is not weakly south-east of {boxes[2 * i + 1]}")
    last = GammaSet(boxes[-1], ks[-1])
    if last not in closed:
        raise ValueError(f"{last} is not closed at the point")
    return CornerChain(boxes[0], boxes, ks)


@dataclass(frozen=True)
class Dimension:
    dim: int
    graded: tuple

    def to_json(self) -> dict:
        return {"dim": self.dim, "graded": list(self.graded)}


def l_basis(shape: MultiPartition, gens, bound: int):
    """All (mu, T) with entries of mu below bound lying in no closed generator."""
    tabs = syt_enumerate(shape)
    for mu in bounded_compositions(shape.n, bound):
        for T in tabs:
            if not any(g.contains(mu, T) for g in gens):
                yield mu, T


def l_dimension(shape: MultiPartition, p: ParamPoint, cert: FinDimCertificate | None = None,
                gens=None) -> Dimension:
    if gens is None:
        gens = closed_generators(shape, p)
    if cert is None:
        cert = findim_check(shape, p, gens)
    if not cert.finite:
        raise ValueError("no finite-dimensionality certificate")
    hist = {}
    for mu, _ in l_basis(shape, gens, cert.bound):
        d = sum(mu)
        hist[d] = hist.get(d, 0) + 1
    top = max(hist) if hist else -1
    graded = tuple(hist.get(d, 0) for d in range(top + 1))
    return Dimension(sum(graded), graded)
