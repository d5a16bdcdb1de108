"""Multipartitions, tableaux, compositions and the index sets built from them.

Conventions used throughout the package:

* permutations of {1..n} are tuples ``w`` with ``w[i-1] = w(i)``;
  products compose right to left, ``(uv)(i) = u(v(i))``;
* a permutation acts on a sequence by moving entries, ``(w.mu)_i = mu_{w^{-1}(i)}``;
* boxes are ``Box(component, row, col)`` with 1-based row and column.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import OutOfDomain, SizeMismatch

Perm = tuple
Composition = tuple


# --------------------------------------------------------------------------
# permutations


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def compose(u: Perm, v: Perm) -> Perm:
    """The product uv, i.e. i -> u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


def simple(n: int, i: int) -> Perm:
    return transposition(n, i, i + 1)


def long_cycle(n: int) -> Perm:
    """c(i) = i+1 for i < n and c(n) = 1."""
    return tuple(list(range(2, n + 1)) + [1])


def act(w: Perm, seq: Sequence) -> tuple:
    """(w.seq)_i = seq_{w^{-1}(i)}."""
    out = [None] * len(seq)
    for i, wi in enumerate(w):
        out[wi - 1] = seq[i]
    return tuple(out)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def reduced_word(w: Perm) -> list[int]:
    """Indices i_1..i_l with w = s_{i_1} ... s_{i_l} (bubble sort)."""
    w = list(w)
    word = []
    # right-multiplying by s_i swaps entries i, i+1 of the image list
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def _rank_matrix(w: Perm):
    n = len(w)
    return [[sum(1 for a in range(i + 1) if w[a] >= j + 1) for j in range(n)] for i in range(n)]


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Bruhat order via the rank-matrix criterion."""
    if len(u) != len(v):
        raise SizeMismatch("permutations of different degree")
    ru, rv = _rank_matrix(u), _rank_matrix(v)
    return all(a <= b for row_u, row_v in zip(ru, rv) for a, b in zip(row_u, row_v))


# --------------------------------------------------------------------------
# compositions


def wmu(mu: Sequence[int]) -> tuple[Perm, Composition]:
    """The longest permutation sorting mu into non-decreasing order, and mu^-."""
    n = len(mu)
    w = tuple(
        sum(1 for j in range(i) if mu[j] < mu[i]) + sum(1 for j in range(i, n) if mu[j] <= mu[i])
        for i in range(n)
    )
    return w, tuple(sorted(mu))


def mu_minus(mu: Sequence[int]) -> Composition:
    return tuple(sorted(mu))


def mu_plus(mu: Sequence[int]) -> Composition:
    return tuple(sorted(mu, reverse=True))


def shift_phi(mu: Sequence[int]) -> Composition:
    mu = tuple(mu)
    return mu[1:] + (mu[0] + 1,)


def shift_psi(mu: Sequence[int]) -> Composition:
    mu = tuple(mu)
    if not mu or mu[-1] == 0:
        raise OutOfDomain(f"psi shift needs a positive last entry, got {mu}")
    return (mu[-1] - 1,) + mu[:-1]


def swap(mu: Sequence[int], i: int) -> Composition:
    """s_i.mu: exchange entries i and i+1."""
    mu = list(mu)
    mu[i - 1], mu[i] = mu[i], mu[i - 1]
    return tuple(mu)


def compositions(degree: int, n: int) -> Iterator[Composition]:
    """All mu in Z_{>=0}^n with |mu| = degree, in reverse lexicographic order."""
    if n == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in compositions(degree - first, n - 1):
            yield (first,) + rest


def bounded_compositions(n: int, bound: int) -> Iterator[Composition]:
    """All mu with every entry < bound."""
    return itertools.product(range(bound), repeat=n)


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a <=_d b for partition-like sequences (sorted decreasingly first)."""
    if sum(a) != sum(b):
        raise SizeMismatch(f"dominance between sizes {sum(a)} and {sum(b)}")
    a, b = mu_plus(a), mu_plus(b)
    m = max(len(a), len(b))
    a = a + (0,) * (m - len(a))
    b = b + (0,) * (m - len(b))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def composition_lt(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """The strict order on compositions: dominance of mu^+, then Bruhat of w_mu."""
    if len(mu) != len(nu) or sum(mu) != sum(nu):
        return False
    mp, np_ = mu_plus(mu), mu_plus(nu)
    if mp != np_:
        return dominance_leq(mp, np_)
    wm, wn = wmu(mu)[0], wmu(nu)[0]
    return wm != wn and bruhat_leq(wm, wn)


def pair_lt(a, b) -> bool:
    """(mu, T) < (nu, S) iff mu < nu; tableaux play no role."""
    return composition_lt(a[0], b[0])


def linear_extension_key(mu: Sequence[int]):
    """A sort key refining the composition order."""
    w = wmu(mu)[0]
    return (sum(mu), mu_plus(mu), length(w))


# --------------------------------------------------------------------------
# shapes


class Box(NamedTuple):
    component: int
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    @property
    def beta(self) -> int:
        return self.component

    def __str__(self):
        return f"({self.component},{self.row},{self.col})"


def ct(b: Box) -> int:
    return b.col - b.row


@dataclass(frozen=True)
class MultiPartition:
    """An r-tuple of partitions."""

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in part) for part in self.components)
        for part in comps:
            if any(x <= 0 for x in part) or any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise ValueError(f"not a partition: {part}")
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *parts) -> "MultiPartition":
        return cls(tuple(parts))

    @classmethod
    def from_json(cls, obj) -> "MultiPartition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(tuple(p) for p in obj))

    def to_json(self) -> list:
        return [list(p) for p in self.components]

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(sum(p) for p in self.components)

    @cached_property
    def boxes(self) -> tuple:
        """All boxes in reading order: component, then row, then column."""
        return tuple(
            Box(c, i, j)
            for c, part in enumerate(self.components)
            for i, rowlen in enumerate(part, start=1)
            for j in range(1, rowlen + 1)
        )

    def __contains__(self, b) -> bool:
        c, i, j = b
        if not 0 <= c < self.r:
            return False
        part = self.components[c]
        return 1 <= i <= len(part) and 1 <= j <= part[i - 1]

    def outside_corners(self) -> list[Box]:
        """Boxes that can hold the entry n in some standard tableau."""
        out = []
        for c, part in enumerate(self.components):
            for i, rowlen in enumerate(part, start=1):
                below = part[i] if i < len(part) else 0
                if rowlen > below:
                    out.append(Box(c, i, rowlen))
        return out

    def remove(self, b: Box) -> "MultiPartition":
        comps = [list(p) for p in self.components]
        comps[b.component][b.row - 1] -= 1
        if comps[b.component][b.row - 1] == 0:
            comps[b.component].pop()
        return MultiPartition(tuple(tuple(p) for p in comps))

    def content_range(self, c: int) -> tuple[int, int]:
        """(ct^-, ct^+) of component c, which must be non-empty."""
        part = self.components[c]
        if not part:
            raise ValueError(f"component {c} is empty")
        return 1 - len(part), part[0] - 1

    def is_row(self, c: int) -> bool:
        return len(self.components[c]) == 1

    def is_column(self, c: int) -> bool:
        part = self.components[c]
        return bool(part) and part[0] == 1

    def cyclic_shift(self, k: int = 1) -> "MultiPartition":
        """C^k with C.(l_0, ..., l_{r-1}) = (l_{r-1}, l_0, ..., l_{r-2})."""
        r = self.r
        return MultiPartition(tuple(self.components[(i - k) % r] for i in range(r)))

    def __str__(self):
        return "(" + ", ".join("(" + ",".join(map(str, p)) + ")" if p else "∅" for p in self.components) + ")"


class StandardTableau:
    """A standard filling of a multipartition, stored in both directions."""

    __slots__ = ("shape", "entries", "_pos", "_hash")

    def __init__(self, shape: MultiPartition, entries: Sequence[Box]):
        self.shape = shape
        self.entries = tuple(Box(*b) for b in entries)
        self._pos = {b: i for i, b in enumerate(self.entries, start=1)}
        self._hash = hash((shape, self.entries))
        if len(self._pos) != len(self.entries) or set(self.entries) != set(shape.boxes):
            raise ValueError("filling is not a bijection onto the boxes of the shape")

    def __call__(self, i: int) -> Box:
        """T(i)."""
        return self.entries[i - 1]

    def position(self, b: Box) -> int:
        """T^{-1}(b)."""
        return self._pos[b]

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_standard(self) -> bool:
        for b, i in self._pos.items():
            right = Box(b.component, b.row, b.col + 1)
            down = Box(b.component, b.row + 1, b.col)
            if right in self._pos and self._pos[right] < i:
                return False
            if down in self._pos and self._pos[down] < i:
                return False
        return True

    def swapped(self, i: int) -> "StandardTableau":
        """s_i.T: the entries i and i+1 exchanged (may be non-standard)."""
        e = list(self.entries)
        e[i - 1], e[i] = e[i], e[i - 1]
        t = object.__new__(StandardTableau)
        t.shape = self.shape
        t.entries = tuple(e)
        t._pos = {b: k for k, b in enumerate(t.entries, start=1)}
        t._hash = hash((t.shape, t.entries))
        return t

    def swap_is_standard(self, i: int) -> bool:
        a, b = self.entries[i - 1], self.entries[i]
        if a.component != b.component:
            return True
        return a.row != b.row and a.col != b.col

    def cyclic_shift(self, k: int = 1) -> "StandardTableau":
        r = self.shape.r
        return StandardTableau(self.shape.cyclic_shift(k),
                               [Box((b.component + k) % r, b.row, b.col) for b in self.entries])

    def reading_word(self) -> tuple:
        return tuple(self._pos[b] for b in self.shape.boxes)

    def rows(self) -> list:
        """Per-component row fillings."""
        out = []
        for c, part in enumerate(self.shape.components):
            out.append([[self._pos[Box(c, i, j)] for j in range(1, rl + 1)]
                        for i, rl in enumerate(part, start=1)])
        return out

    def to_json(self) -> list:
        return self.rows()

    @classmethod
    def from_rows(cls, shape: MultiPartition, rows) -> "StandardTableau":
        entries = [None] * shape.n
        for c, comp in enumerate(rows):
            for i, row in enumerate(comp, start=1):
                for j, v in enumerate(row, start=1):
                    entries[v - 1] = Box(c, i, j)
        t = cls(shape, entries)
        if not t.is_standard():
            raise ValueError("filling is not standard")
        return t

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.entries == other.entries and self.shape == other.shape

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"StandardTableau({self.rows()})"


@lru_cache(maxsize=None)
def syt_enumerate(shape: MultiPartition) -> tuple:
    """All standard tableaux, ordered lexicographically by reading word."""
    n = shape.n
    found = []

    def grow(sub: list, entries: list):
        # sub[c][i] is the current length of row i of component c
        k = len(entries) + 1
        if k > n:
            found.append(StandardTableau(shape, entries))
            return
        for c, part in enumerate(shape.components):
            cur = sub[c]
            for i, full in enumerate(part):
                if cur[i] < full and (i == 0 or cur[i - 1] > cur[i]):
                    cur[i] += 1
                    entries.append(Box(c, i + 1, cur[i]))
                    grow(sub, entries)
                    entries.pop()
                    cur[i] -= 1

    grow([[0] * len(p) for p in shape.components], [])
    found.sort(key=StandardTableau.reading_word)
    return tuple(found)


@lru_cache(maxsize=None)
def syt_count(shape: MultiPartition) -> int:
    """Number of standard tableaux by the branching recursion."""
    if shape.n == 0:
        return 1
    return sum(syt_count(shape.remove(b)) for b in shape.outside_corners())


# --------------------------------------------------------------------------
# the sets Gamma_{b,k} and Gamma_{b1,b2,k}


@dataclass(frozen=True, order=True)
class GammaSet:
    """Gamma_{b,k} when ``b2`` is None, otherwise Gamma_{b,b2,k}."""

    b: Box
    k: int
    b2: Box | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.b2 is not None and self.b2 == self.b:
            raise ValueError("box-pair sets need distinct boxes")

    @property
    def kind(self) -> str:
        return "single-box" if self.b2 is None else "box-pair"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "b": list(self.b), "k": self.k}
        if self.b2 is not None:
            out["b2"] = list(self.b2)
        return out

    @classmethod
    def from_json(cls, obj) -> "GammaSet":
        b2 = obj.get("b2")
        return cls(Box(*obj["b"]), int(obj["k"]), Box(*b2) if b2 is not None else None)

    def __str__(self):
        if self.b2 is None:
            return f"Γ[{self.b}, k={self.k}]"
        return f"Γ[{self.b}, {self.b2}, k={self.k}]"


def gamma_contains(g: GammaSet, mu: Sequence[int], T: StandardTableau) -> bool:
    w, mm = wmu(mu)
    p1 = T.position(g.b)
    if g.b2 is None:
        return mm[p1 - 1] >= g.k
    p2 = T.position(g.b2)
    diff = mm[p1 - 1] - mm[p2 - 1]
    if diff != g.k:
        return diff > g.k
    winv = inverse(w)
    return winv[p1 - 1] < winv[p2 - 1]


def inversion_set(mu: Sequence[int], T: StandardTableau) -> frozenset:
    """R(mu, T): every Gamma set that contains (mu, T)."""
    w, mm = wmu(mu)
    winv = inverse(w)
    out = set()
    boxes = T.shape.boxes
    for b in boxes:
        p = T.position(b)
        for k in range(1, mm[p - 1] + 1):
            out.add(GammaSet(b, k))
    for b1 in boxes:
        p1 = T.position(b1)
        for b2 in boxes:
            if b2 == b1:
                continue
            p2 = T.position(b2)
            diff = mm[p1 - 1] - mm[p2 - 1]
            for k in range(1, diff):
                out.add(GammaSet(b1, k, b2))
            if diff >= 1 and winv[p1 - 1] < winv[p2 - 1]:
                out.add(GammaSet(b1, diff, b2))
    return frozenset(out)


# --------------------------------------------------------------------------
# m-cores


def _beta_numbers(part: Sequence[int], length_: int) -> list[int]:
    part = list(part) + [0] * (length_ - len(part))
    return [part[i] + length_ - 1 - i for i in range(length_)]


def m_core(part: Sequence[int], m: int) -> tuple:
    """The m-core, by sliding beads up the runners of an m-abacus."""
    if m < 1:
        raise ValueError("m must be positive")
    part = tuple(x for x in part if x)
    if not part:
        return ()
    L = len(part)
    beads = _beta_numbers(part, L)
    counts = [0] * m
    for x in beads:
        counts[x % m] += 1
    slid = sorted((runner + m * level for runner in range(m) for level in range(counts[runner])), reverse=True)
    core = [slid[i] - (L - 1 - i) for i in range(L)]
    return tuple(x for x in core if x > 0)


def parse_shape(obj) -> MultiPartition:
    return MultiPartition.from_json(obj)


def tableau_from_json(shape: MultiPartition, obj) -> StandardTableau:
    return StandardTableau.from_rows(shape, obj)


def all_pairs(shape: MultiPartition, degree: int) -> Iterable[tuple]:
    """All (mu, T) with |mu| = degree."""
    tabs = syt_enumerate(shape)
    for mu in compositions(degree, shape.n):
        for T in tabs:
            yield mu, T
