"""Irreducible G(r,1,n)-modules in a rational seminormal basis.

The basis vector v_T is indexed by a standard tableau T.  The generator
t_{zeta_i} acts diagonally by zeta^{beta(T(i))}, and t_{s_i} acts through the
rule below, with c = ct(T(i+1)) - ct(T(i)):

* T(i), T(i+1) in different components: v_T -> v_{s_i.T};
* same component, s_i.T not standard: v_T -> (1/c) v_T;
* same component, s_i.T standard: a 2x2 block.  If T(i) lies in a higher
  row than T(i+1) then v_T -> (1/c) v_T + v_{s_i.T}; otherwise
  v_T -> (1/c) v_T + (1 - 1/c^2) v_{s_i.T}.

The square roots of the orthonormal seminormal form are thereby avoided; the
invariant Hermitian form is diagonal with rational weights gamma_T.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .combinatorics import (MultiPartition, StandardTableau, compose, inverse,
                            reduced_word, syt_enumerate, transposition, wmu)
from .errors import ConsistencyFailure
from .scalars import Cyclotomic


def _swap_column(T: StandardTableau, i: int):
    """Image of v_T under t_{s_i} as a list of (tableau, coefficient)."""
    a, b = T(i), T(i + 1)
    sT = T.swapped(i)
    if a.component != b.component:
        return [(sT, Fraction(1))]
    c = b.content - a.content
    if not T.swap_is_standard(i):
        return [(T, Fraction(1, c))]
    off = Fraction(1) if a.row < b.row else 1 - Fraction(1, c * c)
    return [(T, Fraction(1, c)), (sT, off)]


@dataclass
class SeminormalRep:
    """S^lambda with rational matrices for the simple transpositions."""

    shape: MultiPartition
    basis: tuple
    index: dict
    s_columns: list  # s_columns[i-1][t] = sparse image of basis vector t under t_{s_i}
    gamma: tuple
    _perm_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def r(self) -> int:
        return self.shape.r

    @property
    def dim(self) -> int:
        return len(self.basis)

    def beta(self, t: int, i: int) -> int:
        """beta(T(i)) for the t-th tableau."""
        return self.basis[t](i).component

    def content(self, t: int, i: int) -> int:
        return self.basis[t](i).content

    def s_matrix(self, i: int):
        """Dense matrix of t_{s_i} (columns are images)."""
        d = self.dim
        m = linalg.zeros(d, d)
        for t, col in enumerate(self.s_columns[i - 1]):
            for u, c in col:
                m[u][t] = c
        return m

    def zeta_matrix(self, i: int):
        """Diagonal Cyclotomic matrix of t_{zeta_i}."""
        d = self.dim
        zero = Cyclotomic.rational(self.r, 0)
        m = [[zero] * d for _ in range(d)]
        for t in range(d):
            m[t][t] = Cyclotomic.zeta(self.r, self.beta(t, i))
        return m

    def perm_matrix(self, w: tuple):
        """Matrix of t_w for w in S_n."""
        m = self._perm_cache.get(w)
        if m is None:
            m = linalg.eye(self.dim)
            for i in reduced_word(w):
                m = linalg.matmul(m, self.s_matrix(i))
            self._perm_cache[w] = m
        return m

    def transposition_matrix(self, i: int, j: int):
        return self.perm_matrix(transposition(self.n, i, j))

    def jm_matrix(self, i: int):
        """phi_i assembled from reflections: sum_{j<i} sum_l t_{zeta_i^l s_ij zeta_i^-l}.

        The l-sum of zeta^{l(beta_S(i) - beta_T(i))} is r or 0, so the result is rational.
        """
        d = self.dim
        out = linalg.zeros(d, d)
        for j in range(1, i):
            s = self.transposition_matrix(j, i)
            for u in range(d):
                for t in range(d):
                    if s[u][t] != 0 and (self.beta(u, i) - self.beta(t, i)) % self.r == 0:
                        out[u][t] += self.r * s[u][t]
        return out

    def twisted_vector(self, mu, t: int):
        """Coefficients of v_T^mu = t_{w_mu}^{-1} v_T in the basis v_S."""
        w = wmu(mu)[0]
        m = self.perm_matrix(inverse(w))
        return [m[u][t] for u in range(self.dim)]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "tableaux": [T.to_json() for T in self.basis],
            "s": [[[str(x) for x in row] for row in self.s_matrix(i)] for i in range(1, self.n)],
            "zeta_exponents": [[self.beta(t, i) for i in range(1, self.n + 1)] for t in range(self.dim)],
            "gamma": [str(g) for g in self.gamma],
        }


def build_rep(shape: MultiPartition) -> SeminormalRep:
    basis = syt_enumerate(shape)
    index = {T: k for k, T in enumerate(basis)}
    n = shape.n
    s_columns = []
    for i in range(1, n):
        cols = []
        for T in basis:
            cols.append([(index[S], c) for S, c in _swap_column(T, i)])
        s_columns.append(cols)

    # gamma by breadth-first search from the first tableau
    gamma = [None] * len(basis)
    if basis:
        gamma[0] = Fraction(1)
        queue = deque([0])
        while queue:
            t = queue.popleft()
            T = basis[t]
            for i in range(1, n):
                if not T.swap_is_standard(i):
                    continue
                u = index[T.swapped(i)]
                if u == t:
                    continue
                a, b = T(i), T(i + 1)
                if a.component != b.component:
                    g = gamma[t]
                else:
                    c = b.content - a.content
                    f = 1 - Fraction(1, c * c)
                    # from the source of the pair gamma is multiplied by f
                    g = gamma[t] * f if a.row < b.row else gamma[t] / f
                if gamma[u] is None:
                    gamma[u] = g
                    queue.append(u)
                elif gamma[u] != g:
                    raise ConsistencyFailure(f"gamma is path dependent at {basis[u]}")
    return SeminormalRep(shape, basis, index, s_columns, tuple(gamma))


@dataclass(frozen=True)
class JMData:
    """Per tableau: r*ct(T(i)) and beta(T(i)) for i = 1..n."""

    contents: tuple
    residues: tuple


def jm_eigen(rep: SeminormalRep) -> JMData:
    contents = tuple(tuple(rep.r * rep.content(t, i) for i in range(1, rep.n + 1)) for t in range(rep.dim))
    residues = tuple(tuple(rep.beta(t, i) for i in range(1, rep.n + 1)) for t in range(rep.dim))
    for i in range(1, rep.n + 1):
        m = rep.jm_matrix(i)
        for u in range(rep.dim):
            for t in range(rep.dim):
                want = contents[t][i - 1] if u == t else 0
                if m[u][t] != want:
                    raise ConsistencyFailure(
                        f"phi_{i} entry ({u},{t}) is {m[u][t]}, expected {want}")
    return JMData(contents, residues)


def twisted_vector(rep: SeminormalRep, mu, T: StandardTableau):
    return rep.twisted_vector(mu, rep.index[T])


def phi_mu_matrix(rep: SeminormalRep, mu, i: int):
    """phi_i^mu: reflections s_ij with j < i, mu_j < mu_i or j > i, mu_j <= mu_i."""
    d = rep.dim
    out = linalg.zeros(d, d)
    for j in range(1, rep.n + 1):
        if j == i or not ((j < i and mu[j - 1] < mu[i - 1]) or (j > i and mu[j - 1] <= mu[i - 1])):
            continue
        s = rep.transposition_matrix(i, j)
        for u in range(d):
            for t in range(d):
                if s[u][t] != 0 and (rep.beta(u, i) - rep.beta(t, i)) % rep.r == 0:
                    out[u][t] += rep.r * s[u][t]
    return out


def conjugated_jm(rep: SeminormalRep, mu, i: int):
    """t_{w_mu}^{-1} phi_{w_mu(i)} t_{w_mu}."""
    w = wmu(mu)[0]
    tw = rep.perm_matrix(w)
    twi = rep.perm_matrix(inverse(w))
    return linalg.matmul(twi, linalg.matmul(rep.jm_matrix(w[i - 1]), tw))


def perm_product(*ws):
    out = ws[0]
    for w in ws[1:]:
        out = compose(out, w)
    return out
