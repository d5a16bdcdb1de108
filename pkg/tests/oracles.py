"""Independent reference implementations used only by the tests.

Each one takes a different route from the library code it checks.
"""

from __future__ import annotations

import itertools

import sympy

from gr1n.combinatorics import MultiPartition, StandardTableau, act, transposition
from gr1n.scalars import Cyclotomic
from gr1n.wreath import SeminormalRep


# ---------------------------------------------------------------- partitions


def partitions(n, largest=None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def multipartitions(n, r):
    if r == 1:
        for p in partitions(n):
            yield MultiPartition((p,))
        return
    for k in range(n + 1):
        for p in partitions(k):
            for rest in multipartitions(n - k, r - 1):
                yield MultiPartition((p,) + rest.components)


def brute_force_syt(shape: MultiPartition):
    """All fillings of the boxes by 1..n, filtered for standardness."""
    boxes = shape.boxes
    out = []
    for perm in itertools.permutations(range(len(boxes))):
        T = StandardTableau(shape, [boxes[k] for k in perm])
        if T.is_standard():
            out.append(T)
    return out


def longest_sorting_permutation(mu):
    """Brute force over S_n: among w with w.mu non-decreasing, the one with most inversions."""
    n = len(mu)
    best = None
    for w in itertools.permutations(range(1, n + 1)):
        if list(act(w, mu)) == sorted(mu):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
            if best is None or inv > best[0]:
                best = (inv, w)
    return best[1]


def subword_bruhat_leq(u, v) -> bool:
    """u <= v iff some subword of a reduced word of v multiplies to u."""
    from gr1n.combinatorics import compose, identity, reduced_word, simple

    n = len(v)
    word = reduced_word(v)
    target = tuple(u)
    for mask in itertools.product((0, 1), repeat=len(word)):
        w = identity(n)
        for keep, i in zip(mask, word):
            if keep:
                w = compose(w, simple(n, i))
        if w == target:
            return True
    return False


# ---------------------------------------------------------------- m-cores


def _diagram(part):
    return {(i, j) for i, row in enumerate(part, start=1) for j in range(1, row + 1)}


def _is_partition_diagram(cells):
    for (i, j) in cells:
        if i > 1 and (i - 1, j) not in cells:
            return False
        if j > 1 and (i, j - 1) not in cells:
            return False
    return True


def _to_partition(cells):
    rows = {}
    for (i, _) in cells:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def rim_hooks(part, m):
    """All connected border strips of size m whose removal leaves a partition."""
    cells = _diagram(part)
    rim = {(i, j) for (i, j) in cells if (i + 1, j + 1) not in cells}
    out = []
    for start in rim:
        # grow a strip by walking right/up along the rim
        stack = [(start, frozenset([start]))]
        while stack:
            cur, strip = stack.pop()
            if len(strip) == m:
                rest = cells - strip
                if _is_partition_diagram(rest):
                    out.append(_to_partition(rest))
                continue
            i, j = cur
            for nxt in ((i - 1, j), (i, j + 1)):
                if nxt in rim and nxt not in strip:
                    stack.append((nxt, strip | {nxt}))
    return set(out)


def rim_hook_core(part, m, greedy_choice=min):
    part = tuple(part)
    while True:
        hooks = rim_hooks(part, m)
        if not hooks:
            return part
        part = greedy_choice(hooks)


# ---------------------------------------------------------------- cyclotomics via sympy

_z = sympy.Symbol("z")


def sympy_cyclotomic(c: Cyclotomic):
    return sum(sympy.Rational(x.numerator, x.denominator) * _z ** k for k, x in enumerate(c.coeffs))


def sympy_reduce(expr, r):
    return sympy.Poly(sympy.rem(sympy.expand(expr), sympy.cyclotomic_poly(r, _z), _z), _z)


def sympy_equal(a, b_expr, r) -> bool:
    return sympy_reduce(sympy_cyclotomic(a) - b_expr, r).is_zero


# ---------------------------------------------------------------- y action from the defining relations


class RelationModule:
    """M(lambda) with y_i computed by commuting past x's one at a time.

    Elements are dicts (mu, t) -> Cyclotomic.  Group elements act on the
    polynomial and the seminormal vector together; t_{zeta_i} scales x_i by
    zeta^{-1}.  Every sum over l is carried out with explicit roots of unity.
    """

    def __init__(self, rep: SeminormalRep, point):
        self.rep = rep
        self.p = point
        self.n = rep.n
        self.r = rep.r

    def zero(self):
        return Cyclotomic.rational(self.r, 0)

    def _add(self, out, key, val):
        cur = out.get(key)
        val = val if cur is None else cur + val
        if val:
            out[key] = val
        else:
            out.pop(key, None)

    def lin(self, *terms):
        out = {}
        for c, vec in terms:
            for k, v in vec.items():
                self._add(out, k, v * c)
        return out

    def t_zeta(self, i, vec, power=1):
        out = {}
        for (mu, t), c in vec.items():
            e = power * (self.rep.beta(t, i) - mu[i - 1])
            self._add(out, (mu, t), c * Cyclotomic.zeta(self.r, e))
        return out

    def t_perm(self, w, vec):
        m = self.rep.perm_matrix(w)
        out = {}
        for (mu, t), c in vec.items():
            nu = act(w, mu)
            for u in range(self.rep.dim):
                if m[u][t]:
                    self._add(out, (nu, u), c * m[u][t])
        return out

    def g(self, i, j, l, vec):
        """t_{zeta_i^l s_ij zeta_i^-l}."""
        return self.t_zeta(i, self.t_perm(transposition(self.n, i, j), self.t_zeta(i, vec, -l)), l)

    def e(self, i, j, vec):
        out = {}
        for l in range(self.r):
            term = self.t_zeta(i, vec, l)
            out = self.lin((1, out), (Cyclotomic.zeta(self.r, -l * j) / self.r, term))
        return out

    def x(self, j, vec):
        out = {}
        for (mu, t), c in vec.items():
            nu = list(mu)
            nu[j - 1] += 1
            out[(tuple(nu), t)] = c
        return out

    def y(self, i, vec):
        out = {}
        for (mu, t), c in vec.items():
            out = self.lin((1, out), (c, self._y_mono(i, mu, t)))
        return out

    def _y_mono(self, i, mu, t):
        if not any(mu):
            return {}
        j = next(k for k in range(1, self.n + 1) if mu[k - 1] > 0)
        rest = list(mu)
        rest[j - 1] -= 1
        m = {(tuple(rest), t): Cyclotomic.rational(self.r, 1)}
        out = self.x(j, self.y(i, m))
        c0, kappa = self.p.c0, self.p.kappa
        if i != j:
            for l in range(self.r):
                out = self.lin((1, out), (Cyclotomic.zeta(self.r, -l) * c0, self.g(i, j, l, m)))
            return out
        out = self.lin((1, out), (kappa, m))
        for jj in range(self.r):
            coef = self.p.d_at(jj) - self.p.d_at(jj - 1)
            if coef:
                out = self.lin((1, out), (-coef, self.e(i, jj, m)))
        for k in range(1, self.n + 1):
            if k == i:
                continue
            for l in range(self.r):
                out = self.lin((1, out), (-c0, self.g(i, k, l, m)))
        return out


def as_cyclotomic(vec: dict, r: int) -> dict:
    return {k: Cyclotomic.rational(r, v) for k, v in vec.items()}
