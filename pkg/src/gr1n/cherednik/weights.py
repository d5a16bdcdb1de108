"""Closed forms for t-weights, intertwiner transitions and norms of f_{mu,T}.

Everything here is symbolic in (kappa, c0, d_1, ..., d_{r-1}); pass a
ParamPoint to the transition functions to get specialized values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..combinatorics import StandardTableau, shift_phi, shift_psi, swap, wmu
from ..errors import SpectrumNotSimple
from ..scalars import FactoredScalar, LinearForm, ParamPoint


def K(r: int) -> LinearForm:
    return LinearForm.kappa(r)


def C0(r: int) -> LinearForm:
    return LinearForm.c0(r)


def D(r: int, j: int) -> LinearForm:
    return LinearForm.d(r, j)


@dataclass(frozen=True)
class Weight:
    alphas: tuple  # LinearForm per index
    residues: tuple  # beta_i mod r: t_{zeta_i} acts by zeta^{beta_i}

    @property
    def r(self) -> int:
        return self.alphas[0].r

    def evaluate(self, p: ParamPoint) -> tuple:
        return tuple(a.evaluate(p) for a in self.alphas), self.residues

    def phi_shift(self) -> "Weight":
        """phi.(alpha, beta): rotate left, last alpha gets kappa - d_{b-1} + d_{b-2}."""
        r = self.r
        a1, b1 = self.alphas[0], self.residues[0]
        last = a1 + K(r) - D(r, b1 - 1) + D(r, b1 - 2)
        return Weight(self.alphas[1:] + (last,), self.residues[1:] + ((b1 - 1) % r,))

    def psi_shift(self) -> "Weight":
        r = self.r
        an, bn = self.alphas[-1], self.residues[-1]
        first = an - K(r) + D(r, bn) - D(r, bn - 1)
        return Weight((first,) + self.alphas[:-1], ((bn + 1) % r,) + self.residues[:-1])

    def to_json(self) -> dict:
        return {"alphas": [a.to_json() for a in self.alphas], "residues": list(self.residues)}


def _box_data(mu, T: StandardTableau, i: int):
    w = wmu(mu)[0]
    b = T(w[i - 1])
    return b.component, b.content


def z_weight(mu: Sequence[int], T: StandardTableau) -> Weight:
    r = T.shape.r
    w = wmu(mu)[0]
    alphas, residues = [], []
    for i, m in enumerate(mu, start=1):
        b = T(w[i - 1])
        beta, c = b.component, b.content
        alphas.append(K(r) * (m + 1) - (D(r, beta) - D(r, beta - m - 1)) - C0(r) * (r * c))
        residues.append((beta - m) % r)
    return Weight(tuple(alphas), tuple(residues))


@dataclass(frozen=True)
class Transition:
    """Result of an intertwiner on f_{mu,T}: scalar * f_target, or zero."""

    target: tuple | None  # (mu, T)
    scalar: FactoredScalar
    case: str

    @property
    def is_zero(self) -> bool:
        return self.target is None or self.scalar.is_zero()

    def value(self, p: ParamPoint) -> Fraction:
        return Fraction(0) if self.target is None else self.scalar.evaluate(p)


ONE = FactoredScalar(1)
ZERO = FactoredScalar(0)


def delta_form(mu, T: StandardTableau, i: int) -> LinearForm:
    """The scalar by which z_i - z_{i+1} acts on f_{s_i.mu,T}."""
    r = T.shape.r
    b1, c1 = _box_data(mu, T, i)
    b2, c2 = _box_data(mu, T, i + 1)
    return K(r) * (mu[i - 1] - mu[i]) - (D(r, b1) - D(r, b2)) - C0(r) * (r * (c1 - c2))


def sigma_scalar_b(delta: LinearForm) -> FactoredScalar:
    r = delta.r
    rc = C0(r) * r
    return FactoredScalar(1, [(delta - rc, 1), (delta + rc, 1), (delta, -2)])


def sigma_transition(i: int, mu, T: StandardTableau, point: ParamPoint | None = None) -> Transition:
    n = len(mu)
    if not 1 <= i <= n - 1:
        raise ValueError(f"sigma index {i} out of range for n={n}")
    r = T.shape.r
    mu = tuple(mu)
    a, b = mu[i - 1], mu[i + 1 - 1]
    if a != b:
        target = (swap(mu, i), T)
        b1, _ = _box_data(mu, T, i)
        b2, _ = _box_data(mu, T, i + 1)
        if a < b or (a - b - (b1 - b2)) % r != 0:
            return Transition(target, ONE, "a")
        delta = delta_form(mu, T, i)
        if point is not None and delta.evaluate(point) == 0:
            raise SpectrumNotSimple(
                f"z_{i} - z_{i+1} vanishes on f_{{{swap(mu, i)}}}", witness={"mu": list(mu), "i": i})
        return Transition(target, sigma_scalar_b(delta), "b")
    j = wmu(mu)[0][i - 1]
    if j == 1 or not T.swap_is_standard(j - 1):
        return Transition(None, ZERO, "c")
    x, y = T(j - 1), T(j)
    sT = T.swapped(j - 1)
    if x.component != y.component:
        return Transition((mu, sT), ONE, "c")
    c = y.content - x.content
    coef = Fraction(1) if x.row < y.row else 1 - Fraction(1, c * c)
    return Transition((mu, sT), FactoredScalar(coef), "c")


def phi_transition(mu, T: StandardTableau) -> Transition:
    return Transition((shift_phi(mu), T), ONE, "d")


def psi_form(mu, T: StandardTableau) -> LinearForm:
    r = T.shape.r
    n = len(mu)
    beta, c = _box_data(mu, T, n)
    m = mu[-1]
    return K(r) * m - (D(r, beta) - D(r, beta - m)) - C0(r) * (r * c)


def psi_transition(mu, T: StandardTableau) -> Transition:
    if mu[-1] == 0:
        return Transition(None, ZERO, "e")
    return Transition((shift_psi(mu), T), FactoredScalar.of(psi_form(mu, T)), "e")


def norm(mu, T: StandardTableau) -> FactoredScalar:
    """<f_{mu,T}, f_{mu,T}> for the form with <v_T, v_T> = 1."""
    r = T.shape.r
    n = len(mu)
    w = wmu(mu)[0]
    a = [T(w[i]).content for i in range(n)]
    b = [T(w[i]).component for i in range(n)]
    factors = []
    rc = C0(r) * r
    for i in range(n):
        for k in range(1, mu[i] + 1):
            factors.append((K(r) * k - (D(r, b[i]) - D(r, b[i] - k)) - rc * a[i], 1))

    def ratio(k, p, q):
        x = K(r) * k - (D(r, b[p]) - D(r, b[q])) - rc * (a[p] - a[q])
        factors.extend([(x - rc, 1), (x + rc, 1), (x, -2)])

    for i in range(n):
        for j in range(i + 1, n):
            if mu[i] > mu[j]:
                for k in range(1, mu[i] - mu[j] + 1):
                    if (k - (b[i] - b[j])) % r == 0:
                        ratio(k, i, j)
            elif mu[i] < mu[j] - 1:
                for k in range(1, mu[j] - mu[i]):
                    if (k - (b[j] - b[i])) % r == 0:
                        ratio(k, j, i)
    return FactoredScalar(1, factors)
