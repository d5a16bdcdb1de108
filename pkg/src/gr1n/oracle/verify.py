"""Cross-checks between the closed formulas and the brute-force module."""

from __future__ import annotations

import random
from fractions import Fraction

from .. import linalg
from ..cherednik.spectrum import is_simple_spectrum
from ..cherednik.weights import norm, phi_transition, psi_transition, sigma_transition, z_weight
from ..combinatorics import MultiPartition, pair_lt, syt_enumerate
from ..errors import SpectrumNotSimple
from ..scalars import ParamPoint
from .module import ZERO, TruncatedModule, combine

ALL_CHECKS = (
    "hermitian", "unitary", "z_forms", "z_commute", "z_selfadjoint", "triangular",
    "eigen_weights", "psi_phi", "phi_psi", "y_vanishing", "norm",
    "sigma_transition", "phi_transition", "psi_transition", "sigma_relations",
)
EXPENSIVE = ("orthogonality",)


def random_rational(rng: random.Random, scale: int = 10 ** 6) -> Fraction:
    den = rng.randint(scale // 10, scale)
    return Fraction(rng.randint(-scale, scale), den)


def generic_point(shape: MultiPartition, seed: int = 0, kappa_one: bool = False,
                  max_tries: int = 100) -> ParamPoint:
    """A random rational point, rejection-sampled to simple spectrum for ``shape``."""
    rng = random.Random(seed)
    r = shape.r
    for _ in range(max_tries):
        kappa = Fraction(1) if kappa_one else random_rational(rng)
        c0 = random_rational(rng)
        if kappa == 0 or c0 == 0:
            continue
        p = ParamPoint.from_free(r, kappa, c0, [random_rational(rng) for _ in range(r - 1)])
        if is_simple_spectrum(shape, p).simple:
            return p
    raise RuntimeError("could not sample a simple-spectrum point")


def _vec_json(v: dict) -> dict:
    return {f"{list(mu)}|{t}": str(c) for (mu, t), c in sorted(v.items())}


def _diff(a: dict, b: dict) -> dict:
    return combine((1, a), (-1, b))


def _scaled(c, v: dict) -> dict:
    return {k: c * x for k, x in v.items() if c * x}


class _Check:
    def __init__(self, name):
        self.name = name
        self.degrees = set()
        self.counterexample = None
        self.ran = False

    def record(self, d, ok: bool, detail=None):
        self.ran = True
        self.degrees.add(d)
        if not ok and self.counterexample is None:
            self.counterexample = detail if detail is not None else {"degree": d}

    def to_json(self) -> dict:
        if not self.ran:
            status = "skip"
        else:
            status = "pass" if self.counterexample is None else "fail"
        out = {"check": self.name, "status": status, "degrees": sorted(self.degrees)}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class Verifier:
    """Runs the named checks on a TruncatedModule up to maxdeg."""

    def __init__(self, m: TruncatedModule, maxdeg: int | None = None):
        self.m = m
        self.maxdeg = m.maxdeg if maxdeg is None else min(maxdeg, m.maxdeg)
        self.tabs = syt_enumerate(m.shape)
        self._gram = None
        self._einv = {}

    @property
    def gram(self):
        if self._gram is None:
            self._gram = self.m.gram_blocks(self.maxdeg)
        return self._gram

    def eigen(self, d):
        return self.m.joint_eigenbasis(d)

    def f(self, mu, T):
        mu = tuple(mu)
        return self.eigen(sum(mu))[(mu, self.m.rep.index[T])]

    def degrees(self):
        return range(self.maxdeg + 1)

    # --------------------------------------------------------------- checks
    def hermitian(self, c: _Check):
        m = self.m
        for d in self.degrees():
            G = self.gram[d]
            b = m.basis(d)
            ok = linalg.equal(G, linalg.transpose(G))
            # t_{zeta_i}-unitarity: labels with different residues are orthogonal
            for x in range(len(b)):
                for y in range(len(b)):
                    if G[x][y] and m.residues(b[x]) != m.residues(b[y]):
                        ok = False
            c.record(d, ok)

    def unitary(self, c: _Check):
        m = self.m
        for d in self.degrees():
            G = self.gram[d]
            for i in range(1, m.n):
                P = m.matrix(lambda v, i=i: m.apply_s(i, v), d, d)
                ok = linalg.equal(linalg.matmul(linalg.transpose(P), linalg.matmul(G, P)), G)
                c.record(d, ok, {"degree": d, "generator": f"s_{i}"})

    def z_forms(self, c: _Check):
        m = self.m
        for d in range(self.maxdeg):
            for lab in m.basis(d):
                for i in range(1, m.n + 1):
                    v = {lab: Fraction(1)}
                    a, b = m.z(i, v, "yx"), m.z(i, v, "xy")
                    c.record(d, a == b, {"degree": d, "i": i, "label": _vec_json(v)})

    def z_commute(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for lab in m.basis(d):
                v = {lab: Fraction(1)}
                zs = [m.z(i, v) for i in range(1, m.n + 1)]
                for i in range(1, m.n + 1):
                    for j in range(i + 1, m.n + 1):
                        ok = m.z(i, zs[j - 1]) == m.z(j, zs[i - 1])
                        c.record(d, ok, {"degree": d, "i": i, "j": j, "label": _vec_json(v)})
                    ok = all(m.residues(k) == m.residues(lab) for k in zs[i - 1])
                    c.record(d, ok, {"degree": d, "i": i, "t_zeta": True, "label": _vec_json(v)})

    def z_selfadjoint(self, c: _Check):
        m = self.m
        for d in self.degrees():
            G = self.gram[d]
            for i, Z in enumerate(m.z_matrices(d), start=1):
                ok = linalg.equal(linalg.matmul(G, Z), linalg.matmul(linalg.transpose(Z), G))
                c.record(d, ok, {"degree": d, "i": i})

    def triangular(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for i in range(1, m.n + 1):
                cols = m.z_twisted(i, d)
                for (mu, t), col in cols.items():
                    T = self.tabs[t]
                    want = z_weight(mu, T).evaluate(m.point)[0][i - 1]
                    ok = col.get((mu, t), ZERO) == want
                    for (nu, u) in col:
                        if (nu, u) != (mu, t) and not pair_lt((nu, self.tabs[u]), (mu, T)):
                            ok = False
                    c.record(d, ok, {"degree": d, "i": i, "mu": list(mu), "tableau": T.to_json()})

    def eigen_weights(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for (mu, t), f in self.eigen(d).items():
                alphas, res = z_weight(mu, self.tabs[t]).evaluate(m.point)
                ok = all(m.residues(k) == tuple(x % m.r for x in res) for k in f)
                for i in range(1, m.n + 1):
                    ok = ok and m.z(i, f) == _scaled(alphas[i - 1], f)
                c.record(d, ok, {"degree": d, "mu": list(mu), "tableau": self.tabs[t].to_json()})

    def psi_phi(self, c: _Check):
        m = self.m
        for d in range(self.maxdeg):
            for lab in m.basis(d):
                v = {lab: Fraction(1)}
                c.record(d, m.Psi(m.Phi(v)) == m.z(1, v), {"degree": d, "label": _vec_json(v)})

    def phi_psi(self, c: _Check):
        m = self.m
        p = m.point
        for d in self.degrees():
            for lab in m.basis(d):
                v = {lab: Fraction(1)}
                rhs = combine((1, m.z(m.n, v)), (-p.kappa, v),
                              *[(p.d_at(j) - p.d_at(j - 1), m.e(m.n, j, v)) for j in range(m.r)])
                lhs = m.Phi(m.Psi(v)) if d > 0 else {}
                c.record(d, lhs == rhs, {"degree": d, "label": _vec_json(v)})

    def y_vanishing(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for (mu, t), f in self.eigen(d).items():
                for i in range(1, m.n + 1):
                    if all(mu[j - 1] == 0 for j in range(i, m.n + 1)):
                        c.record(d, not m.apply_y(i, f),
                                 {"degree": d, "i": i, "mu": list(mu), "tableau": self.tabs[t].to_json()})

    def norm(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for (mu, t), f in self.eigen(d).items():
                got = m.form(f, f, self.gram) / m.rep.gamma[t]
                want = norm(mu, self.tabs[t]).evaluate(m.point)
                c.record(d, got == want, {"degree": d, "mu": list(mu), "tableau": self.tabs[t].to_json(),
                                          "oracle": str(got), "formula": str(want)})

    def orthogonality(self, c: _Check):
        m = self.m
        for d in self.degrees():
            items = list(self.eigen(d).items())
            for a in range(len(items)):
                for b in range(a + 1, len(items)):
                    ok = m.form(items[a][1], items[b][1], self.gram) == 0
                    c.record(d, ok, {"degree": d, "pair": [_vec_json({items[a][0]: 1}), _vec_json({items[b][0]: 1})]})

    def _sigma_on_eigen(self, i: int, label, f: dict):
        """sigma_i f for an eigenvector f, or None where z_i - z_{i+1} is singular on pi_i f."""
        m = self.m
        alpha = m.weight(label)
        res = m.residues(next(iter(f)))
        pi = m.r if res[i - 1] == res[i] else 0
        sf = m.apply_s(i, f)
        if not pi:
            return sf
        delta = alpha[i - 1] - alpha[i]
        if delta == 0:
            return None
        return combine((1, sf), (m.point.c0 * pi / delta, f))

    def sigma_transition(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for (mu, t), f in self.eigen(d).items():
                T = self.tabs[t]
                for i in range(1, m.n):
                    got = self._sigma_on_eigen(i, (mu, t), f)
                    if got is None:
                        continue
                    tr = sigma_transition(i, mu, T)
                    want = {} if tr.target is None else _scaled(tr.value(m.point), self.f(*tr.target))
                    c.record(d, got == want, {"degree": d, "i": i, "mu": list(mu), "tableau": T.to_json(),
                                              "case": tr.case})

    def phi_transition(self, c: _Check):
        m = self.m
        for d in range(self.maxdeg):
            for (mu, t), f in self.eigen(d).items():
                tr = phi_transition(mu, self.tabs[t])
                want = _scaled(tr.value(m.point), self.f(*tr.target))
                c.record(d, m.Phi(f) == want, {"degree": d, "mu": list(mu), "tableau": self.tabs[t].to_json()})

    def psi_transition(self, c: _Check):
        m = self.m
        for d in self.degrees():
            for (mu, t), f in self.eigen(d).items():
                tr = psi_transition(mu, self.tabs[t])
                want = {} if tr.target is None else _scaled(tr.value(m.point), self.f(*tr.target))
                c.record(d, m.Psi(f) == want, {"degree": d, "mu": list(mu), "tableau": self.tabs[t].to_json()})

    def _eigen_inverse(self, d):
        """Labels, eigenvectors and the inverse of the eigenvector matrix on degree d."""
        if d not in self._einv:
            m = self.m
            idx = m.index(d)
            labels = m.basis(d)
            eig = self.eigen(d)
            E = [[ZERO] * len(labels) for _ in labels]
            for col, lab in enumerate(labels):
                for k, v in eig[lab].items():
                    E[idx[k]][col] = v
            self._einv[d] = (labels, eig, linalg.inverse(E))
        return self._einv[d]

    def sigma_operator(self, i: int, v: dict, d: int):
        """sigma_i on an arbitrary degree-d vector, None where undefined."""
        if not v:
            return {}
        m = self.m
        labels, eig, Einv = self._eigen_inverse(d)
        idx = m.index(d)
        coords = [sum((Einv[k][idx[lab]] * c for lab, c in v.items()), ZERO) for k in range(len(labels))]
        out = m.apply_s(i, v)
        for k, ck in enumerate(coords):
            if not ck:
                continue
            lab = labels[k]
            alpha = m.weight(lab)
            res = m.residues(next(iter(eig[lab])))
            if res[i - 1] != res[i]:
                continue
            delta = alpha[i - 1] - alpha[i]
            if delta == 0:
                return None
            out = combine((1, out), (ck * m.point.c0 * m.r / delta, eig[lab]))
        return out

    def sigma_relations(self, c: _Check):
        m = self.m
        c0 = m.point.c0
        for d in self.degrees():
            labels, eig, _ = self._eigen_inverse(d)
            for lab in labels:
                f = eig[lab]
                alpha = m.weight(lab)
                res = m.residues(next(iter(f)))
                for i in range(1, m.n):
                    s1 = self.sigma_operator(i, f, d)
                    s2 = None if s1 is None else self.sigma_operator(i, s1, d)
                    if s2 is not None:
                        delta = alpha[i - 1] - alpha[i]
                        pi = m.r if res[i - 1] == res[i] else 0
                        if delta != 0:
                            scal = (delta - c0 * pi) * (delta + c0 * pi) / (delta * delta)
                            c.record(d, s2 == _scaled(scal, f),
                                     {"degree": d, "relation": "square", "i": i, "label": _vec_json({lab: 1})})
                    if i + 1 < m.n:
                        lhs = self._word(f, d, (i, i + 1, i))
                        rhs = self._word(f, d, (i + 1, i, i + 1))
                        if lhs is not None and rhs is not None:
                            c.record(d, lhs == rhs,
                                     {"degree": d, "relation": "braid", "i": i, "label": _vec_json({lab: 1})})

    def _word(self, v, d, word):
        for i in reversed(word):
            v = self.sigma_operator(i, v, d)
            if v is None:
                return None
        return v

    def run(self, checks=ALL_CHECKS) -> list:
        out = []
        for name in checks:
            c = _Check(name)
            try:
                getattr(self, name)(c)
            except SpectrumNotSimple as e:
                c.record(-1, False, {"error": "SpectrumNotSimple", "message": str(e), "witness": e.witness})
            out.append(c.to_json())
        return out


def verify_suite(m: TruncatedModule, maxdeg: int | None = None, checks=ALL_CHECKS) -> dict:
    results = Verifier(m, maxdeg).run(checks)
    return {
        "shape": m.shape.to_json(),
        "point": m.point.to_json(),
        "maxdeg": m.maxdeg if maxdeg is None else min(maxdeg, m.maxdeg),
        "checks": results,
        "all_pass": all(r["status"] != "fail" for r in results),
    }
