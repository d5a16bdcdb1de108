"""M(lambda) truncated by polynomial degree, as explicit exact operators.

Basis labels are ``(mu, t)`` meaning x^mu (x) v_t with v_t the t-th seminormal
basis vector.  Module elements are sparse dicts ``{label: Fraction}``.

Every operator used here (x_i, y_i, t_w for w in S_n, the reflection sums
sum_l t_{zeta_i^l s_ij zeta_i^-l}, e_ij, pi_i) maps the rational span of the
labels to itself: the only cyclotomic numbers that occur are full sums
sum_l zeta^{l m}, which equal r or 0.  t_{zeta_i} itself is diagonal on
labels, with eigenvalue zeta^{beta_t(i) - mu_i}; it is recorded by its
exponent.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from ..combinatorics import (MultiPartition, act, compose, compositions, inverse, transposition,
                             linear_extension_key, simple, wmu)
from ..errors import ConsistencyFailure, SpectrumNotSimple, TruncationExceeded
from ..scalars import Cyclotomic, ParamPoint
from ..wreath import SeminormalRep, build_rep

ZERO = Fraction(0)


def _add(target: dict, key, value):
    if value:
        v = target.get(key, ZERO) + value
        if v:
            target[key] = v
        else:
            target.pop(key, None)


def combine(*terms) -> dict:
    """Linear combination of (coefficient, vector) pairs."""
    out = {}
    for c, vec in terms:
        if c:
            for k, v in vec.items():
                _add(out, k, c * v)
    return out


def degree_of(vec: dict) -> int | None:
    for mu, _ in vec:
        return sum(mu)
    return None


class TruncatedModule:
    """The degree <= maxdeg part of M(lambda) at a rational parameter point."""

    def __init__(self, shape: MultiPartition, point: ParamPoint, maxdeg: int,
                 rep: SeminormalRep | None = None):
        if point.r != shape.r:
            raise ValueError("point and shape disagree on r")
        self.shape = shape
        self.point = point
        self.maxdeg = maxdeg
        self.rep = rep or build_rep(shape)
        self.n = shape.n
        self.r = shape.r
        self._basis = {}
        self._index = {}
        self._trans = {}
        self._perm = {}
        self._ycache = {}
        self._eigen = {}
        self._weights = {}
        self._beta = [[self.rep.beta(t, i) for i in range(1, self.n + 1)] for t in range(self.rep.dim)]

    # ------------------------------------------------------------------ basis
    def basis(self, d: int) -> list:
        b = self._basis.get(d)
        if b is None:
            mus = sorted(compositions(d, self.n), key=lambda m: (linear_extension_key(m), m))
            b = [(mu, t) for mu in mus for t in range(self.rep.dim)]
            self._basis[d] = b
            self._index[d] = {lab: k for k, lab in enumerate(b)}
        return b

    def index(self, d: int) -> dict:
        self.basis(d)
        return self._index[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def residue(self, label, i: int) -> int:
        """Exponent of the t_{zeta_i} eigenvalue on a basis label."""
        mu, t = label
        return (self._beta[t][i - 1] - mu[i - 1]) % self.r

    def residues(self, label) -> tuple:
        return tuple(self.residue(label, i) for i in range(1, self.n + 1))

    def twisted_residues(self, label) -> tuple:
        """t_{zeta_i} exponents on x^mu (x) v_t^mu: beta_t(w_mu(i)) - mu_i."""
        mu, t = label
        w = wmu(mu)[0]
        return tuple((self._beta[t][w[i] - 1] - mu[i]) % self.r for i in range(self.n))

    def basis_vector(self, mu, t) -> dict:
        return {(tuple(mu), t): Fraction(1)}

    # ------------------------------------------------------------------ group
    def _perm_columns(self, w):
        cols = self._perm.get(w)
        if cols is None:
            m = self.rep.perm_matrix(w)
            d = self.rep.dim
            cols = [[(u, m[u][t]) for u in range(d) if m[u][t] != 0] for t in range(d)]
            self._perm[w] = cols
        return cols

    def _trans_columns(self, i: int, j: int):
        key = (min(i, j), max(i, j))
        cols = self._trans.get(key)
        if cols is None:
            cols = self._perm_columns(transposition(self.n, *key))
            self._trans[key] = cols
        return cols

    def apply_perm(self, w, vec: dict) -> dict:
        """t_w for w in S_n: x^mu (x) v -> x^{w.mu} (x) t_w v."""
        w = tuple(w)
        cols = self._perm_columns(w)
        out = {}
        for (mu, t), c in vec.items():
            nu = act(w, mu)
            for u, s in cols[t]:
                _add(out, (nu, u), c * s)
        return out

    def apply_s(self, i: int, vec: dict) -> dict:
        return self.apply_perm(simple(self.n, i), vec)

    def apply_zeta(self, i: int, vec: dict, power: int = 1) -> dict:
        """t_{zeta_i}^power, with Cyclotomic coefficients."""
        out = {}
        for lab, c in vec.items():
            out[lab] = Cyclotomic.zeta(self.r, power * self.residue(lab, i)) * c
        return out

    def apply_group(self, generator, vec: dict) -> dict:
        """generator: ("s", i), ("zeta", i) or a permutation tuple."""
        if isinstance(generator, tuple) and generator and generator[0] == "s":
            return self.apply_s(generator[1], vec)
        if isinstance(generator, tuple) and generator and generator[0] == "zeta":
            return self.apply_zeta(generator[1], vec)
        return self.apply_perm(generator, vec)

    def reflection_sum(self, i: int, j: int, vec: dict) -> dict:
        """sum_l t_{zeta_i^l s_ij zeta_i^-l}."""
        cols = self._trans_columns(i, j)
        r = self.r
        out = {}
        for (mu, t), c in vec.items():
            shift = mu[i - 1] - mu[j - 1] - self._beta[t][i - 1]
            nu = list(mu)
            nu[i - 1], nu[j - 1] = nu[j - 1], nu[i - 1]
            nu = tuple(nu)
            for u, s in cols[t]:
                if (shift + self._beta[u][i - 1]) % r == 0:
                    _add(out, (nu, u), r * c * s)
        return out

    def jm(self, i: int, vec: dict) -> dict:
        out = {}
        for j in range(1, i):
            for k, v in self.reflection_sum(i, j, vec).items():
                _add(out, k, v)
        return out

    def e(self, i: int, j: int, vec: dict) -> dict:
        """The idempotent e_ij = (1/r) sum_l zeta^{-lj} t_{zeta_i^l}."""
        return {lab: c for lab, c in vec.items() if (self.residue(lab, i) - j) % self.r == 0}

    def pi(self, i: int, vec: dict) -> dict:
        """pi_i = sum_l (t_{zeta_i} t_{zeta_{i+1}}^{-1})^l."""
        return {lab: self.r * c for lab, c in vec.items()
                if (self.residue(lab, i) - self.residue(lab, i + 1)) % self.r == 0}

    # ------------------------------------------------------------ x and y
    def apply_x(self, i: int, vec: dict) -> dict:
        out = {}
        for (mu, t), c in vec.items():
            if sum(mu) + 1 > self.maxdeg:
                raise TruncationExceeded(f"x_{i} would leave degree {self.maxdeg}")
            nu = list(mu)
            nu[i - 1] += 1
            out[(tuple(nu), t)] = c
        return out

    def _y_basis(self, i: int, label) -> dict:
        key = (i, label)
        cached = self._ycache.get(key)
        if cached is not None:
            return cached
        mu, t = label
        p = self.point
        r = self.r
        out = {}
        a = mu[i - 1]
        beta = self._beta[t][i - 1]
        if a > 0:
            nu = list(mu)
            nu[i - 1] -= 1
            _add(out, (tuple(nu), t), p.kappa * a - (p.d_at(beta) - p.d_at(beta - a)))
        rc = r * p.c0
        if rc:
            for j in range(1, self.n + 1):
                if j == i:
                    continue
                b = mu[j - 1]
                if a == b:
                    continue
                for u, s in self._trans_columns(i, j)[t]:
                    db = self._beta[u][i - 1] - beta
                    if a > b:
                        for k in range(a - b):
                            if (k + db) % r == 0:
                                nu = list(mu)
                                nu[i - 1], nu[j - 1] = a - 1 - k, b + k
                                _add(out, (tuple(nu), u), -rc * s)
                    else:
                        for k in range(b - a):
                            if (a + k - b + db) % r == 0:
                                nu = list(mu)
                                nu[i - 1], nu[j - 1] = b - 1 - k, a + k
                                _add(out, (tuple(nu), u), rc * s)
        self._ycache[key] = out
        return out

    def apply_y(self, i: int, vec: dict) -> dict:
        out = {}
        for lab, c in vec.items():
            for k, v in self._y_basis(i, lab).items():
                _add(out, k, c * v)
        return out

    # ------------------------------------------------------------ t generators
    def z(self, i: int, vec: dict, form: str | None = None) -> dict:
        """z_i = y_i x_i + c0 phi_i, or the equivalent x_i y_i form at the top degree."""
        if not vec:
            return {}
        d = degree_of(vec)
        if form is None:
            form = "yx" if d < self.maxdeg else "xy"
        c0 = self.point.c0
        if form == "yx":
            return combine((1, self.apply_y(i, self.apply_x(i, vec))), (c0, self.jm(i, vec)))
        # x_i y_i + kappa - sum_j (d_j - d_{j-1}) e_ij - c0 sum_{j>i} reflections
        p = self.point
        out = {}
        if d > 0:
            yv = self.apply_y(i, vec)
            for (mu, t), c in yv.items():
                nu = list(mu)
                nu[i - 1] += 1
                _add(out, (tuple(nu), t), c)
        for lab, c in vec.items():
            rho = self.residue(lab, i)
            _add(out, lab, c * (p.kappa - (p.d_at(rho) - p.d_at(rho - 1))))
        for j in range(i + 1, self.n + 1):
            for k, v in self.reflection_sum(i, j, vec).items():
                _add(out, k, -c0 * v)
        return out

    def Phi(self, vec: dict) -> dict:
        """x_n t_{s_{n-1} ... s_1}."""
        w = _word_perm(self.n, range(self.n - 1, 0, -1))
        return self.apply_x(self.n, self.apply_perm(w, vec))

    def Psi(self, vec: dict) -> dict:
        """y_1 t_{s_1 ... s_{n-1}}."""
        w = _word_perm(self.n, range(1, self.n))
        return self.apply_y(1, self.apply_perm(w, vec))

    # ------------------------------------------------------------ matrices
    def matrix(self, op, d_in: int, d_out: int):
        """Dense matrix of a linear map from degree d_in to degree d_out (columns are images)."""
        rows = self.index(d_out)
        cols = self.basis(d_in)
        m = [[ZERO] * len(cols) for _ in range(len(rows))]
        for c, lab in enumerate(cols):
            for k, v in op({lab: Fraction(1)}).items():
                if k not in rows:
                    raise ConsistencyFailure(f"image of {lab} leaves degree {d_out}")
                m[rows[k]][c] = v
        return m

    def z_matrices(self, d: int, form: str | None = None) -> list:
        return [self.matrix(lambda v, i=i: self.z(i, v, form), d, d) for i in range(1, self.n + 1)]

    def t_zeta_matrices(self, d: int) -> list:
        """Diagonal Cyclotomic matrices of t_{zeta_i} on the degree-d block."""
        b = self.basis(d)
        zero = Cyclotomic.rational(self.r, 0)
        out = []
        for i in range(1, self.n + 1):
            m = [[zero] * len(b) for _ in b]
            for k, lab in enumerate(b):
                m[k][k] = Cyclotomic.zeta(self.r, self.residue(lab, i))
            out.append(m)
        return out

    # ------------------------------------------------------------ twisted basis
    def twisted_vector(self, mu, t: int) -> dict:
        """x^mu (x) v_t^mu with v_t^mu = t_{w_mu}^{-1} v_t."""
        mu = tuple(mu)
        cols = self._perm_columns(inverse(wmu(mu)[0]))
        return {(mu, u): s for u, s in cols[t]}

    def to_twisted(self, vec: dict) -> dict:
        """Coordinates of vec in the basis x^mu (x) v_t^mu."""
        groups = {}
        for (mu, t), c in vec.items():
            groups.setdefault(mu, {})[t] = c
        out = {}
        for mu, coeffs in groups.items():
            cols = self._perm_columns(wmu(mu)[0])
            for t, c in coeffs.items():
                for u, s in cols[t]:
                    _add(out, (mu, u), c * s)
        return out

    def from_twisted(self, coords: dict) -> dict:
        out = {}
        for (mu, t), c in coords.items():
            for k, v in self.twisted_vector(mu, t).items():
                _add(out, k, c * v)
        return out

    def z_twisted(self, i: int, d: int, form: str | None = None) -> dict:
        """Sparse columns {label: {label: value}} of z_i in the twisted basis."""
        return {lab: self.to_twisted(self.z(i, self.twisted_vector(*lab), form)) for lab in self.basis(d)}

    # ------------------------------------------------------------ eigenvectors
    def joint_eigenbasis(self, d: int, seed: int = 0, attempts: int = 6) -> dict:
        """f_{mu,T} for |mu| = d, keyed by (mu, tableau index), in the untwisted basis."""
        if d not in self._eigen:
            self._eigen[d] = self._solve_eigen(d, seed, attempts)
        return self._eigen[d]

    def weight(self, label) -> tuple:
        """The z-eigenvalues of f_label, read off the twisted diagonal."""
        if label in self._weights:
            return self._weights[label]
        mu, t = label
        tw = self.twisted_vector(mu, t)
        return tuple(self.to_twisted(self.z(i, tw)).get(label, ZERO) for i in range(1, self.n + 1))

    def _solve_eigen(self, d: int, seed: int, attempts: int) -> dict:
        labels = self.basis(d)
        zs = [self.z_twisted(i, d) for i in range(1, self.n + 1)]
        diag = {lab: tuple(z[lab].get(lab, ZERO) for z in zs) for lab in labels}
        self._weights.update(diag)
        classes = {}
        for lab in labels:
            classes.setdefault(self.twisted_residues(lab), []).append(lab)
        rng = random.Random(seed)
        for _ in range(attempts):
            theta = [rng.randint(1, 10 ** 6) for _ in range(self.n)]
            rows = {}
            for lab in labels:
                for k, v in _combined_column(zs, theta, lab).items():
                    rows.setdefault(k, {})[lab] = v
            try:
                coords = {}
                for members in classes.values():
                    coords.update(_back_substitute(members, rows, diag, theta))
                break
            except _Retry:
                continue
        else:
            raise ConsistencyFailure("could not separate eigenvalues with random combinations")
        out = {}
        for lab, x in coords.items():
            f = self.from_twisted(x)
            for i in range(1, self.n + 1):
                alpha = diag[lab][i - 1]
                zf = self.z(i, f)
                if zf != {k: alpha * v for k, v in f.items() if alpha * v}:
                    raise ConsistencyFailure(f"f_{lab} is not a z_{i}-eigenvector")
            out[lab] = f
        return out

    # ------------------------------------------------------------ contravariant form
    def gram_blocks(self, upto: int) -> list:
        """Dense Gram matrices G_0..G_upto in the untwisted basis.

        <x_i a, b> = <a, y_i b>, linear in the first slot; <v_s, v_t>_0 = delta gamma_t.
        """
        upto = min(upto, self.maxdeg)
        blocks = []
        dim0 = self.dim(0)
        g0 = [[ZERO] * dim0 for _ in range(dim0)]
        for k, (_, t) in enumerate(self.basis(0)):
            g0[k][k] = self.rep.gamma[t]
        blocks.append(g0)
        for d in range(1, upto + 1):
            prev = blocks[-1]
            pidx = self.index(d - 1)
            labels = self.basis(d)
            ys = {}
            g = [[ZERO] * len(labels) for _ in labels]
            for a, (mu, t) in enumerate(labels):
                i = next(k for k in range(1, self.n + 1) if mu[k - 1] > 0)
                nu = list(mu)
                nu[i - 1] -= 1
                row = prev[pidx[(tuple(nu), t)]]
                for b, lab in enumerate(labels):
                    yb = ys.get((i, b))
                    if yb is None:
                        yb = [(pidx[k], v) for k, v in self._y_basis(i, lab).items()]
                        ys[(i, b)] = yb
                    s = ZERO
                    for c, v in yb:
                        x = row[c]
                        if x:
                            s += x * v
                    g[a][b] = s
            blocks.append(g)
        return blocks

    def gram_block(self, d: int):
        return self.gram_blocks(d)[d]

    def form(self, f: dict, g: dict, gram: list) -> Fraction:
        """<f, g> using precomputed Gram blocks (f, g homogeneous of one degree)."""
        d = degree_of(f)
        if d is None or degree_of(g) != d:
            return ZERO
        idx = self.index(d)
        G = gram[d]
        total = ZERO
        for ka, va in f.items():
            row = G[idx[ka]]
            for kb, vb in g.items():
                x = row[idx[kb]]
                if x:
                    total += va * x * vb
        return total


class _Retry(Exception):
    pass


def _combined_column(zs, theta, lab) -> dict:
    out = {}
    for th, z in zip(theta, zs):
        for k, v in z[lab].items():
            _add(out, k, th * v)
    return out


def _back_substitute(members: list, rows: dict, diag: dict, theta) -> dict:
    """Solve for every joint eigenvector of a triangular block."""
    order = members  # already a linear extension of the composition order
    pos = {lab: k for k, lab in enumerate(order)}
    comb = {lab: sum(th * a for th, a in zip(theta, diag[lab])) for lab in order}
    out = {}
    for p, target in enumerate(order):
        lam = comb[target]
        x = {target: Fraction(1)}
        for q in range(p - 1, -1, -1):
            lab = order[q]
            row = rows.get(lab, {})
            num = ZERO
            for s, v in row.items():
                xs = x.get(s)
                if xs is not None and pos.get(s, -1) > q:
                    num += v * xs
            if not num:
                continue
            den = lam - comb[lab]
            if den == 0:
                if diag[lab] == diag[target]:
                    raise SpectrumNotSimple(
                        f"weight of {target} repeats at {lab}",
                        witness={"labels": [_label_json(target), _label_json(lab)]})
                raise _Retry()
            x[lab] = num / den
        out[target] = x
    return out


def _label_json(lab):
    mu, t = lab
    return {"mu": list(mu), "tableau_index": t}


def _word_perm(n: int, word: Iterable[int]):
    w = tuple(range(1, n + 1))
    for i in word:
        w = compose(w, simple(n, i))
    return w
