"""Exact scalars: rationals, cyclotomic numbers, parameter forms and products.

Rationals are :class:`fractions.Fraction`.  Cyclotomic numbers live in
Q[x]/(Phi_r(x)) with x standing for zeta = exp(2 pi i / r).  The Cherednik
parameters are kappa, c0 and d_0, ..., d_{r-1} with d_0 + ... + d_{r-1} = 0;
a :class:`LinearForm` only stores d_1, ..., d_{r-1} so the relation can never
be violated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import DivisionByZero, PoleAtPoint

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose: the package never works with inexact input.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_to_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# polynomial helpers over Q (coefficient lists, lowest degree first)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = _trim([Fraction(c) for c in b])
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        coef = a[-1] / lead
        q[shift] = coef
        for k, bc in enumerate(b):
            a[shift + k] -= coef * bc
    return _trim(q), a


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_r, lowest degree first."""
    if r < 1:
        raise ValueError("r must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (r - 1) + [Fraction(1)]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not _trim(rem)
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _power_table(r: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coefficient vectors of x^k for 0 <= k < max(r, 2 deg - 1)."""
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    table = []
    for k in range(max(r, 2 * deg - 1)):
        mono = [Fraction(0)] * k + [Fraction(1)]
        _, rem = _poly_divmod(mono, phi)
        rem = rem + [Fraction(0)] * (deg - len(rem))
        table.append(tuple(rem[:deg]))
    return tuple(table)


class Cyclotomic:
    """An element of the cyclotomic field Q(zeta_r)."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Iterable[RationalLike]):
        phi = cyclotomic_polynomial(r)
        deg = len(phi) - 1
        cs = [as_rational(c) for c in coeffs]
        if len(cs) > deg:
            _, rem = _poly_divmod(cs, phi)
            cs = rem
        cs = cs + [Fraction(0)] * (deg - len(cs))
        self.r = r
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, r: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.r = r
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, r: int, q: RationalLike) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(r)) - 1
        return cls._raw(r, (as_rational(q),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, r: int, k: int = 1) -> "Cyclotomic":
        """zeta_r ** k for any integer k."""
        return cls._raw(r, _power_table(r)[k % r])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.r != self.r:
                raise ValueError(f"mixing Q(zeta_{self.r}) and Q(zeta_{other.r})")
            return other
        return Cyclotomic.rational(self.r, other)

    def __add__(self, other):
        o = self._coerce(other)
        return Cyclotomic._raw(self.r, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.r, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            q = as_rational(other)
            return Cyclotomic._raw(self.r, tuple(a * q for a in self.coeffs))
        o = self._coerce(other)
        deg = self.degree
        if deg == 1:
            return Cyclotomic._raw(self.r, (self.coeffs[0] * o.coeffs[0],))
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        table = _power_table(self.r)
        out = list(prod[:deg])
        for k in range(deg, 2 * deg - 1):
            if prod[k]:
                for m, t in enumerate(table[k]):
                    if t:
                        out[m] += prod[k] * t
        return Cyclotomic._raw(self.r, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_r."""
        if self == 0:
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.r)]
        old_r, rem = _trim(list(self.coeffs)), phi
        old_s, s = [Fraction(1)], []
        while _trim(list(rem)):
            q, new_r = _poly_divmod(old_r, rem)
            old_r, rem = rem, new_r
            old_s, s = s, _poly_sub(old_s, _poly_mul(q, s))
        # old_r is a nonzero constant since Phi_r is irreducible
        assert len(old_r) == 1
        inv_c = 1 / old_r[0]
        return Cyclotomic(self.r, [c * inv_c for c in old_s])

    def __truediv__(self, other):
        if not isinstance(other, Cyclotomic):
            q = as_rational(other)
            if q == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / q)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(self.r, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^(r-1)."""
        table = _power_table(self.r)
        out = [Fraction(0)] * self.degree
        for k, c in enumerate(self.coeffs):
            if c:
                for m, t in enumerate(table[(-k) % self.r]):
                    if t:
                        out[m] += c * t
        return Cyclotomic._raw(self.r, tuple(out))

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.r == other.r and self.coeffs == other.coeffs
        try:
            q = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == q

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.r, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.r}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "ζ" if k == 1 else f"ζ^{k}"
                terms.append(mono if c == 1 else f"{c}·{mono}")
        return " + ".join(terms) if terms else "0"


def cyclotomic_arith(a: Cyclotomic, b: Cyclotomic | None, op: str) -> Cyclotomic:
    """Dispatch helper mirroring the operation table: add, mul, conjugate, invert."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "conjugate":
        return a.conjugate()
    if op == "invert":
        return a.inverse()
    raise ValueError(f"unknown cyclotomic operation {op!r}")


def root_sum(r: int, m: int) -> int:
    """sum_{l=0}^{r-1} zeta^(l m): r when r divides m, else 0."""
    return r if m % r == 0 else 0


# --------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class ParamPoint:
    """A rational specialization of (kappa, c0, d_0, ..., d_{r-1})."""

    r: int
    kappa: Fraction
    c0: Fraction
    d: tuple

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        object.__setattr__(self, "kappa", as_rational(self.kappa))
        object.__setattr__(self, "c0", as_rational(self.c0))
        d = tuple(as_rational(x) for x in self.d)
        if len(d) != self.r:
            raise ValueError(f"expected {self.r} values of d, got {len(d)}")
        if sum(d) != 0:
            raise ValueError(f"d values must sum to zero, got sum {sum(d)}")
        object.__setattr__(self, "d", d)

    @classmethod
    def from_free(cls, r: int, kappa: RationalLike, c0: RationalLike,
                  d_free: Sequence[RationalLike] = ()) -> "ParamPoint":
        """Build a point from d_1..d_{r-1}; d_0 is reconstructed."""
        rest = [as_rational(x) for x in d_free]
        if len(rest) != r - 1:
            raise ValueError(f"expected {r - 1} free d values, got {len(rest)}")
        return cls(r, kappa, c0, tuple([-sum(rest, Fraction(0))] + rest))

    def d_at(self, j: int) -> Fraction:
        return self.d[j % self.r]

    def normalized(self) -> "ParamPoint":
        """The equivalent point with kappa = 1 (y rescaled by 1/kappa)."""
        if self.kappa == 0:
            raise ValueError("kappa = 0 cannot be normalized")
        k = self.kappa
        return ParamPoint(self.r, Fraction(1), self.c0 / k, tuple(x / k for x in self.d))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "kappa": rational_to_str(self.kappa),
            "c0": rational_to_str(self.c0),
            "d": [rational_to_str(x) for x in self.d],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "ParamPoint":
        r = int(obj["r"])
        d = obj.get("d")
        if d is None:
            if r != 1:
                raise ValueError("d is required when r > 1")
            d = [0]
        return cls(r, as_rational(obj.get("kappa", 1)), as_rational(obj["c0"]), tuple(d))


_SUB = str.maketrans("0123456789-", "₀₁₂₃₄₅₆₇₈₉₋")


@dataclass(frozen=True)
class LinearForm:
    """constant + kappa*K + c0*C + sum_{j>=1} d_j*D_j, with d_0 eliminated."""

    r: int
    constant: Fraction = Fraction(0)
    kappa_coeff: Fraction = Fraction(0)
    c0_coeff: Fraction = Fraction(0)
    d_coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", as_rational(self.constant))
        object.__setattr__(self, "kappa_coeff", as_rational(self.kappa_coeff))
        object.__setattr__(self, "c0_coeff", as_rational(self.c0_coeff))
        d = tuple(as_rational(x) for x in self.d_coeffs)
        if not d:
            d = (Fraction(0),) * (self.r - 1)
        if len(d) != self.r - 1:
            raise ValueError(f"expected {self.r - 1} d coefficients, got {len(d)}")
        object.__setattr__(self, "d_coeffs", d)

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, r: int, value: RationalLike) -> "LinearForm":
        return cls(r, constant=as_rational(value))

    @classmethod
    def kappa(cls, r: int) -> "LinearForm":
        return cls(r, kappa_coeff=Fraction(1))

    @classmethod
    def c0(cls, r: int) -> "LinearForm":
        return cls(r, c0_coeff=Fraction(1))

    @classmethod
    def d(cls, r: int, j: int) -> "LinearForm":
        """The parameter d_j, index read mod r; d_0 = -(d_1 + ... + d_{r-1})."""
        j %= r
        if j == 0:
            return cls(r, d_coeffs=(Fraction(-1),) * (r - 1))
        coeffs = [Fraction(0)] * (r - 1)
        coeffs[j - 1] = Fraction(1)
        return cls(r, d_coeffs=tuple(coeffs))

    # arithmetic ---------------------------------------------------------
    def _vec(self) -> tuple:
        return (self.kappa_coeff, self.c0_coeff) + self.d_coeffs + (self.constant,)

    @classmethod
    def _from_vec(cls, r: int, v: Sequence[Fraction]) -> "LinearForm":
        return cls(r, constant=v[-1], kappa_coeff=v[0], c0_coeff=v[1], d_coeffs=tuple(v[2:-1]))

    def _check(self, other: "LinearForm"):
        if not isinstance(other, LinearForm):
            return LinearForm.const(self.r, other)
        if other.r != self.r:
            raise ValueError("linear forms for different r")
        return other

    def __add__(self, other):
        o = self._check(other)
        return LinearForm._from_vec(self.r, [a + b for a, b in zip(self._vec(), o._vec())])

    __radd__ = __add__

    def __neg__(self):
        return LinearForm._from_vec(self.r, [-a for a in self._vec()])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, q):
        q = as_rational(q)
        return LinearForm._from_vec(self.r, [a * q for a in self._vec()])

    __rmul__ = __mul__

    def is_constant(self) -> bool:
        return not any(self._vec()[:-1])

    def is_zero(self) -> bool:
        return not any(self._vec())

    def evaluate(self, p: ParamPoint) -> Fraction:
        if p.r != self.r:
            raise ValueError(f"form has r={self.r}, point has r={p.r}")
        total = self.constant + self.kappa_coeff * p.kappa + self.c0_coeff * p.c0
        for j, coef in enumerate(self.d_coeffs, start=1):
            total += coef * p.d[j]
        return total

    def normalize(self) -> tuple[Fraction, "LinearForm"]:
        """Split as scale * primitive where primitive has coprime integer
        coefficients and a positive leading coefficient (order kappa, c0, d_1.., const)."""
        v = self._vec()
        if not any(v):
            return Fraction(0), self
        lcm = 1
        for c in v:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in v]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        lead = next(c for c in ints if c)
        if lead < 0:
            g = -g
        prim = [Fraction(c // g) for c in ints]
        return Fraction(g, lcm), LinearForm._from_vec(self.r, prim)

    # serialization / display -------------------------------------------
    def to_json(self) -> dict:
        return {
            "const": rational_to_str(self.constant),
            "kappa": rational_to_str(self.kappa_coeff),
            "c0": rational_to_str(self.c0_coeff),
            "d": [rational_to_str(x) for x in self.d_coeffs],
        }

    @classmethod
    def from_json(cls, obj: Mapping, r: int | None = None) -> "LinearForm":
        d = tuple(as_rational(x) for x in obj.get("d", ()))
        r = len(d) + 1 if r is None else r
        return cls(r, as_rational(obj.get("const", 0)), as_rational(obj.get("kappa", 0)),
                   as_rational(obj.get("c0", 0)), d)

    def __str__(self):
        names = ["κ", "c₀"] + [f"d{str(j).translate(_SUB)}" for j in range(1, self.r)]
        parts = []
        for name, c in zip(names, self._vec()[:-1]):
            if c == 0:
                continue
            mag = abs(c)
            body = name if mag == 1 else f"{mag}{name}"
            parts.append(("−" if c < 0 else "+", body))
        if self.constant != 0 or not parts:
            parts.append(("−" if self.constant < 0 else "+", str(abs(self.constant))))
        sign, body = parts[0]
        out = ("−" if sign == "−" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def linform_eval(f: LinearForm, p: ParamPoint) -> Fraction:
    return f.evaluate(p)


def _form_key(f: LinearForm):
    return tuple(-c for c in f._vec())


class FactoredScalar:
    """constant * prod(form_i ** e_i) with normalized, pairwise non-proportional forms."""

    __slots__ = ("constant", "factors")

    def __init__(self, constant: RationalLike = 1,
                 factors: Mapping[LinearForm, int] | Iterable[tuple[LinearForm, int]] = ()):
        const = as_rational(constant)
        merged: dict[LinearForm, int] = {}
        items = factors.items() if isinstance(factors, Mapping) else factors
        for form, exp in items:
            if exp == 0:
                continue
            scale, prim = form.normalize()
            if scale == 0:
                if exp < 0:
                    raise DivisionByZero("zero linear form with negative exponent")
                const = Fraction(0)
                continue
            const *= scale ** exp
            if prim.is_constant():
                # prim is then the constant 1
                continue
            merged[prim] = merged.get(prim, 0) + exp
        if const == 0:
            merged = {}
        self.constant = const
        self.factors = tuple(sorted(((f, e) for f, e in merged.items() if e), key=lambda fe: _form_key(fe[0])))

    @classmethod
    def of(cls, form: LinearForm, exponent: int = 1) -> "FactoredScalar":
        return cls(1, [(form, exponent)])

    def is_zero(self) -> bool:
        return self.constant == 0

    def __mul__(self, other):
        if not isinstance(other, FactoredScalar):
            other = FactoredScalar(other)
        return FactoredScalar(self.constant * other.constant, list(self.factors) + list(other.factors))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FactoredScalar):
            other = FactoredScalar(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero factored scalar")
        return FactoredScalar(self.constant / other.constant,
                              list(self.factors) + [(f, -e) for f, e in other.factors])

    def __pow__(self, k: int):
        if k < 0 and self.is_zero():
            raise DivisionByZero("negative power of zero")
        return FactoredScalar(self.constant ** k, [(f, e * k) for f, e in self.factors])

    def __eq__(self, other):
        if not isinstance(other, FactoredScalar):
            try:
                other = FactoredScalar(other)
            except TypeError:
                return NotImplemented
        return self.constant == other.constant and self.factors == other.factors

    def __hash__(self):
        return hash((self.constant, self.factors))

    def evaluate(self, p: ParamPoint) -> Fraction:
        value = self.constant
        if value == 0:
            return value
        for form, exp in self.factors:
            v = form.evaluate(p)
            if v == 0 and exp < 0:
                raise PoleAtPoint(f"factor ({form}) vanishes at the point with exponent {exp}")
            value *= v ** exp
        return value

    def is_zero_at(self, p: ParamPoint) -> bool:
        """True iff a positive-exponent factor vanishes and no negative one does."""
        if self.constant == 0:
            return True
        pos = neg = False
        for form, exp in self.factors:
            if form.evaluate(p) == 0:
                if exp > 0:
                    pos = True
                else:
                    neg = True
        if neg:
            raise PoleAtPoint("a denominator factor vanishes at the point")
        return pos

    def to_json(self) -> dict:
        return {
            "constant": rational_to_str(self.constant),
            "factors": [{"form": f.to_json(), "exponent": e} for f, e in self.factors],
        }

    @classmethod
    def from_json(cls, obj: Mapping, r: int | None = None) -> "FactoredScalar":
        return cls(as_rational(obj["constant"]),
                   [(LinearForm.from_json(x["form"], r), int(x["exponent"])) for x in obj["factors"]])

    def __str__(self):
        if self.constant == 0:
            return "0"
        pieces = []
        if self.constant != 1 or not self.factors:
            pieces.append(str(self.constant))
        # numerator factors first, then denominators
        for form, exp in sorted(self.factors, key=lambda fe: fe[1] < 0):
            s = str(form)
            simple = (" " not in s) and not s.startswith("−")
            body = s if simple else f"({s})"
            pieces.append(body if exp == 1 else f"{body}^{{{exp}}}")
        return " · ".join(pieces)

    def __repr__(self):
        return f"FactoredScalar({self})"


def factored_arith(a: FactoredScalar, b: FactoredScalar, op: str) -> FactoredScalar:
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def factored_eval(a: FactoredScalar, p: ParamPoint) -> Fraction:
    return a.evaluate(p)


def factored_is_zero_at(a: FactoredScalar, p: ParamPoint) -> bool:
    return a.is_zero_at(p)
