"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored as an integer coefficient vector over a common positive
denominator, in the power basis 1, z, ..., z^(phi-1) reduced modulo the
cyclotomic polynomial.  Everything here is immutable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import mpmath
import numpy as np

BigRational = Fraction

DEFAULT_DIGITS = 40

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer polynomial helpers (low degree first)


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] if dd else [0]
    return q, rem


def _trim(coeffs: list) -> list:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(_trim(poly))


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


# ---------------------------------------------------------------------------
# contexts


@dataclass(frozen=True, eq=False)
class CycloContext:
    """The field Q(zeta_M) together with its reduction tables."""

    M: int
    phi: int
    cyclotomic_polynomial: tuple[int, ...]
    _powers: tuple[tuple[int, ...], ...] = field(repr=False, default=())
    _cache: dict = field(repr=False, default_factory=dict, compare=False)

    def __eq__(self, other):
        return isinstance(other, CycloContext) and other.M == self.M

    def __hash__(self):
        return hash(("cyclo", self.M))

    def __reduce__(self):
        return (make_context, (self.M,))

    # constructors -------------------------------------------------------
    def zero(self) -> "ExactNumber":
        return ExactNumber._raw(self, (0,) * self.phi, 1)

    def one(self) -> "ExactNumber":
        return self.rational(1)

    def rational(self, q: Scalar) -> "ExactNumber":
        q = Fraction(q)
        return ExactNumber._make(self, [q.numerator] + [0] * (self.phi - 1), q.denominator)

    def zeta(self, e: int = 1) -> "ExactNumber":
        """zeta_M ** e for any integer e."""
        return ExactNumber._raw(self, self._powers[e % self.M], 1)

    def i(self) -> "ExactNumber":
        if self.M % 4:
            raise ValueError(f"i is not in Q(zeta_{self.M})")
        return self.zeta(self.M // 4)

    def coerce(self, x) -> "ExactNumber":
        if isinstance(x, ExactNumber):
            if x.ctx.M != self.M:
                raise ValueError(f"context mismatch: {x.ctx.M} vs {self.M}")
            return x
        if isinstance(x, (int, Fraction)):
            return self.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(zeta_{self.M})")

    def from_coeffs(self, coeffs: Sequence[Scalar]) -> "ExactNumber":
        """Element sum c_k zeta^k; any length, reduced on the way in."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        acc = [0] * self.phi
        for e, c in enumerate(ints):
            if c:
                row = self._powers[e % self.M]
                for t in range(self.phi):
                    acc[t] += c * row[t]
        return ExactNumber._make(self, acc, den)

    # numeric tables -------------------------------------------------------
    def _numeric_powers(self, dps: int):
        key = ("mp", dps)
        tab = self._cache.get(key)
        if tab is None:
            with mpmath.workdps(dps):
                tab = [mpmath.expjpi(mpmath.mpf(2 * k) / self.M) for k in range(self.phi)]
            self._cache[key] = tab
        return tab

    def _float_powers(self) -> np.ndarray:
        tab = self._cache.get("f64")
        if tab is None:
            k = np.arange(self.phi)
            tab = np.exp(2j * np.pi * k / self.M)
            self._cache["f64"] = tab
        return tab


@lru_cache(maxsize=None)
def make_context(M: int) -> CycloContext:
    """Build (and memoize) Q(zeta_M)."""
    if M < 1:
        raise ValueError("conductor must be positive")
    phi_poly = cyclotomic_polynomial(M)
    phi = len(phi_poly) - 1
    powers = []
    for e in range(M):
        v = [0] * (e + 1)
        v[e] = 1
        if e >= phi:
            _, v = _poly_divmod_int(v, list(phi_poly))
        v = (list(v) + [0] * phi)[:phi]
        powers.append(tuple(v))
    return CycloContext(M, phi, phi_poly, tuple(powers))


def context_for_polygon(n: int) -> CycloContext:
    """Field holding every coordinate of the First Family of an n-gon."""
    return make_context(math.lcm(4, 2 * n))


# ---------------------------------------------------------------------------
# elements


def _gcd_all(values: Iterable[int], start: int) -> int:
    g = start
    for v in values:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return 1
    return g


class ExactNumber:
    """An element of Q(zeta_M) in canonical reduced form."""

    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self, ctx: CycloContext, coeffs: Sequence[Scalar]):
        obj = ctx.from_coeffs(coeffs)
        self.ctx, self.num, self.den, self._hash = obj.ctx, obj.num, obj.den, None

    @classmethod
    def _raw(cls, ctx, num: tuple, den: int) -> "ExactNumber":
        obj = object.__new__(cls)
        obj.ctx, obj.num, obj.den, obj._hash = ctx, num, den, None
        return obj

    @classmethod
    def _make(cls, ctx, num: list[int], den: int) -> "ExactNumber":
        if den < 0:
            num, den = [-c for c in num], -den
        g = _gcd_all(num, den)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        return cls._raw(ctx, tuple(num), den)

    # views ----------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    # arithmetic -----------------------------------------------------------
    def _other(self, other) -> "ExactNumber":
        if isinstance(other, ExactNumber):
            if other.ctx.M != self.ctx.M:
                raise ValueError(f"context mismatch: {self.ctx.M} vs {other.ctx.M}")
            return other
        return self.ctx.coerce(other)

    def __add__(self, other):
        try:
            b = self._other(other)
        except TypeError:
            return NotImplemented
        if self.den == b.den:
            return ExactNumber._make(self.ctx, [x + y for x, y in zip(self.num, b.num)], self.den)
        return ExactNumber._make(
            self.ctx, [x * b.den + y * self.den for x, y in zip(self.num, b.num)], self.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactNumber._raw(self.ctx, tuple(-c for c in self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            b = self._other(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return ExactNumber._make(self.ctx, [c * q.numerator for c in self.num], self.den * q.denominator)
        try:
            b = self._other(other)
        except TypeError:
            return NotImplemented
        phi = self.ctx.phi
        conv = [0] * (2 * phi - 1)
        bn = b.num
        for i, ai in enumerate(self.num):
            if ai:
                for j, bj in enumerate(bn):
                    if bj:
                        conv[i + j] += ai * bj
        poly = self.ctx.cyclotomic_polynomial
        for e in range(2 * phi - 2, phi - 1, -1):
            c = conv[e]
            if c:
                base = e - phi
                for t in range(phi):
                    if poly[t]:
                        conv[base + t] -= c * poly[t]
        return ExactNumber._make(self.ctx, conv[:phi], self.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "ExactNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return self.ctx.rational(Fraction(self.den, self.num[0]))
        a = _trim([Fraction(c) for c in self.num])
        r0 = [Fraction(c) for c in self.ctx.cyclotomic_polynomial]
        r1, s0, s1 = a, [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        inv = [x * self.den / c for x in s1]
        return self.ctx.from_coeffs(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return self * (1 / Fraction(other))
        try:
            b = self._other(other)
        except TypeError:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other):
        return self.ctx.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ctx.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, j: int) -> "ExactNumber":
        """Apply the automorphism zeta -> zeta^j (gcd(j, M) = 1)."""
        M = self.ctx.M
        if math.gcd(j, M) != 1:
            raise ValueError("exponent must be a unit mod M")
        phi = self.ctx.phi
        acc = [0] * phi
        for k, c in enumerate(self.num):
            if c:
                row = self.ctx._powers[(j * k) % M]
                for t in range(phi):
                    acc[t] += c * row[t]
        return ExactNumber._make(self.ctx, acc, self.den)

    def conj(self) -> "ExactNumber":
        return self.galois(self.ctx.M - 1) if self.ctx.M > 2 else self

    def is_real(self) -> bool:
        return self.conj() == self

    def real(self) -> "ExactNumber":
        return (self + self.conj()) * Fraction(1, 2)

    def imag(self) -> "ExactNumber":
        return (self - self.conj()) / (self.ctx.i() * 2)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, ExactNumber):
            return NotImplemented
        return self.ctx.M == other.ctx.M and self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.M, self.num, self.den))
        return self._hash

    def sign(self) -> int:
        """Exact sign of a real element (certified by increasing precision)."""
        if self.is_zero():
            return 0
        if not self.is_real():
            raise ValueError("sign of a non-real element")
        bound = sum(abs(c) for c in self.num) / self.den
        dps = 30
        while True:
            v = embed_numeric(self, dps).real
            if abs(v) > mpmath.mpf(10) ** (8 - dps) * (1 + bound):
                return 1 if v > 0 else -1
            dps *= 2
            if dps > 4000:
                raise ArithmeticError("could not certify sign")

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # numeric --------------------------------------------------------------
    def __complex__(self) -> complex:
        tab = self.ctx._float_powers()
        vals = np.array([float(Fraction(c, self.den)) for c in self.num])
        return complex(np.dot(vals, tab))

    def __float__(self) -> float:
        return complex(self).real

    def __repr__(self):
        return serialize(self)

    def __str__(self):
        return f"{serialize(self)} ~ {mpmath.nstr(embed_numeric(self, 20), 15)}"


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod_frac(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = _trim(num[:dd] if dd else [Fraction(0)])
    return _trim(q), rem


# ---------------------------------------------------------------------------
# field operations by name


def field_ops(a: ExactNumber, b: ExactNumber | None, op: str) -> ExactNumber:
    """Dispatch one of add, sub, mul, div, neg, conj."""
    if op in ("neg", "conj"):
        return -a if op == "neg" else a.conj()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if isinstance(b, ExactNumber) and b.ctx.M != a.ctx.M:
        raise ValueError(f"context mismatch: {a.ctx.M} vs {b.ctx.M}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_real(a: ExactNumber) -> bool:
    return a.is_real()


def embed_numeric(a: ExactNumber, digits: int = DEFAULT_DIGITS) -> mpmath.mpc:
    """High-precision complex value of a, carried with ten guard digits."""
    if digits < 1:
        raise ValueError("digits must be positive")
    dps = digits + 10
    tab = a.ctx._numeric_powers(dps)
    with mpmath.workdps(dps):
        acc = mpmath.mpc(0)
        for c, z in zip(a.num, tab):
            if c:
                acc += c * z
        acc = acc / a.den
        # exact symmetry beats rounding: keep real numbers off the imaginary axis noise
        if a.is_real():
            acc = mpmath.mpc(acc.real, 0)
        elif (a + a.conj()).is_zero():
            acc = mpmath.mpc(0, acc.imag)
        return acc


# ---------------------------------------------------------------------------
# trigonometric numbers


_TRIG_KINDS = ("sin", "cos", "tan", "cot")


def trig_exact(kind: str, k: int, denom: int, ctx: CycloContext) -> ExactNumber:
    """Exact kind(k*pi/denom) inside ctx."""
    if kind not in _TRIG_KINDS:
        raise ValueError(f"unknown trig kind {kind!r}")
    if denom < 1:
        raise ValueError("denominator must be positive")
    g = math.gcd(k, denom)
    k, denom = k // g, denom // g
    return _trig_cached(kind, k % (2 * denom), denom, ctx)


@lru_cache(maxsize=None)
def _trig_cached(kind: str, k: int, denom: int, ctx: CycloContext) -> ExactNumber:
    need = math.lcm(4, 2 * denom)
    if ctx.M % need:
        raise ValueError(f"conductor {ctx.M} too small for pi/{denom}; need a multiple of {need}")
    step = ctx.M // (2 * denom)
    z = ctx.zeta(k * step)  # exp(i k pi / denom)
    zi = ctx.zeta(-k * step)
    i = ctx.i()
    if kind == "cos":
        return (z + zi) * Fraction(1, 2)
    if kind == "sin":
        return (z - zi) / (i * 2)
    w = ctx.zeta(2 * k * step)  # exp(2 i k pi / denom)
    if kind == "tan":
        if w == -1:
            raise ZeroDivisionError(f"tan pole at {k}pi/{denom}")
        return -i * (w - 1) / (w + 1)
    if w == 1:
        raise ZeroDivisionError(f"cot pole at {k}pi/{denom}")
    return i * (w + 1) / (w - 1)


def sqrt_exact(n: int, ctx: CycloContext) -> ExactNumber:
    """Positive square root of a small squarefree-friendly integer via Gauss sums.

    Only the cases needed by the tests are supported: 2 and 3.
    """
    if n == 2:
        return trig_exact("cos", 1, 4, ctx) * 2
    if n == 3:
        return trig_exact("sin", 1, 3, ctx) * 2
    raise ValueError("only sqrt(2) and sqrt(3) are built in")


# ---------------------------------------------------------------------------
# polynomials over Q


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial over Q, lowest degree first, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = _trim([Fraction(x) for x in self.coeffs] or [Fraction(0)])
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if isinstance(x, ExactNumber) and not isinstance(acc, ExactNumber):
            acc = x.ctx.rational(acc)
        return acc

    def primitive(self) -> tuple[int, ...]:
        """Integer coprime multiple with positive leading coefficient."""
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = _gcd_all(ints, 0) or 1
        if ints[-1] < 0:
            g = -g
        return tuple(v // g for v in ints)

    def monic(self) -> "RationalPolynomial":
        lead = self.coeffs[-1]
        return RationalPolynomial(tuple(c / lead for c in self.coeffs))

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "x" if e == 1 else f"x^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sg, body in terms[1:]:
            s += f" {sg} {body}"
        return s

    @classmethod
    def of(cls, *coeffs: Scalar) -> "RationalPolynomial":
        return cls(tuple(Fraction(c) for c in coeffs))


# ---------------------------------------------------------------------------
# exact linear algebra


def _reduce_against(basis: list, vec: list, combo: list) -> tuple[list, list]:
    for pivot, row, rcombo in basis:
        c = vec[pivot]
        if c:
            vec = [v - c * r for v, r in zip(vec, row)]
            combo = [v - c * r for v, r in zip(combo, rcombo)]
    return vec, combo


def minimal_polynomial(a: ExactNumber) -> RationalPolynomial:
    """Minimal polynomial of a over Q as a primitive integer polynomial."""
    phi = a.ctx.phi
    basis: list = []
    power = a.ctx.one()
    for n in range(phi + 1):
        vec = list(power.coeffs)
        combo = [Fraction(0)] * (phi + 1)
        combo[n] = Fraction(1)
        vec, combo = _reduce_against(basis, vec, combo)
        nz = next((t for t, v in enumerate(vec) if v), None)
        if nz is None:
            poly = RationalPolynomial(tuple(combo[: n + 1]))
            return RationalPolynomial(tuple(Fraction(c) for c in poly.primitive()))
        lead = vec[nz]
        vec = [v / lead for v in vec]
        combo = [v / lead for v in combo]
        # keep the basis fully reduced so later rows stay independent
        basis = [
            (p, [x - r[nz] * y for x, y in zip(r, vec)], [x - r[nz] * y for x, y in zip(rc, combo)])
            for p, r, rc in basis
        ]
        basis.append((nz, vec, combo))
        power = power * a
    raise ArithmeticError("no linear dependence found")  # unreachable


def solve_rational(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve sum_j x_j col_j = target exactly; None when inconsistent."""
    rows = len(target)
    ncol = len(columns)
    mat = [[Fraction(columns[j][i]) for j in range(ncol)] + [Fraction(target[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, rows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if mat[i][ncol]:
            return None
    x = [Fraction(0)] * ncol
    for i, c in enumerate(pivots):
        x[c] = mat[i][ncol]
    return x


def express_in_generator(a: ExactNumber, g: ExactNumber) -> RationalPolynomial:
    """Coefficients c with sum c_i g^i = a, degree below deg minpoly(g)."""
    if a.ctx.M != g.ctx.M:
        raise ValueError("context mismatch")
    d = minimal_polynomial(g).degree
    cols, p = [], a.ctx.one()
    for _ in range(d):
        cols.append(p.coeffs)
        p = p * g
    sol = solve_rational(cols, a.coeffs)
    if sol is None:
        raise ValueError("not in subfield generated by g")
    return RationalPolynomial(tuple(sol))


def integrality(a: ExactNumber) -> str:
    """One of 'unit', 'integer_nonunit', 'nonintegral'."""
    prim = minimal_polynomial(a).primitive()
    if prim[-1] != 1:
        return "nonintegral"
    return "unit" if abs(prim[0]) == 1 else "integer_nonunit"


def zeta_polynomial_form(a: ExactNumber, order: int | None = None) -> RationalPolynomial:
    """a written in powers of zeta_order (order divides M; default M)."""
    M = a.ctx.M
    order = M if order is None else order
    if M % order:
        raise ValueError(f"{order} does not divide {M}")
    if order == M:
        return RationalPolynomial(a.coeffs)
    return express_in_generator(a, a.ctx.zeta(M // order))


# ---------------------------------------------------------------------------
# text form


_SER_RE = re.compile(r"^\s*cyclo\((\d+)\)\[(.*)\]\s*$")


def serialize(a: ExactNumber) -> str:
    parts = []
    for c in a.coeffs:
        parts.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    return f"cyclo({a.ctx.M})[{','.join(parts)}]"


def deserialize(text: str) -> ExactNumber:
    m = _SER_RE.match(text)
    if not m:
        raise ValueError(f"not a cyclotomic literal: {text!r}")
    ctx = make_context(int(m.group(1)))
    body = m.group(2).strip()
    vals = [Fraction(tok.strip()) for tok in body.split(",")] if body else []
    if len(vals) != ctx.phi:
        raise ValueError(f"expected {ctx.phi} coefficients, got {len(vals)}")
    return ctx.from_coeffs(vals)
