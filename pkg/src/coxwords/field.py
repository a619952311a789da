"""Exact arithmetic in Q(theta) with theta = 2 cos(pi / L).

Elements are polynomials in theta of degree below deg(minpoly), reduced
modulo the (monic, integer) minimal polynomial and kept in canonical form,
so the zero test is syntactic.  Signs are decided exactly by evaluating on a
certified isolating interval for theta with rational interval arithmetic,
bisecting the interval until zero is excluded.  Floating point only seeds
the initial interval guess; a Sturm chain then certifies it.

The minimal polynomial is obtained from the cyclotomic polynomial of order
2L: that polynomial is palindromic, and rewriting it in the basis of the
Dickson polynomials D_k (D_k(x + 1/x) = x^k + x^-k) yields the minimal
polynomial of theta = zeta + 1/zeta directly, with integer coefficients and
no factorization step.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .system import INF, CoxeterSystem

Rat = int | Fraction

# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, low degree first)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


def _poly_rem(a: list, b: list) -> list:
    """Remainder of a by b over the rationals (b nonzero)."""
    a = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        _trim(a)
    return a


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer polynomials (raises if not exact)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        q, r = divmod(a[-1], b[-1])
        if r:
            raise ArithmeticError("division not exact")
        shift = len(a) - 1 - db
        out[shift] = q
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
        _trim(a)
    if a:
        raise ArithmeticError("division not exact")
    return _trim(out)


def _poly_eval(p: list, x: Rat) -> Rat:
    acc: Rat = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_deriv(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _sturm_chain(p: list) -> list[list]:
    chain = [list(p), _poly_deriv(p)]
    while chain[-1]:
        nxt = [-c for c in _poly_rem(chain[-2], chain[-1])]
        if not _trim(nxt):
            break
        chain.append(nxt)
    return chain


def _sign_changes(chain: list[list], x: Rat) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_count(chain: list[list], lo: Rat, hi: Rat) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the minimal polynomial of 2 cos(pi / L)


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(_cyclotomic(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _dickson(k: int) -> tuple[int, ...]:
    """D_k with D_k(x + 1/x) = x^k + x^-k: D_0 = 2, D_1 = x."""
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    prev2, prev = _dickson(k - 2), _dickson(k - 1)
    return tuple(_poly_sub(_poly_mul([0, 1], list(prev)), list(prev2)))


def _two_cos_minpoly(L: int) -> tuple[int, ...]:
    """Minimal polynomial of 2 cos(pi / L), monic with integer coefficients."""
    phi = list(_cyclotomic(2 * L))
    d = (len(phi) - 1) // 2
    work = list(phi)
    result = [0] * (d + 1)
    for j in range(d, 0, -1):
        bj = work[d + j]
        result_add = [bj * c for c in _dickson(j)]
        for i, c in enumerate(result_add):
            result[i] += c
        work[d + j] -= bj
        work[d - j] -= bj
    result[0] += work[d]  # leftover middle coefficient is the constant term
    return tuple(result)


# ---------------------------------------------------------------------------
# field context and elements


def _norm_coeff(c: Rat) -> Rat:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class FieldContext:
    """The field Q(theta), theta = 2 cos(pi / L), with a certified isolating
    interval for theta.  Instances are shared via :func:`field_for`; the
    interval only ever narrows, which is a transparent refinement."""

    def __init__(self, L: int):
        if L < 2:
            raise ValueError("L must be at least 2")
        self.L = L
        self.minpoly = _two_cos_minpoly(L)
        self.degree = len(self.minpoly) - 1
        self._sign_cache: dict[tuple, int] = {}
        if self.degree == 1:
            # theta is rational: x + a0 = 0
            theta = Fraction(-self.minpoly[0])
            self._lo = theta - 1
            self._hi = theta + 1
        else:
            self._lo, self._hi = self._isolate()

    def _isolate(self) -> tuple[Fraction, Fraction]:
        chain = _sturm_chain(list(self.minpoly))
        guess = Fraction(2 * math.cos(math.pi / self.L))
        delta = Fraction(1, 64)
        while delta > Fraction(1, 2 ** 64):
            lo, hi = guess - delta, guess + delta
            if (_poly_eval(list(self.minpoly), lo) != 0
                    and _poly_eval(list(self.minpoly), hi) != 0
                    and _sturm_count(chain, lo, hi) == 1):
                return lo, hi
            delta /= 2
        raise ArithmeticError(f"failed to isolate 2cos(pi/{self.L})")

    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def _refine(self) -> None:
        mid = (self._lo + self._hi) / 2
        mp = list(self.minpoly)
        vm = _poly_eval(mp, mid)
        assert vm != 0  # irreducible of degree >= 2 has no rational root
        vl = _poly_eval(mp, self._lo)
        if (vl > 0) != (vm > 0):
            self._hi = mid
        else:
            self._lo = mid

    # element constructors

    def element(self, coeffs) -> "FieldElement":
        cs = [Fraction(c) if not isinstance(c, (int, Fraction)) else c
              for c in coeffs]
        cs = self._reduce(cs)
        return FieldElement(self, tuple(_norm_coeff(c) for c in cs))

    def _reduce(self, cs: list) -> list:
        d = self.degree
        cs = list(cs)
        if len(cs) < d:
            cs += [0] * (d - len(cs))
        for k in range(len(cs) - 1, d - 1, -1):
            c = cs[k]
            if c:
                for i in range(d):
                    cs[k - d + i] -= c * self.minpoly[i]
            cs.pop()
        return cs

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def rational(self, q: Rat) -> "FieldElement":
        return self.element([q])

    def theta(self) -> "FieldElement":
        return self.element([0, 1])

    def embed_bond(self, m) -> "FieldElement":
        """The edge weight 2 cos(pi / m); an infinite bond embeds as 2."""
        if m == INF:
            return self.rational(2)
        m = int(m)
        if m < 2:
            raise ValueError("bond strength must be at least 2")
        if self.L % m != 0:
            raise ValueError(f"bond {m} does not divide the field order L={self.L}")
        k = self.L // m
        # Dickson recurrence evaluated at theta inside the field
        if k == 0:
            return self.rational(2)
        prev2, prev = self.rational(2), self.theta()
        th = self.theta()
        for _ in range(k - 1):
            prev2, prev = prev, th * prev - prev2
        return prev

    def _sign(self, coeffs: tuple) -> int:
        cached = self._sign_cache.get(coeffs)
        if cached is not None:
            return cached
        if all(c == 0 for c in coeffs):
            s = 0
        elif self.degree == 1:
            c = coeffs[0]
            s = 1 if c > 0 else -1
        else:
            while True:
                lo, hi = self._interval_eval(coeffs)
                if lo > 0:
                    s = 1
                    break
                if hi < 0:
                    s = -1
                    break
                self._refine()
        self._sign_cache[coeffs] = s
        return s

    def _interval_eval(self, coeffs: tuple) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        xl, xh = self._lo, self._hi
        for c in reversed(coeffs):
            cands = (lo * xl, lo * xh, hi * xl, hi * xh)
            lo, hi = min(cands) + c, max(cands) + c
        return lo, hi

    def __repr__(self) -> str:
        return f"FieldContext(L={self.L}, degree={self.degree})"


@lru_cache(maxsize=None)
def field_for(L: int) -> FieldContext:
    """The shared field context for 2 cos(pi / L)."""
    return FieldContext(L)


@lru_cache(maxsize=None)
def context_for(system: CoxeterSystem) -> FieldContext:
    """Field large enough for all edge weights of the system:
    L = lcm of the finite bond strengths (at least 2)."""
    finite = system.finite_bonds()
    L = math.lcm(*finite) if finite else 1
    return field_for(max(2, L))


class FieldElement:
    """A value in Q(theta), canonical coefficient tuple of length degree."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def sign(self) -> int:
        """-1, 0, or +1, decided exactly."""
        return self.ctx._sign(self.coeffs)

    def approx(self) -> float:
        if self.ctx.degree == 1:
            return float(self.coeffs[0])
        eps = Fraction(1, 2 ** 64)
        while self.ctx._hi - self.ctx._lo > eps:
            self.ctx._refine()
        lo, hi = self.ctx._interval_eval(self.coeffs)
        return float((lo + hi) / 2)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, tuple(
            _norm_coeff(a + b) for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, tuple(_norm_coeff(-a) for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, tuple(
            _norm_coeff(a - b) for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.ctx, tuple(
                _norm_coeff(c * other) for c in self.coeffs))
        if isinstance(other, FieldElement):
            assert other.ctx is self.ctx, "elements of different fields"
            prod = _poly_mul(list(self.coeffs), list(other.coeffs))
            cs = self.ctx._reduce(prod)
            return FieldElement(self.ctx, tuple(_norm_coeff(c) for c in cs))
        return NotImplemented

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            assert other.ctx is self.ctx, "elements of different fields"
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "<0>" if not terms else "<" + " + ".join(terms) + ">"
