"""Exact scalar arithmetic: rationals and cyclotomic field elements.

All symbolic computation in this package runs over Q(zeta_n), the n-th
cyclotomic field, represented as Q[t]/Phi_n(t) with t identified with
zeta_n = exp(2*pi*i/n).  Working modulo the cyclotomic polynomial (rather
than t^n - 1) keeps the coefficient ring a field, so linear algebra never
meets zero divisors.

Coefficients are gmpy2 rationals when gmpy2 is importable, stdlib
fractions otherwise; both are exact.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    QQ = Fraction

_ZERO = QQ(0)
_ONE = QQ(1)


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_divide_exact(num, den):
    """Exact division of integer coefficient lists (ascending), den monic-ish."""
    num = list(num)
    deg_d = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - deg_d)
    for k in range(len(num) - 1, deg_d - 1, -1):
        c = num[k]
        if c == 0:
            continue
        assert c % lead == 0
        q = c // lead
        quot[k - deg_d] = q
        for i, dc in enumerate(den):
            num[k - deg_d + i] -= q * dc
    assert all(c == 0 for c in num)
    return quot


_cyclo_cache: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    # Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    result = tuple(poly)
    _cyclo_cache[n] = result
    return result


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


_reduction_cache: dict[int, list[tuple]] = {}


def _reduction_rows(n: int):
    """t^k written in the basis 1..t^(phi-1), for k = phi .. 2*phi - 2."""
    if n in _reduction_cache:
        return _reduction_cache[n]
    phi_coeffs = cyclotomic_polynomial(n)
    deg = len(phi_coeffs) - 1
    rows = []
    # t^deg = -(c_0 + c_1 t + ... + c_{deg-1} t^{deg-1}); Phi_n is monic.
    cur = [QQ(-c) for c in phi_coeffs[:-1]]
    rows.append(tuple(cur))
    for _ in range(deg - 2):
        nxt = [_ZERO] + cur[:-1]
        top = cur[-1]
        if top != 0:
            first = rows[0]
            nxt = [nxt[i] + top * first[i] for i in range(deg)]
        cur = nxt
        rows.append(tuple(cur))
    _reduction_cache[n] = rows
    return rows


_root_cache: dict[int, list[complex]] = {}


def _root_powers(n: int):
    if n not in _root_cache:
        z = cmath.exp(2j * cmath.pi / n)
        _root_cache[n] = [z ** k for k in range(n)]
    return _root_cache[n]


class CycloNumber:
    """Element of Q(zeta_n), stored as a coefficient vector modulo Phi_n."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        self.order = order
        deg = euler_phi(order)
        if coeffs is None:
            self.coeffs = (_ZERO,) * deg
        else:
            coeffs = tuple(QQ(c) for c in coeffs)
            if len(coeffs) != deg:
                raise ValueError(
                    f"expected {deg} coefficients for order {order}, got {len(coeffs)}"
                )
            self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(value, order: int = 1) -> "CycloNumber":
        value = QQ(value)
        deg = euler_phi(order)
        return CycloNumber(order, (value,) + (_ZERO,) * (deg - 1))

    @staticmethod
    def zeta(order: int, power: int = 1) -> "CycloNumber":
        """zeta_order ** power, reduced."""
        power %= order
        deg = euler_phi(order)
        raw = [_ZERO] * (power + 1)
        raw[power] = _ONE
        return CycloNumber(order, _reduce(raw, order, deg))

    @staticmethod
    def zero(order: int = 1) -> "CycloNumber":
        return CycloNumber(order)

    @staticmethod
    def one(order: int = 1) -> "CycloNumber":
        return CycloNumber.from_rational(1, order)

    # -- order coercion -----------------------------------------------

    def to_order(self, order: int) -> "CycloNumber":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        deg = euler_phi(order)
        raw = [_ZERO] * (step * (len(self.coeffs) - 1) + 1 if self.coeffs else 1)
        if len(raw) < deg:
            raw += [_ZERO] * (deg - len(raw))
        for k, c in enumerate(self.coeffs):
            if c != 0:
                raw[k * step] += c
        return CycloNumber(order, _reduce(raw, order, deg))

    @staticmethod
    def _common(a: "CycloNumber", b: "CycloNumber"):
        if a.order == b.order:
            return a, b
        n = a.order * b.order // gcd(a.order, b.order)
        return a.to_order(n), b.to_order(n)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            return CycloNumber._common(self, other)
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE):
            return self, CycloNumber.from_rational(other, self.order)
        return self, NotImplemented

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        c = self.coeffs[0]
        return Fraction(int(c.numerator), int(c.denominator))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloNumber(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, CycloNumber):
            a, b = CycloNumber._common(self, other)
            deg = len(a.coeffs)
            if deg == 1:
                return CycloNumber(a.order, (a.coeffs[0] * b.coeffs[0],))
            raw = [_ZERO] * (2 * deg - 1)
            bc = b.coeffs
            for i, ci in enumerate(a.coeffs):
                if ci == 0:
                    continue
                for j, cj in enumerate(bc):
                    if cj != 0:
                        raw[i + j] += ci * cj
            return CycloNumber(a.order, _reduce(raw, a.order, deg))
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE):
            q = QQ(other)
            return CycloNumber(self.order, tuple(c * q for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        deg = len(self.coeffs)
        if deg == 1:
            return CycloNumber(self.order, (_ONE / self.coeffs[0],))
        # extended Euclid in Q[t] against Phi_n
        phi = [QQ(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        inv = [x / c for x in s1]
        inv += [_ZERO] * (deg - len(inv))
        return CycloNumber(self.order, _reduce(inv, self.order, deg))

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CycloNumber":
        """Complex conjugation, zeta -> zeta^(n-1)."""
        n = self.order
        out = CycloNumber.zero(n)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                out = out + CycloNumber.zeta(n, (-k) % n) * c
        return out

    # -- comparisons / misc ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE):
            other = CycloNumber.from_rational(other, self.order)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b = CycloNumber._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(int(self.coeffs[0].numerator),
                                 int(self.coeffs[0].denominator)))
        return hash((self.order, self.coeffs))

    def embed(self) -> complex:
        """Numeric value at zeta_n = exp(2*pi*i/n)."""
        powers = _root_powers(self.order)
        total = 0j
        for k, c in enumerate(self.coeffs):
            if c != 0:
                total += float(c.numerator) / float(c.denominator) * powers[k % self.order]
        return total

    def __repr__(self):
        return f"CycloNumber({self.order}, {self})"

    def __str__(self):
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "z" if mag == 1 else f"{mag}*z"
            else:
                body = f"z^{k}" if mag == 1 else f"{mag}*z^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        if not parts:
            return "0"
        return " ".join(parts)


def _reduce(raw, order, deg):
    """Fold coefficients of t^k, k >= deg, back into the basis."""
    raw = list(raw)
    if len(raw) < deg:
        raw += [_ZERO] * (deg - len(raw))
    if len(raw) > deg:
        rows = _reduction_rows(order)
        for k in range(len(raw) - 1, deg - 1, -1):
            c = raw[k]
            if c != 0:
                row = rows[k - deg]
                for i, r in enumerate(row):
                    if r != 0:
                        raw[i] += c * r
            raw.pop()
    return tuple(raw)


def _poly_divmod(num, den):
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    deg_d = len(den) - 1
    inv_lead = _ONE / den[-1]
    quot = [_ZERO] * max(len(num) - deg_d, 1)
    for k in range(len(num) - 1, deg_d - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q = c * inv_lead
        quot[k - deg_d] = q
        for i, dc in enumerate(den):
            num[k - deg_d + i] -= q * dc
    rem = num[:deg_d] if deg_d > 0 else [_ZERO]
    return quot, rem


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
