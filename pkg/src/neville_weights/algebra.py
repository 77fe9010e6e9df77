"""Scalars, dense univariate polynomials and rational functions.

Two scalar modes exist.  In exact mode every coefficient is a
:class:`fractions.Fraction`; in float mode every coefficient is a Python
``float``.  A polynomial carries its mode and arithmetic between
polynomials of different modes raises :class:`ModeError`.

Polynomials store coefficients lowest degree first.  The zero polynomial
has an empty coefficient tuple and degree ``-1``.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ModeError, PoleError

#: Relative threshold on ``|den(x)|`` below which float evaluation reports a pole.
FLOAT_POLE_THRESHOLD = 1e-12


def exact_scalar(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions, other :class:`numbers.Rational` types and
    strings such as ``"-3/4"`` or ``"0.25"``.  Floats are rejected so that a
    computation never silently mixes modes.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise ModeError(f"float {value!r} given to an exact-mode computation")
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def float_scalar(value) -> float:
    if isinstance(value, float):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, str):
        return float(Fraction(value.strip()))
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError(f"cannot use {type(value).__name__} as a float scalar")


def scalar(value, exact: bool):
    return exact_scalar(value) if exact else float_scalar(value)


def format_scalar(value) -> str:
    """Lossless text form: ``"p/q"`` (or ``"p"``) for rationals, shortest repr for floats."""
    if isinstance(value, float):
        return repr(value)
    return str(exact_scalar(value))


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class Poly:
    """Immutable dense polynomial over exact rationals or floats."""

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs: Iterable = (), exact: bool = True):
        conv = exact_scalar if exact else float_scalar
        object.__setattr__(self, "coeffs", _strip([conv(c) for c in coeffs]))
        object.__setattr__(self, "exact", bool(exact))

    @classmethod
    def _raw(cls, coeffs, exact: bool) -> "Poly":
        # coeffs must already be of the right scalar type
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _strip(list(coeffs)))
        object.__setattr__(p, "exact", exact)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors

    @classmethod
    def zero(cls, exact: bool = True) -> "Poly":
        return cls._raw((), exact)

    @classmethod
    def const(cls, c, exact: bool = True) -> "Poly":
        return cls((c,), exact)

    @classmethod
    def x(cls, exact: bool = True) -> "Poly":
        return cls((0, 1), exact)

    @classmethod
    def from_roots(cls, roots: Iterable, exact: bool = True) -> "Poly":
        """Monic polynomial ``prod (x - r)``."""
        p = cls.const(1, exact)
        for r in roots:
            r = scalar(r, exact)
            p = p._mul_linear(r)
        return p

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            return self._zero_scalar()
        return self.coeffs[-1]

    def _zero_scalar(self):
        return Fraction(0) if self.exact else 0.0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero_scalar()

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.exact == other.exact and self.coeffs == other.coeffs
        if isinstance(other, numbers.Number):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.exact))

    def __repr__(self) -> str:
        mode = "" if self.exact else ", exact=False"
        return f"Poly([{', '.join(format_scalar(c) for c in self.coeffs)}]{mode})"

    def __str__(self) -> str:
        """Descending powers, e.g. ``x^2 - x + 1/4``."""
        out = ""
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = c < 0
            mag = format_scalar(-c if neg else c)
            if k == 0:
                term = mag
            else:
                var = "x" if k == 1 else f"x^{k}"
                term = var if mag in ("1", "1.0") else f"{mag}*{var}"
            if not out:
                out = "-" + term if neg else term
            else:
                out += (" - " if neg else " + ") + term
        return out or "0"

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.exact != self.exact:
                raise ModeError("cannot combine exact and float polynomials")
            return other
        if isinstance(other, (numbers.Number, str)):
            return Poly._raw((scalar(other, self.exact),), self.exact)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(out, self.exact)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs], self.exact)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (numbers.Number, str)) and not isinstance(other, bool):
            c = scalar(other, self.exact)
            if c == 0:
                return Poly.zero(self.exact)
            return Poly._raw([c * a for a in self.coeffs], self.exact)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.exact)
        out = [self._zero_scalar()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(out, self.exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (numbers.Number, str)) and not isinstance(other, bool):
            c = scalar(other, self.exact)
            if c == 0:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            return Poly._raw([a / c for a in self.coeffs], self.exact)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.exact)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _mul_linear(self, r) -> "Poly":
        # self * (x - r)
        cs = self.coeffs
        if not cs:
            return self
        out = [-r * cs[0]]
        for k in range(1, len(cs)):
            out.append(cs[k - 1] - r * cs[k])
        out.append(cs[-1])
        return Poly._raw(out, self.exact)

    def __divmod__(self, other: "Poly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.coeffs[-1]
        if len(rem) <= db:
            return Poly.zero(self.exact), self
        quot = [self._zero_scalar()] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lb
            quot[k] = q
            if q != 0:
                for j, bj in enumerate(other.coeffs):
                    rem[k + j] -= q * bj
            rem[k + db] = self._zero_scalar()
        return Poly._raw(quot, self.exact), Poly._raw(rem[:db], self.exact)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.coeffs[-1]

    def derivative(self, n: int = 1) -> "Poly":
        if n < 0:
            raise ValueError("derivative order must be non-negative")
        cs = list(self.coeffs)
        for _ in range(n):
            if not cs:
                break
            cs = [k * cs[k] for k in range(1, len(cs))]
        return Poly._raw(cs, self.exact)

    def __call__(self, x):
        x = scalar(x, self.exact)
        acc = self._zero_scalar()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def norm_inf(self):
        return max((abs(c) for c in self.coeffs), default=self._zero_scalar())

    def to_float(self) -> "Poly":
        return Poly._raw([float(c) for c in self.coeffs], False)

    def scaled_values(self, numerators: Sequence[int], denominator: int):
        """Exact values at ``n / denominator`` for many integers ``n``, as integers.

        Returns ``(values, scale)`` with ``self(n/denominator) == values[i] / scale``
        and ``scale > 0``.  Pure integer Horner evaluation; much faster than
        Fraction arithmetic for bulk exact sign tests.
        """
        if not self.exact:
            raise ModeError("scaled_values needs an exact polynomial")
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        cs = self.coeffs
        if not cs:
            return [0] * len(numerators), 1
        common = 1
        for c in cs:
            common = common * c.denominator // math.gcd(common, c.denominator)
        d = len(cs) - 1
        ints = [int(c * common) for c in cs]
        # p(n/D) * common * D^d = sum ints[k] n^k D^(d-k)
        dpow = [denominator**j for j in range(d + 1)]
        values = []
        for n in numerators:
            acc = 0
            for k in range(d, -1, -1):
                acc = acc * n + ints[k] * dpow[d - k]
            values.append(acc)
        return values, common * dpow[d]


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """``a op b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_derivative(p: Poly, n: int) -> Poly:
    return p.derivative(n)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over the rationals (exact mode only)."""
    if not (a.exact and b.exact):
        raise ModeError("poly_gcd is defined in exact mode only")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


class RatFunc:
    """Immutable quotient ``num / den`` with a monic denominator.

    In exact mode the pair is reduced by the polynomial gcd on construction.
    In float mode no reduction is attempted; only the denominator is scaled
    to unit leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduce: bool = True):
        if den is None:
            den = Poly.const(1, num.exact)
        if num.exact != den.exact:
            raise ModeError("numerator and denominator modes differ")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.const(1, num.exact)
        elif reduce and num.exact and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lc = den.lead
        if lc != 1:
            num = num / lc
            den = den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def exact(self) -> bool:
        return self.num.exact

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("rational function has a non-constant denominator")
        return self.num / self.den.lead

    def reduce(self) -> "RatFunc":
        return RatFunc(self.num, self.den)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.exact != self.exact:
                raise ModeError("cannot combine exact and float rational functions")
            return other
        if isinstance(other, Poly):
            if other.exact != self.exact:
                raise ModeError("cannot combine exact and float operands")
            return RatFunc(other)
        if isinstance(other, (numbers.Number, str)) and not isinstance(other, bool):
            return RatFunc(Poly.const(other, self.exact))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("rational function divided by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, numbers.Number)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.exact and other.exact:
            return self.num == other.num and self.den == other.den
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def __call__(self, x):
        x = scalar(x, self.exact)
        d = self.den(x)
        if self.exact:
            if d == 0:
                raise PoleError(f"pole at x = {format_scalar(x)}")
        elif abs(d) < FLOAT_POLE_THRESHOLD * (1.0 + float(self.den.norm_inf())):
            raise PoleError(f"pole at x = {x!r} (|den| = {abs(d):.3e})")
        return self.num(x) / d


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """``a op b`` for ``op`` in ``{"add", "sub", "mul", "div"}``; result reduced in exact mode."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


def evaluate(p: Poly | RatFunc, x):
    """Horner evaluation of a polynomial or rational function; :class:`PoleError` at poles."""
    return p(x)
