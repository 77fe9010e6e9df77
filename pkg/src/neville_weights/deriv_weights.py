"""Rational weight-functions for the n-th derivative of the interpolant.

The 1-level weights are ratios of n-th derivatives of endpoint fundamental
polynomials,

    sigma_{(n),1,0} = alpha^{(n)}_{s, left}  / alpha^{(n)}_{sub0, left}
    sigma_{(n),1,1} = alpha^{(n)}_{s, right} / alpha^{(n)}_{sub1, right}

and higher levels follow the same product-sum recurrence as the
interpolation weights, now over rational functions.  Valid for
``1 <= K <= M-1`` and ``0 <= n <= M-K``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Poly, RatFunc, format_scalar, scalar
from .errors import RangeError
from .lagrange import fundamental
from .stencil import Stencil, check_subdivision, substencil
from .weights import _one_level, _recurrence_terms


@dataclass(frozen=True)
class DerivWeightFamily:
    stencil: Stencil
    k_level: int
    deriv_order: int
    sigmas: tuple[RatFunc, ...]
    pole_poly: Poly

    def __call__(self, x) -> list:
        if self.stencil.exact:
            return [sig(x) for sig in self.sigmas]
        # the expanded float rationals are unreduced and lose digits to cancellation
        return deriv_values(self.stencil, self.k_level, self.deriv_order, x)

    def __len__(self) -> int:
        return len(self.sigmas)

    def to_json(self) -> dict:
        exact = self.stencil.exact

        def enc(p: Poly) -> list:
            return [format_scalar(c) if exact else c for c in p.coeffs]

        return {
            "K_s": self.k_level,
            "n": self.deriv_order,
            "sigmas": [{"num": enc(r.num), "den": enc(r.den)} for r in self.sigmas],
            "pole_poly": enc(self.pole_poly),
        }


def _pole_product(sigmas) -> Poly:
    out = Poly.const(1, sigmas[0].exact)
    for r in sigmas:
        if r.den.degree > 0:
            out = out * r.den
    return out


def _check_order(s: Stencil, k_level: int, n: int) -> None:
    check_subdivision(s, k_level)
    if not 0 <= n <= s.M - k_level:
        raise RangeError(f"derivative order n = {n} outside [0, {s.M - k_level}] "
                         f"for M = {s.M}, K_s = {k_level}")


@lru_cache(maxsize=8192)
def _one_level_sigmas(s: Stencil, n: int) -> tuple[RatFunc, RatFunc]:
    if n == 0 and not s.exact:
        # floats cannot cancel the common factor; use the Aitken form directly
        return tuple(RatFunc(p) for p in _one_level(s).sigmas)
    sub0 = substencil(s, 1, 0)
    sub1 = substencil(s, 1, 1)
    left, right = -s.m_minus, s.m_plus
    # for n >= 1 numerator and denominator are already coprime
    sig0 = RatFunc(fundamental(s, left, n), fundamental(sub0, left, n))
    sig1 = RatFunc(fundamental(s, right, n), fundamental(sub1, right, n))
    return sig0, sig1


def deriv_one_level(s: Stencil, n: int) -> DerivWeightFamily:
    """``K = 1`` derivative weights from ratios of endpoint fundamental derivatives."""
    if s.M < 2:
        raise RangeError(f"1-level subdivision needs M >= 2, got M = {s.M}")
    _check_order(s, 1, n)
    sigmas = _one_level_sigmas(s, n)
    return DerivWeightFamily(s, 1, n, sigmas, _pole_product(sigmas))


def deriv_weights(s: Stencil, k_level: int, n: int) -> DerivWeightFamily:
    """Rational weights ``sigma_{(n),K,k}`` with ``p^{(n)}_s = sum_k sigma_k p^{(n)}_{sub_k}``.

    Exact mode reduces after every operation, so the reported denominators
    reflect any cancellation of candidate poles.
    """
    _check_order(s, k_level, n)
    prev = _one_level_sigmas(s, n)
    for K in range(2, k_level + 1):
        ones = [_one_level_sigmas(substencil(s, K - 1, l), n) for l in range(K)]
        cur = []
        for k in range(K + 1):
            terms = [prev[l] * ones[l][k - l] for l in _recurrence_terms(K, k)]
            acc = terms[0]
            for t in terms[1:]:
                acc = acc + t
            cur.append(acc)
        prev = tuple(cur)
    return DerivWeightFamily(s, k_level, n, tuple(prev), _pole_product(prev))


def deriv_values(s: Stencil, k_level: int, n: int, x) -> list:
    """Weight values at ``x`` by running the recurrence on 1-level values.

    Raises ``PoleError`` when ``x`` is a pole of any intermediate 1-level weight.
    """
    _check_order(s, k_level, n)
    x = scalar(x, s.exact)
    prev = [r(x) for r in _one_level_sigmas(s, n)]
    for K in range(2, k_level + 1):
        ones = [[r(x) for r in _one_level_sigmas(substencil(s, K - 1, l), n)] for l in range(K)]
        prev = [sum((prev[l] * ones[l][k - l] for l in _recurrence_terms(K, k)), scalar(0, s.exact))
                for k in range(K + 1)]
    return prev


def pole_report(fam: DerivWeightFamily) -> Poly:
    """Product of the reduced denominators; every pole of every weight is one of its roots."""
    return fam.pole_poly


def candidate_pole_factors(s: Stencil, k_level: int, n: int) -> list[Poly]:
    """Pole candidates from the recursion tree, one factor per intermediate 1-level family.

    For ``L = 0..K-1`` and ``l = 0..L``: the n-th derivative of the
    right-end fundamental polynomial of the left-deleted window of
    ``sub(L, l)`` (with ``sub(0, 0) = s``).
    """
    _check_order(s, k_level, n)
    out = []
    for L in range(k_level):
        for l in range(L + 1):
            parent = s if L == 0 else substencil(s, L, l)
            right_window = substencil(parent, 1, 1)
            out.append(fundamental(right_window, right_window.m_plus, n))
    return out


def candidate_pole_poly(s: Stencil, k_level: int, n: int) -> Poly:
    """Product of :func:`candidate_pole_factors`; the true poles are a subset of its roots."""
    out = Poly.const(1, s.exact)
    for f in candidate_pole_factors(s, k_level, n):
        out = out * f
    return out


def endpoint_ratio_constant(s: Stencil):
    """``prod_{interior k} (x_R - x_k)/(x_L - x_k)``.

    Proportionality constant between the left-end fundamental of the
    right-deleted window and the right-end fundamental of the left-deleted
    window; independent of ``x`` and of the derivative order.
    """
    c = scalar(1, s.exact)
    lo, hi = s.left, s.right
    for xk in s.nodes[1:-1]:
        c = c * (hi - xk) / (lo - xk)
    return c


def describe(fam: DerivWeightFamily) -> str:
    lines = [f"K_s = {fam.k_level}, n = {fam.deriv_order}, {fam.stencil}"]
    for k, r in enumerate(fam.sigmas):
        lines.append(f"  sigma[{k}] = ({r.num}) / ({r.den})")
    lines.append(f"  poles among roots of: {fam.pole_poly}")
    return "\n".join(lines)

