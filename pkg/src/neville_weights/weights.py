"""Weight polynomials combining substencil interpolants into the full interpolant.

For a stencil ``s`` with ``M = M- + M+ >= 2`` and a subdivision level
``1 <= K <= M-1`` there are polynomials ``sigma_{K,k}`` (``k = 0..K``) with

    p_s(x; f) = sum_k sigma_{K,k}(x) p_{sub_k}(x; f),    sum_k sigma_{K,k} = 1,

where ``sub_k`` is the ``k``-th Neville window of ``M-K+1`` consecutive nodes.
Two independent constructions are provided: the product-sum recurrence
over 1-level (Aitken) weights, and the closed form
``(-1)^(K-k) varsigma_k prod_{x_n not in sub_k} (x - x_n)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, format_scalar, scalar
from .errors import RangeError
from .stencil import Stencil, check_subdivision, substencil


@dataclass(frozen=True)
class WeightFamily:
    stencil: Stencil
    k_level: int
    sigmas: tuple[Poly, ...]
    varsigma: tuple

    @property
    def gammas(self) -> tuple:
        """Signed constants ``(-1)^(K-k) varsigma_k`` (leading coefficients of the sigmas)."""
        K = self.k_level
        return tuple(v if (K - k) % 2 == 0 else -v for k, v in enumerate(self.varsigma))

    def __call__(self, x) -> list:
        return [sig(x) for sig in self.sigmas]

    def __len__(self) -> int:
        return len(self.sigmas)

    def to_json(self) -> dict:
        K, s = self.k_level, self.stencil
        try:
            interval = [format_scalar(v) if s.exact else v for v in positivity_interval(s, K)]
        except RangeError:
            interval = None
        return {
            "K_s": K,
            "sigmas": [_coeff_list(p, K + 1, s.exact) for p in self.sigmas],
            "varsigma": [format_scalar(v) if s.exact else v for v in self.varsigma],
            "positivity_interval": interval,
        }


def _coeff_list(p: Poly, width: int, exact: bool) -> list:
    cs = list(p.coeffs) + [scalar(0, exact)] * (width - len(p.coeffs))
    return [format_scalar(c) if exact else c for c in cs]


def one_level_weights(s: Stencil) -> WeightFamily:
    """Aitken weights for ``K = 1``: ``(x_R - x)/(x_R - x_L)`` and ``(x - x_L)/(x_R - x_L)``."""
    if s.M < 2:
        raise RangeError(f"1-level subdivision needs M >= 2, got M = {s.M}")
    return _one_level(s)


def _one_level(s: Stencil) -> WeightFamily:
    lo, hi = s.left, s.right
    inv = scalar(1, s.exact) / (hi - lo)
    sig0 = Poly._raw((hi * inv, -inv), s.exact)
    sig1 = Poly._raw((-lo * inv, inv), s.exact)
    return WeightFamily(s, 1, (sig0, sig1), (inv, inv))


def _recurrence_terms(K: int, k: int) -> range:
    return range(max(0, k - 1), min(K - 1, k) + 1)


def weights_by_recurrence(s: Stencil, k_level: int) -> WeightFamily:
    """Build ``sigma_{K,k}`` level by level from 1-level weights of intermediate substencils.

    ``sigma_{K,k} = sum_{l=max(0,k-1)}^{min(K-1,k)} sigma_{K-1,l} * sigma^{sub(K-1,l)}_{1,k-l}``.
    Each intermediate 1-level family is built once, so the cost is
    ``O(K^2)`` polynomial products.
    """
    check_subdivision(s, k_level)
    prev = _one_level(s).sigmas
    for K in range(2, k_level + 1):
        ones = [_one_level(substencil(s, K - 1, l)).sigmas for l in range(K)]
        cur = []
        for k in range(K + 1):
            acc = Poly.zero(s.exact)
            for l in _recurrence_terms(K, k):
                acc = acc + prev[l] * ones[l][k - l]
            cur.append(acc)
        prev = cur
    K = k_level
    # the leading coefficient of sigma_{K,k} is (-1)^(K-k) varsigma_k
    vs = tuple(p.lead if (K - k) % 2 == 0 else -p.lead for k, p in enumerate(prev))
    return WeightFamily(s, K, tuple(prev), vs)


def varsigma(s: Stencil, k_level: int) -> tuple:
    """Positive constants ``varsigma_{K,k}`` by their own scalar recurrence.

    ``varsigma_{1,k} = 1/(x_R - x_L)``;
    ``varsigma_{K,k} = sum_l varsigma_{K-1,l} * varsigma^{sub(K-1,l)}_{1,k-l}``.
    """
    check_subdivision(s, k_level)
    one = scalar(1, s.exact)
    prev = [one / (s.right - s.left)] * 2
    for K in range(2, k_level + 1):
        spans = []
        for l in range(K):
            sub = substencil(s, K - 1, l)
            spans.append(one / (sub.right - sub.left))
        prev = [sum((prev[l] * spans[l] for l in _recurrence_terms(K, k)), scalar(0, s.exact))
                for k in range(K + 1)]
    return tuple(prev)


def weights_explicit(s: Stencil, k_level: int) -> WeightFamily:
    """Closed form ``(-1)^(K-k) varsigma_k prod (x - x_n)`` over nodes outside window ``k``."""
    vs = varsigma(s, k_level)
    K = k_level
    xs = s.nodes
    width = s.M - K + 1
    sigmas = []
    for k, v in enumerate(vs):
        excluded = xs[:k] + xs[k + width:]
        sign_v = v if (K - k) % 2 == 0 else -v
        sigmas.append(Poly.from_roots(excluded, s.exact) * sign_v)
    return WeightFamily(s, K, tuple(sigmas), vs)


def positivity_offsets(s: Stencil, k_level: int) -> tuple[int, int]:
    """Offsets ``(-M- + K - 1, M+ - K + 1)`` of the interval where all weights lie in [0, 1]."""
    check_subdivision(s, k_level)
    M = s.M
    if k_level > math.ceil(Fraction(M, 2)):
        raise RangeError(f"positivity interval needs K_s <= ceil(M/2) = {math.ceil(Fraction(M, 2))}, "
                         f"got K_s = {k_level}")
    return -s.m_minus + k_level - 1, s.m_plus - k_level + 1


def positivity_interval(s: Stencil, k_level: int) -> tuple:
    """``(x_{i-M-+K-1}, x_{i+M+-K+1})``; requires ``K <= ceil(M/2)``."""
    lo, hi = positivity_offsets(s, k_level)
    return s.node(lo), s.node(hi)
