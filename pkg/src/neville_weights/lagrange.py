"""Lagrange fundamental polynomials, interpolation and the Neville tableau."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping

from .algebra import Poly, scalar
from .errors import ArityError, RangeError
from .stencil import Stencil

#: Samples ``f_{i+ell}`` keyed by offset ``ell``.  Extra offsets are ignored,
#: so samples taken on a stencil can be reused on any of its substencils.
SampledFunction = Mapping[int, object]


@lru_cache(maxsize=8192)
def fundamentals(s: Stencil) -> tuple[Poly, ...]:
    """All fundamental polynomials of ``s``, in offset order.

    Expanded from the product form ``prod_{k != ell} (x - x_k) / (x_ell - x_k)``.
    """
    xs = s.nodes
    out = []
    for j, xj in enumerate(xs):
        others = xs[:j] + xs[j + 1:]
        denom = scalar(1, s.exact)
        for xk in others:
            denom = denom * (xj - xk)
        out.append(Poly.from_roots(others, s.exact) / denom)
    return tuple(out)


@lru_cache(maxsize=8192)
def fundamental_derivatives(s: Stencil, n: int) -> tuple[Poly, ...]:
    if n < 0:
        raise RangeError(f"derivative order must be >= 0, got {n}")
    return tuple(a.derivative(n) for a in fundamentals(s))


def fundamental(s: Stencil, ell: int, n: int = 0) -> Poly:
    """``alpha^{(n)}_{i+ell}`` on ``s``: degree ``M`` for ``n = 0``, 1 at ``x_{i+ell}``, 0 at other nodes."""
    if not -s.m_minus <= ell <= s.m_plus:
        raise RangeError(f"offset {ell} outside [{-s.m_minus}, {s.m_plus}]")
    return fundamental_derivatives(s, n)[ell + s.m_minus]


def sample(s: Stencil, func: Callable) -> dict[int, object]:
    """Sample ``func`` at every node of ``s``."""
    return {ell: scalar(func(x), s.exact) for ell, x in s.items()}


def _values(s: Stencil, f: SampledFunction) -> list:
    try:
        return [scalar(f[ell], s.exact) for ell in s.offsets]
    except KeyError as exc:
        raise ArityError(f"missing sample for offset {exc.args[0]}") from None


def interpolate(s: Stencil, f: SampledFunction) -> Poly:
    """Interpolating polynomial of degree <= M through the samples."""
    return interp_derivative(s, f, 0)


def interp_derivative(s: Stencil, f: SampledFunction, n: int) -> Poly:
    """``n``-th derivative of the interpolant, ``sum_ell alpha^{(n)}_ell f_ell``."""
    vals = _values(s, f)
    out = Poly.zero(s.exact)
    for a, v in zip(fundamental_derivatives(s, n), vals):
        if v != 0:
            out = out + a * v
    return out


def neville_eval(s: Stencil, f: SampledFunction, x):
    """Value of the interpolant at ``x`` by the Neville-Aitken tableau."""
    xs = s.nodes
    x = scalar(x, s.exact)
    p = _values(s, f)
    n = len(xs)
    for width in range(1, n):
        for j in range(n - width):
            lo, hi = xs[j], xs[j + width]
            p[j] = ((hi - x) * p[j] + (x - lo) * p[j + 1]) / (hi - lo)
    return p[0]
