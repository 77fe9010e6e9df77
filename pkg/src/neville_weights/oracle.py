"""Brute-force checks for the weight constructions.

The pointwise oracle never touches the recurrences: it writes the
representation for each Kronecker sample vector ``e_ell`` as a linear
equation in the unknown weight values at ``x``,

    sum_k w_k alpha^{(n)}_{sub_k, ell}(x) = alpha^{(n)}_{s, ell}(x),   ell = -M-..M+,

and solves the ``(M+1) x (K+1)`` system.  In exact mode the first ``K+1``
independent rows (scanning ``ell`` upwards) are solved and every other row
must then hold exactly.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .algebra import FLOAT_POLE_THRESHOLD, Poly, RatFunc, format_scalar, poly_gcd, scalar
from .deriv_weights import _check_order, candidate_pole_poly, deriv_weights
from .errors import (InconsistentSystemError, PoleError, RangeError,
                     SingularSystemError, WeightsError)
from .lagrange import fundamental_derivatives, interpolate, sample
from .stencil import Stencil, make_stencil, substencils
from .weights import positivity_interval, weights_by_recurrence, weights_explicit


# random inputs

def random_stencil(rng: random.Random, M: int, m_minus: int | None = None,
                   max_den: int = 6) -> Stencil:
    """Exact stencil with ``M+1`` random rational nodes and small denominators."""
    if m_minus is None:
        m_minus = rng.randint(0, M)
    x = Fraction(rng.randint(-20, 20), rng.randint(1, max_den))
    nodes = [x]
    for _ in range(M):
        x = x + Fraction(rng.randint(1, 12), rng.randint(1, max_den))
        nodes.append(x)
    return make_stencil(m_minus, M - m_minus, nodes, "exact")


def random_point(rng: random.Random, s: Stencil, avoid: Poly | None = None, margin=Fraction(1, 4)):
    """Random rational in the hull of ``s`` widened by ``margin`` of its width.

    Rejects nodes and, if given, roots of ``avoid``.
    """
    lo, hi = s.left, s.right
    width = hi - lo
    for _ in range(1000):
        t = Fraction(rng.randint(-1000, 1000), 997) * (1 + 2 * margin) / 2 + Fraction(1, 2)
        x = lo + width * t
        if x in s.nodes:
            continue
        if avoid is not None and avoid(x) == 0:
            continue
        return x
    raise RuntimeError("could not draw a sample point")  # pragma: no cover


# pointwise linear-system oracle

def oracle_system(s: Stencil, k_level: int, n: int, x):
    """Rows ``ell`` of the oracle system: matrix ``A[ell][k]`` and right side ``b[ell]``."""
    _check_order(s, k_level, n)
    x = scalar(x, s.exact)
    zero = scalar(0, s.exact)
    A = [[zero] * (k_level + 1) for _ in s.offsets]
    for k, sub in enumerate(substencils(s, k_level)):
        for ell, a in zip(sub.offsets, fundamental_derivatives(sub, n)):
            A[ell + s.m_minus][k] = a(x)
    b = [a(x) for a in fundamental_derivatives(s, n)]
    return A, b


def _select_rows(A: list) -> list[int]:
    """First rows (in order) that are linearly independent, via incremental elimination."""
    basis: list[tuple[int, list]] = []  # (pivot column, reduced row)
    chosen = []
    for i, row in enumerate(A):
        r = list(row)
        for piv, brow in basis:
            if r[piv] != 0:
                f = r[piv] / brow[piv]
                r = [u - f * v for u, v in zip(r, brow)]
        piv = next((j for j, v in enumerate(r) if v != 0), None)
        if piv is not None:
            basis.append((piv, r))
            chosen.append(i)
    return chosen


def _solve_square(A: list, b: list) -> list:
    n = len(A)
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularSystemError("selected rows are rank-deficient")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [u - f * v for u, v in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def oracle_residual(A: list, b: list, w: list):
    """Largest ``|sum_k A[ell][k] w_k - b[ell]|`` over all rows."""
    return max(abs(sum((a * wk for a, wk in zip(row, w)), 0 * rhs) - rhs) for row, rhs in zip(A, b))


def weights_via_linear_system(s: Stencil, k_level: int, n: int, x) -> list:
    """Weight values at ``x`` by solving the Kronecker-basis representation system.

    Raises
    ------
    PoleError
        ``n > 0`` and ``x`` is a root of the candidate pole polynomial.
    SingularSystemError
        The system has rank below ``K+1`` at ``x`` (for instance at most
        nodes when ``n = 0``), so the values are not determined pointwise.
    InconsistentSystemError
        Exact mode only: a row outside the solved subset is violated.
    """
    _check_order(s, k_level, n)
    x = scalar(x, s.exact)
    if n > 0:
        cand = candidate_pole_poly(s, k_level, n)
        c = cand(x)
        if s.exact and c == 0:
            raise PoleError(f"x = {format_scalar(x)} is a candidate pole")
        if not s.exact and abs(c) < FLOAT_POLE_THRESHOLD * (1.0 + float(cand.norm_inf())):
            raise PoleError(f"x = {x!r} is numerically a candidate pole")
    A, b = oracle_system(s, k_level, n, x)
    if not s.exact:
        Am, bm = np.array(A, dtype=float), np.array(b, dtype=float)
        if np.linalg.matrix_rank(Am) < k_level + 1:
            raise SingularSystemError(f"oracle system rank-deficient at x = {x!r}")
        w, *_ = np.linalg.lstsq(Am, bm, rcond=None)
        return [float(v) for v in w]
    rows = _select_rows(A)
    if len(rows) < k_level + 1:
        raise SingularSystemError(f"oracle system has rank {len(rows)} < {k_level + 1} "
                                  f"at x = {format_scalar(x)}")
    rows = rows[:k_level + 1]
    w = _solve_square([A[r] for r in rows], [b[r] for r in rows])
    res = oracle_residual(A, b, w)
    if res != 0:
        raise InconsistentSystemError(f"unused rows violated by {format_scalar(res)} "
                                      f"at x = {format_scalar(x)}")
    return w


# aggregated verification

@dataclass
class VerificationReport:
    case: dict
    status: str  # "pass", "fail" or "invalid-input"
    max_discrepancy: object = 0
    detail: str = ""
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "invalid-input")

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "status": self.status,
            "max_discrepancy": format_scalar(self.max_discrepancy),
            "detail": self.detail,
            "checks": {k: format_scalar(v) for k, v in self.checks.items()},
        }


def _poly_gap(p: Poly, q: Poly):
    return (p - q).norm_inf()


def _ratfunc_gap(r: RatFunc, target: Poly):
    return (r.num - target * r.den).norm_inf()


def _roots_contained(den: Poly, cand: Poly) -> bool:
    """Every root of ``den`` is a root of ``cand`` (peel off common factors by gcd)."""
    d = den
    while d.degree > 0:
        g = poly_gcd(d, cand)
        if g.degree == 0:
            return False
        d = d // g
    return True


def check_interpolation_family(s: Stencil, k_level: int, rng: random.Random,
                               points: int = 5, positivity_samples: int = 101) -> dict:
    """Discrepancies of every ``n = 0`` check on one stencil; all zero when correct."""
    one = Poly.const(1)
    rec = weights_by_recurrence(s, k_level)
    exp = weights_explicit(s, k_level)
    gaps = {}
    gaps["consistency"] = max(_poly_gap(sum(rec.sigmas, Poly.zero()), one),
                              _poly_gap(sum(exp.sigmas, Poly.zero()), one))
    gaps["recurrence_vs_explicit"] = max(
        max(_poly_gap(a, b) for a, b in zip(rec.sigmas, exp.sigmas)),
        max(abs(a - b) for a, b in zip(rec.varsigma, exp.varsigma)))
    gaps["varsigma_positive"] = Fraction(sum(1 for v in exp.varsigma if v <= 0))
    subs = substencils(s, k_level)
    rep = Fraction(0)
    for j in range(s.M + 1):
        f = sample(s, lambda t: t**j)
        combo = sum((sig * interpolate(sub, f) for sig, sub in zip(exp.sigmas, subs)), Poly.zero())
        rep = max(rep, _poly_gap(interpolate(s, f), combo))
    gaps["representation"] = rep
    if k_level <= math.ceil(Fraction(s.M, 2)):
        gaps["positivity"] = positivity_violation(exp, positivity_samples)
    d0 = deriv_weights(s, k_level, 0)
    gaps["n0_degeneration"] = max(_ratfunc_gap(r, p) for r, p in zip(d0.sigmas, exp.sigmas))
    gaps["oracle"] = _oracle_gap(s, k_level, 0, exp, rng, points)
    return gaps


def check_derivative_family(s: Stencil, k_level: int, n: int, rng: random.Random,
                            points: int = 5, symbolic_max_m: int = 5) -> dict:
    fam = deriv_weights(s, k_level, n)
    gaps = {}
    total = fam.sigmas[0]
    for r in fam.sigmas[1:]:
        total = total + r
    gaps["consistency"] = _ratfunc_gap(total, Poly.const(1))
    subs = substencils(s, k_level)
    full = fundamental_derivatives(s, n)
    sub_alphas = [dict(zip(sub.offsets, fundamental_derivatives(sub, n))) for sub in subs]
    rep = Fraction(0)
    if s.M <= symbolic_max_m:
        for idx, ell in enumerate(s.offsets):
            acc = None
            for sig, alphas in zip(fam.sigmas, sub_alphas):
                if ell in alphas:
                    term = sig * alphas[ell]
                    acc = term if acc is None else acc + term
            rep = max(rep, _ratfunc_gap(acc, full[idx]))
    else:
        for _ in range(points):
            x = random_point(rng, s, avoid=fam.pole_poly)
            vals = fam(x)
            for idx, ell in enumerate(s.offsets):
                combo = sum((v * alphas[ell](x) for v, alphas in zip(vals, sub_alphas) if ell in alphas),
                            Fraction(0))
                rep = max(rep, abs(combo - full[idx](x)))
    gaps["representation"] = rep
    cand = candidate_pole_poly(s, k_level, n)
    gaps["pole_containment"] = Fraction(sum(1 for r in fam.sigmas if not _roots_contained(r.den, cand)))
    gaps["oracle"] = _oracle_gap(s, k_level, n, fam, rng, points)
    return gaps


def _oracle_gap(s: Stencil, k_level: int, n: int, fam, rng: random.Random, points: int):
    avoid = candidate_pole_poly(s, k_level, n) if n > 0 else None
    gap = Fraction(0)
    done = 0
    attempts = 0
    while done < points:
        attempts += 1
        if attempts > 50 * points:
            raise SingularSystemError("could not find non-singular oracle points")
        x = random_point(rng, s, avoid=avoid)
        try:
            w = weights_via_linear_system(s, k_level, n, x)
        except SingularSystemError:
            continue
        gap = max(gap, max(abs(a - b) for a, b in zip(w, fam(x))))
        done += 1
    return gap


def positivity_violation(fam, samples: int = 1000):
    """Largest distance of any weight from [0, 1] at ``samples`` uniform points of the positivity interval.

    Evaluated exactly with integer arithmetic; zero means every value lies in [0, 1].
    """
    lo, hi = positivity_interval(fam.stencil, fam.k_level)
    xs = [lo + (hi - lo) * Fraction(j, samples - 1) for j in range(samples)]
    den = math.lcm(*(x.denominator for x in xs))
    nums = [int(x * den) for x in xs]
    worst = Fraction(0)
    for sig in fam.sigmas:
        vals, scale = sig.scaled_values(nums, den)
        below = min(vals)
        above = max(vals)
        if below < 0:
            worst = max(worst, Fraction(-below, scale))
        if above > scale:
            worst = max(worst, Fraction(above - scale, scale))
    return worst


def verify_family(s: Stencil, k_level: int, n: int, trials: int = 10, seed: int = 0,
                  points: int = 5) -> VerificationReport:
    """Run every applicable check on ``s`` and ``trials - 1`` random stencils with the same arms.

    Out-of-range ``(K_s, n)`` yields an ``"invalid-input"`` report, which
    counts as passing.  Failures are reported, never raised.
    """
    case = {"m_minus": s.m_minus, "m_plus": s.m_plus, "M": s.M, "K_s": k_level, "n": n,
            "trials": trials, "seed": seed}
    try:
        _check_order(s, k_level, n)
    except RangeError as exc:
        return VerificationReport(case, "invalid-input", 0, str(exc))
    if not s.exact:
        s = make_stencil(s.m_minus, s.m_plus, [Fraction(x) for x in s.nodes], "exact")
    rng = random.Random(seed)
    stencils = [s] + [random_stencil(rng, s.M, s.m_minus) for _ in range(max(trials, 1) - 1)]
    totals: dict = {}
    t0 = time.perf_counter()
    try:
        for st in stencils:
            if n == 0:
                gaps = check_interpolation_family(st, k_level, rng, points)
            else:
                gaps = check_derivative_family(st, k_level, n, rng, points)
            for name, g in gaps.items():
                totals[name] = max(totals.get(name, Fraction(0)), g)
    except WeightsError as exc:
        return VerificationReport(case, "fail", 0, f"{type(exc).__name__}: {exc}", totals)
    worst = max(totals.values(), default=Fraction(0))
    bad = [name for name, g in totals.items() if g != 0]
    detail = f"{len(stencils)} stencils, {time.perf_counter() - t0:.2f}s"
    if bad:
        detail += "; failed: " + ", ".join(bad)
    return VerificationReport(case, "fail" if bad else "pass", worst, detail, totals)


def _suite_cases(max_m: int, trials: int, seed: int, min_m: int) -> list:
    rng = random.Random(seed)
    cases = []
    for M in range(min_m, max_m + 1):
        for K in range(1, M):
            for n in range(0, M - K + 1):
                cases.append((random_stencil(rng, M), K, n, trials, rng.randrange(2**31)))
    return cases


def _run_case(args) -> VerificationReport:
    return verify_family(*args)


def run_suite(max_m: int = 6, trials: int = 25, seed: int = 0, min_m: int = 2,
              jobs: int = 1) -> Iterator[VerificationReport]:
    """Verify every valid ``(M, K_s, n)`` with ``min_m <= M <= max_m``; yields one report per case.

    Cases are independent; ``jobs > 1`` spreads them over worker processes.
    Output order and content do not depend on ``jobs``.
    """
    cases = _suite_cases(max_m, trials, seed, min_m)
    if jobs <= 1:
        yield from map(_run_case, cases)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_case, cases)
