"""Stencils of distinct ordered points and their Neville substencils.

Nodes are addressed by their offset ``ell`` relative to an implicit origin
index ``i``: a stencil with arms ``(m_minus, m_plus)`` holds
``x_{i-m_minus} < ... < x_{i+m_plus}``.  Arms may be negative as long as
``M = m_minus + m_plus >= 0``; substencils keep the parent's origin.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import exact_scalar, float_scalar, format_scalar
from .errors import ArityError, OrderError, RangeError


@dataclass(frozen=True)
class Stencil:
    m_minus: int
    m_plus: int
    nodes: tuple
    exact: bool = True

    @property
    def M(self) -> int:
        return self.m_minus + self.m_plus

    @property
    def offsets(self) -> range:
        return range(-self.m_minus, self.m_plus + 1)

    def node(self, ell: int):
        """``x_{i+ell}``."""
        if not -self.m_minus <= ell <= self.m_plus:
            raise RangeError(f"offset {ell} outside [{-self.m_minus}, {self.m_plus}]")
        return self.nodes[ell + self.m_minus]

    def items(self) -> Iterator[tuple[int, object]]:
        """Pairs ``(ell, x_{i+ell})`` in increasing order."""
        return zip(self.offsets, self.nodes)

    @property
    def left(self):
        return self.nodes[0]

    @property
    def right(self):
        return self.nodes[-1]

    def __len__(self) -> int:
        return len(self.nodes)

    def to_float(self) -> "Stencil":
        return Stencil(self.m_minus, self.m_plus, tuple(float(x) for x in self.nodes), False)

    def to_json(self) -> dict:
        nodes = [format_scalar(x) for x in self.nodes] if self.exact else list(self.nodes)
        return {"m_minus": self.m_minus, "m_plus": self.m_plus, "nodes": nodes}

    def __str__(self) -> str:
        pts = ", ".join(format_scalar(x) for x in self.nodes)
        return f"X[i-{self.m_minus}, i+{self.m_plus}] = {{{pts}}}"


@dataclass(frozen=True)
class SubdivisionSpec:
    k_level: int
    shift: int


def _infer_exact(nodes: Sequence) -> bool:
    return not any(isinstance(x, float) for x in nodes)


def make_stencil(m_minus: int, m_plus: int, nodes: Sequence, mode: str | None = None) -> Stencil:
    """Validate and build a stencil.

    ``mode`` is ``"exact"``, ``"float"`` or ``None``; ``None`` picks float
    mode if any node is a float and exact mode otherwise.

    Raises
    ------
    ArityError
        ``len(nodes) != m_minus + m_plus + 1`` or ``M < 0``.
    OrderError
        Nodes not strictly increasing.
    """
    m_minus, m_plus = int(m_minus), int(m_plus)
    if m_minus + m_plus < 0:
        raise ArityError(f"M = m_minus + m_plus must be >= 0, got {m_minus + m_plus}")
    if len(nodes) != m_minus + m_plus + 1:
        raise ArityError(f"expected {m_minus + m_plus + 1} nodes for arms "
                         f"({m_minus}, {m_plus}), got {len(nodes)}")
    if mode is None:
        exact = _infer_exact(nodes)
    elif mode in ("exact", "float"):
        exact = mode == "exact"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if exact:
        xs = tuple(exact_scalar(x) for x in nodes)
    else:
        xs = tuple(float_scalar(x) for x in nodes)
    for a, b in zip(xs, xs[1:]):
        if not a < b:
            raise OrderError(f"nodes must be strictly increasing: {format_scalar(a)} >= {format_scalar(b)}")
    return Stencil(m_minus, m_plus, xs, exact)


def check_subdivision(s: Stencil, k_level: int, shift: int | None = None) -> None:
    M = s.M
    if M < 2:
        raise RangeError(f"subdivision needs M >= 2, got M = {M}")
    if not 1 <= k_level <= M - 1:
        raise RangeError(f"K_s = {k_level} outside [1, {M - 1}]")
    if shift is not None and not 0 <= shift <= k_level:
        raise RangeError(f"k_s = {shift} outside [0, {k_level}]")


def substencil(s: Stencil, k_level: int | SubdivisionSpec, shift: int | None = None) -> Stencil:
    """The ``shift``-th window of the ``k_level`` subdivision.

    Returns ``{x_{i-M-+k_s}, ..., x_{i+M+-K_s+k_s}}`` with arms
    ``(M- - k_s, M+ - K_s + k_s)``; it has ``M - K_s + 1`` points.
    """
    if isinstance(k_level, SubdivisionSpec):
        k_level, shift = k_level.k_level, k_level.shift
    if shift is None:
        raise TypeError("shift is required")
    check_subdivision(s, k_level, shift)
    width = s.M - k_level + 1
    return Stencil(s.m_minus - shift, s.m_plus - k_level + shift,
                   s.nodes[shift:shift + width], s.exact)


def substencils(s: Stencil, k_level: int) -> list[Stencil]:
    return [substencil(s, k_level, k) for k in range(k_level + 1)]


def substencil_union_check(s: Stencil, k_level: int) -> bool:
    """True iff the ``k_level`` substencils cover ``s`` exactly."""
    check_subdivision(s, k_level)
    covered = set()
    for sub in substencils(s, k_level):
        covered.update(sub.items())
    return covered == set(s.items())


def stencil_from_json(obj: dict | str, mode: str | None = None) -> Stencil:
    """Parse a stencil descriptor ``{"m_minus", "m_plus", "nodes"}``.

    String nodes are rationals (exact mode); JSON numbers select float mode
    unless ``mode`` overrides.
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        m_minus, m_plus, nodes = obj["m_minus"], obj["m_plus"], obj["nodes"]
    except (KeyError, TypeError) as exc:
        raise ArityError(f"stencil descriptor needs m_minus, m_plus, nodes: {exc}") from None
    if mode is None:
        mode = "exact" if all(isinstance(x, str) for x in nodes) else "float"
    return make_stencil(m_minus, m_plus, nodes, mode)
