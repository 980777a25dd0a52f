"""Euler characteristic, Hodge data and Betti numbers of the derived 7-manifolds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import ConfigurationMatrix, validate
from .poly import MultiPoly, coefficient, linear_form, truncated_mul

__all__ = [
    "ConsistencyError",
    "ChernCubic",
    "HodgePair",
    "BettiNumbers",
    "chern_cubic",
    "euler_characteristic",
    "hodge_from_euler",
    "product_betti",
    "barely_betti",
]


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class ChernCubic:
    """Symmetric tensor ``d3[r,s,t] = 3 * c3[r,s,t]``, keyed by sorted index triples.

    Only nonzero entries are stored.
    """

    nvars: int
    d3: dict[tuple[int, int, int], int]

    def __getitem__(self, idx: tuple[int, int, int]) -> int:
        return self.d3.get(tuple(sorted(idx)), 0)

    def as_poly(self, caps) -> MultiPoly:
        """``sum over ordered (r, s, t)`` of ``d3[r,s,t] x_r x_s x_t``."""
        terms: dict[tuple[int, ...], int] = {}
        for r, s, t in itertools.product(range(self.nvars), repeat=3):
            v = self[r, s, t]
            if v:
                exp = [0] * self.nvars
                for i in (r, s, t):
                    exp[i] += 1
                terms[tuple(exp)] = terms.get(tuple(exp), 0) + v
        return MultiPoly(caps, terms)


@dataclass(frozen=True)
class HodgePair:
    h11: int
    h21: int

    def __post_init__(self):
        if self.h11 < 1:
            raise ValueError(f"h11 must be positive, got {self.h11}")
        if self.h21 < 0:
            raise ValueError(f"h21 must be non-negative, got {self.h21}")

    @property
    def euler(self) -> int:
        return 2 * (self.h11 - self.h21)


@dataclass(frozen=True, order=True)
class BettiNumbers:
    b2: int
    b3: int

    def __post_init__(self):
        if self.b2 < 0 or self.b3 < 0 or self.b2 + self.b3 < 1:
            raise ValueError(f"invalid Betti numbers ({self.b2}, {self.b3})")


def _require_valid(cfg: ConfigurationMatrix) -> None:
    report = validate(cfg)
    if not report.ok:
        raise ValueError("configuration is not a Calabi-Yau threefold: " + "; ".join(report.messages))


def chern_cubic(cfg: ConfigurationMatrix) -> ChernCubic:
    _require_valid(cfg)
    d3 = {}
    q = cfg.degrees
    for r, s, t in itertools.combinations_with_replacement(range(cfg.m), 3):
        v = -sum(q[r][a] * q[s][a] * q[t][a] for a in range(cfg.K))
        if r == s == t:
            v += cfg.dims[r] + 1
        if v:
            d3[(r, s, t)] = v
    return ChernCubic(cfg.m, d3)


def euler_characteristic(cfg: ConfigurationMatrix) -> int:
    """Coefficient of ``prod x_r^n_r`` in ``c3 * prod_a (sum_u q[u][a] x_u)``.

    Works with ``3 * c3`` throughout and divides by 3 at the end; a nonzero
    remainder raises :class:`ConsistencyError`.
    """
    cubic = chern_cubic(cfg)
    caps = cfg.dims
    product = MultiPoly.constant(caps, 1)
    for a in range(cfg.K):
        product = truncated_mul(product, linear_form(cfg, a))
    top = coefficient(truncated_mul(cubic.as_poly(caps), product), caps)
    if top % 3:
        raise ConsistencyError(f"top coefficient {top} of 3*c3 * prod(linear forms) is not divisible by 3")
    return top // 3


def hodge_from_euler(cfg: ConfigurationMatrix, h11: int) -> HodgePair:
    chi = euler_characteristic(cfg)
    if chi % 2:
        raise ValueError(f"non-even Euler characteristic {chi}")
    h21 = h11 - chi // 2
    if h11 < 1 or h21 < 0:
        raise ValueError(f"inconsistent h11 = {h11} for Euler characteristic {chi}")
    return HodgePair(h11, h21)


def product_betti(h: HodgePair) -> tuple[int, int, int]:
    """``(b1, b2, b3)`` of the Calabi-Yau times a circle."""
    return 1, h.h11, h.h11 + 2 * (h.h21 + 1)


def barely_betti(h: HodgePair, n_c: int) -> BettiNumbers:
    """Betti numbers of the quotient by an involution with ``n_c`` factor swaps.

    Only meaningful for favourable configurations, where all of ``H^{1,1}``
    comes from the ambient Kahler forms; callers are responsible for that.
    """
    if n_c < 0 or n_c > h.h11 // 2:
        raise ValueError(f"n_C = {n_c} outside [0, {h.h11 // 2}] for h11 = {h.h11}")
    return BettiNumbers(n_c, h.h11 + h.h21 + 1 - n_c)
