"""Sparse multivariate integer polynomials truncated by per-variable degree caps.

Any monomial with an exponent above its cap is dropped.  Those monomials
span an ideal, so truncated multiplication stays commutative, associative
and distributive.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .config import ConfigurationMatrix

__all__ = ["MultiPoly", "linear_form", "truncated_mul", "coefficient"]

Exponent = tuple[int, ...]


class MultiPoly:
    """Immutable polynomial ``{exponent vector: nonzero int}`` with exponent caps."""

    __slots__ = ("nvars", "caps", "_terms")

    def __init__(self, caps: Sequence[int], terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        caps = tuple(int(c) for c in caps)
        if not caps:
            raise ValueError("need at least one variable")
        if any(c < 0 for c in caps):
            raise ValueError(f"caps must be non-negative, got {caps}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(caps):
                raise ValueError(f"exponent {exp} has wrong length for {len(caps)} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            if any(e > c for e, c in zip(exp, caps)):
                continue
            acc[exp] = acc.get(exp, 0) + int(coeff)
        self.nvars = len(caps)
        self.caps = caps
        self._terms = MappingProxyType({e: c for e, c in acc.items() if c != 0})

    @classmethod
    def zero(cls, caps: Sequence[int]) -> MultiPoly:
        return cls(caps)

    @classmethod
    def constant(cls, caps: Sequence[int], value: int) -> MultiPoly:
        return cls(caps, {(0,) * len(caps): value})

    @classmethod
    def variable(cls, caps: Sequence[int], index: int, coeff: int = 1) -> MultiPoly:
        exp = [0] * len(caps)
        exp[index] = 1
        return cls(caps, {tuple(exp): coeff})

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def _check_compatible(self, other: MultiPoly) -> None:
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if self.caps != other.caps:
            raise ValueError(f"incompatible caps {self.caps} and {other.caps}")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check_compatible(other)
        acc = dict(self._terms)
        for exp, c in other._terms.items():
            acc[exp] = acc.get(exp, 0) + c
        return MultiPoly(self.caps, acc)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.caps, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly(self.caps, {e: c * other for e, c in self._terms.items()})
        return truncated_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.caps == other.caps and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.caps, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"MultiPoly(caps={self.caps}, 0)"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exp) if e)
            parts.append(f"{self._terms[exp]}*{mono}" if mono else str(self._terms[exp]))
        return f"MultiPoly(caps={self.caps}, {' + '.join(parts)})"


def truncated_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check_compatible(q)
    caps = p.caps
    acc: dict[Exponent, int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            exp = tuple(a + b for a, b in zip(e1, e2))
            if any(e > c for e, c in zip(exp, caps)):
                continue
            acc[exp] = acc.get(exp, 0) + c1 * c2
    return MultiPoly(caps, acc)


def coefficient(p: MultiPoly, e: Sequence[int]) -> int:
    e = tuple(e)
    if len(e) != p.nvars or any(x < 0 or x > c for x, c in zip(e, p.caps)):
        raise ValueError(f"exponent {e} outside caps {p.caps}")
    return p.terms.get(e, 0)


def linear_form(cfg: ConfigurationMatrix, a: int) -> MultiPoly:
    """``sum_u q[u][a] * x_u`` for column ``a``, with caps ``cfg.dims``."""
    if not 0 <= a < cfg.K:
        raise IndexError(f"column {a} out of range for K = {cfg.K}")
    poly = MultiPoly.zero(cfg.dims)
    for u in range(cfg.m):
        if cfg.degrees[u][a]:
            poly = poly + MultiPoly.variable(cfg.dims, u, cfg.degrees[u][a])
    return poly
