"""
Heisenberg Fock space H^alpha and the oscillators j_n.

States are keyed by partitions (nonincreasing tuples of n >= 1), one part per
creation oscillator j_{-n}; [j_m, j_n] = m d_{m+n,0} and j_0 = alpha.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from exact.combinatorics import partitions
from exact.poly import Poly, Scalar, as_poly, format_poly
from exact.vector import SparseVector

Partition = tuple[int, ...]


class BosonState(SparseVector[Partition]):
    """Finite combination of j_{-n_1} ... j_{-n_k} |alpha>."""

    __slots__ = ("fock",)

    def __init__(self, fock: "BosonFock", terms: Mapping[Partition, Scalar] | None = None):
        super().__init__(terms)
        self.fock = fock

    def _like(self, terms):
        return BosonState(self.fock, terms)

    def _same_space(self, other) -> bool:
        return isinstance(other, BosonState) and other.fock == self.fock

    @staticmethod
    def key_level(key: Partition) -> int:
        return sum(key)

    def __repr__(self) -> str:
        body = " + ".join(f"({format_poly(c)})j{list(k)}" for k, c in sorted(self.items()))
        return f"BosonState(alpha={format_poly(self.fock.alpha)}: {body or '0'})"


@dataclass(frozen=True)
class BosonFock:
    """H^alpha for rational or symbolic alpha."""

    alpha: Poly
    _cache: dict = field(default_factory=dict, init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_poly(self.alpha))

    def vacuum(self) -> BosonState:
        return BosonState(self, {(): 1})

    def state(self, terms: Mapping[Partition, Scalar]) -> BosonState:
        return BosonState(self, terms)

    def basis(self, level: int) -> list[Partition]:
        return list(partitions(level)) if level >= 0 else []

    def apply_j(self, n: int, vector: BosonState) -> BosonState:
        """Act with the oscillator j_n."""
        if vector.fock != self:
            raise ValueError("boson state from another Fock space")
        return vector.map_terms(lambda key: self._j_on(n, key))

    def _j_on(self, n: int, key: Partition) -> BosonState:
        if n < 0:
            return BosonState(self, {tuple(sorted(key + (-n,), reverse=True)): 1})
        if n == 0:
            return BosonState(self, {key: self.alpha})
        count = key.count(n)
        if not count:
            return BosonState(self)
        remaining = list(key)
        remaining.remove(n)
        return BosonState(self, {tuple(remaining): n * count})

    def apply_product(self, indices: tuple[int, ...], key: Partition) -> BosonState:
        """j_{i_1} ... j_{i_k} on one basis state, rightmost first (memoized)."""
        cache_key = (indices, key)
        cached = self._cache.get(cache_key)
        if cached is None:
            cached = BosonState(self, {key: 1})
            for index in reversed(indices):
                cached = self.apply_j(index, cached)
                if cached.is_zero():
                    break
            self._cache[cache_key] = cached
        return cached
