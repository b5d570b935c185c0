"""
Finite linear combinations with polynomial coefficients.

SparseVector is the shared base of module states, boson states and fermion
states. Subclasses fix what a key is, how to read its level, and which
context (module, Fock space) travels with the vector.
"""
from __future__ import annotations

from typing import Callable, Generic, Hashable, Iterator, Mapping, TypeVar

from .poly import POLY_RING, Poly, Scalar, as_poly

K = TypeVar("K", bound=Hashable)
V = TypeVar("V", bound="SparseVector")


class SparseVector(Generic[K]):
    """Immutable map key -> nonzero Poly coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, Scalar] | None = None):
        cleaned: dict[K, Poly] = {}
        for key, coefficient in (terms or {}).items():
            coefficient = as_poly(coefficient)
            if coefficient:
                cleaned[key] = coefficient
        self._terms = cleaned

    # subclasses override ------------------------------------------------
    def _like(self: V, terms: Mapping[K, Scalar]) -> V:
        return type(self)(terms)

    def _same_space(self, other: "SparseVector") -> bool:
        return type(self) is type(other)

    @staticmethod
    def key_level(key: K) -> int:
        raise NotImplementedError

    # mapping protocol ---------------------------------------------------
    def items(self) -> Iterator[tuple[K, Poly]]:
        return iter(self._terms.items())

    def keys(self) -> Iterator[K]:
        return iter(self._terms)

    def coefficient(self, key: K) -> Poly:
        return self._terms.get(key, POLY_RING.zero)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def to_dict(self) -> dict[K, Poly]:
        return dict(self._terms)

    # linear structure ----------------------------------------------------
    def _check(self, other: "SparseVector") -> None:
        if not self._same_space(other):
            raise ValueError(f"cannot combine {self!r} with {other!r}")

    def __add__(self: V, other: V) -> V:
        self._check(other)
        merged = dict(self._terms)
        for key, coefficient in other._terms.items():
            merged[key] = merged.get(key, POLY_RING.zero) + coefficient
        return self._like(merged)

    def __sub__(self: V, other: V) -> V:
        return self + (-other)

    def __neg__(self: V) -> V:
        return self._like({key: -c for key, c in self._terms.items()})

    def scale(self: V, factor: Scalar) -> V:
        factor = as_poly(factor)
        if not factor:
            return self._like({})
        return self._like({key: factor * c for key, c in self._terms.items()})

    def __rmul__(self: V, factor: Scalar) -> V:
        return self.scale(factor)

    def zero(self: V) -> V:
        return self._like({})

    def map_terms(self: V, action: Callable[[K], V]) -> V:
        """Extend a per-key action linearly."""
        merged: dict[K, Poly] = {}
        for key, coefficient in self._terms.items():
            image = action(key)
            for target, value in image._terms.items():
                merged[target] = merged.get(target, POLY_RING.zero) + coefficient * value
        return self._like(merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector) or not self._same_space(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # grading -------------------------------------------------------------
    def components(self: V) -> dict[int, V]:
        """Homogeneous parts keyed by level."""
        parts: dict[int, dict[K, Poly]] = {}
        for key, coefficient in self._terms.items():
            parts.setdefault(self.key_level(key), {})[key] = coefficient
        return {level: self._like(terms) for level, terms in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len({self.key_level(key) for key in self._terms}) <= 1

    @property
    def level(self) -> int:
        levels = {self.key_level(key) for key in self._terms}
        if len(levels) != 1:
            raise ValueError(f"vector is not homogeneous (levels {sorted(levels)})")
        return levels.pop()
