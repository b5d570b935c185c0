"""
The bc system: {b(m), c(n)} = d_{m+n,0}, b of weight 0 and c of weight 1.

A basis state is b(-m_1) ... b(-m_r) c(-n_1) ... c(-n_s) |0>_bc with
m_1 > ... > m_r >= 0 and n_1 > ... > n_s >= 1, keyed by the two index tuples.
b(n+1)|0> = 0 and c(n)|0> = 0 for n >= 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from exact.combinatorics import strict_partitions
from exact.poly import Scalar
from exact.vector import SparseVector

FermionKey = tuple[tuple[int, ...], tuple[int, ...]]

VACUUM_KEY: FermionKey = ((), ())


def _insert(indices: tuple[int, ...], value: int) -> tuple[int, tuple[int, ...]] | None:
    """Position and new tuple after inserting value into a strictly decreasing tuple."""
    if value in indices:
        return None
    position = sum(1 for x in indices if x > value)
    return position, indices[:position] + (value,) + indices[position:]


class FermionState(SparseVector[FermionKey]):
    """Finite combination of bc monomials."""

    __slots__ = ()

    @staticmethod
    def key_level(key: FermionKey) -> int:
        return sum(key[0]) + sum(key[1])

    @staticmethod
    def key_charge(key: FermionKey) -> int:
        return len(key[0]) - len(key[1])

    def charges(self) -> set[int]:
        return {self.key_charge(key) for key in self.keys()}

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*b{list(k[0])}c{list(k[1])}" for k, c in sorted(self.items()))
        return f"FermionState({body or '0'})"


@dataclass(frozen=True)
class FermionFock:
    """The bc Fock space F."""

    def vacuum(self) -> FermionState:
        return FermionState({VACUUM_KEY: 1})

    def state(self, terms: Mapping[FermionKey, Scalar]) -> FermionState:
        return FermionState(terms)

    def basis(self, level: int, charge: int = 0) -> list[FermionKey]:
        """Monomials of one level and charge, b-weight descending."""
        if level < 0:
            return []
        keys = []
        for b_level in range(level, -1, -1):
            b_sets = []
            for part in strict_partitions(b_level):
                b_sets.append(part)
                b_sets.append(part + (0,))
            for c_set in strict_partitions(level - b_level):
                for b_set in b_sets:
                    if len(b_set) - len(c_set) == charge:
                        keys.append((b_set, c_set))
        return keys

    def apply_b(self, n: int, vector: FermionState) -> FermionState:
        return vector.map_terms(lambda key: _b_on(n, key))

    def apply_c(self, n: int, vector: FermionState) -> FermionState:
        return vector.map_terms(lambda key: _c_on(n, key))


def _b_on(n: int, key: FermionKey) -> FermionState:
    b_set, c_set = key
    if n <= 0:
        inserted = _insert(b_set, -n)
        if inserted is None:
            return FermionState()
        position, new_b = inserted
        return FermionState({(new_b, c_set): (-1) ** position})
    # b(n), n >= 1, pairs with c(-n)
    if n not in c_set:
        return FermionState()
    position = c_set.index(n)
    new_c = c_set[:position] + c_set[position + 1:]
    return FermionState({(b_set, new_c): (-1) ** (len(b_set) + position)})


def _c_on(n: int, key: FermionKey) -> FermionState:
    b_set, c_set = key
    if n <= -1:
        inserted = _insert(c_set, -n)
        if inserted is None:
            return FermionState()
        position, new_c = inserted
        return FermionState({(b_set, new_c): (-1) ** (len(b_set) + position)})
    # c(n), n >= 0, pairs with b(-n)
    if n not in b_set:
        return FermionState()
    position = b_set.index(n)
    new_b = b_set[:position] + b_set[position + 1:]
    return FermionState({(new_b, c_set): (-1) ** position})
