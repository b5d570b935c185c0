"""
Singular-vector detection in graded components.

A vector of level N is singular when every positive mode kills it. The
positive part of W3 is generated by L_1, L_2 and Wt_1; Wt_2 is added as a
redundant cross-check, and `full_sweep` tests every positive mode directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from config.engine_config import AlgebraConfig, SingularConfig
from exact.matrix import RatMatrix, kernel_basis
from utils.logger import debug, info
from w3core.modes import ModeSymbol
from w3core.module import HighestWeightModule, VacuumModule, vacuum_module
from w3core.states import StateVector, format_vector

from .reference import SINGULAR_LEVEL, reference_vectors


def generating_modes() -> list[ModeSymbol]:
    return [ModeSymbol(family, index) for family, index in SingularConfig.GENERATING_MODES]


def checked_modes() -> list[ModeSymbol]:
    """Generating set plus the redundant Wt_2."""
    return generating_modes() + [
        ModeSymbol(family, index) for family, index in SingularConfig.REDUNDANT_MODES
    ]


@dataclass
class SingularReport:
    """Kernel of the positive action at one level."""

    level: int
    kernel_dim: int
    basis: list[StateVector]
    checked_modes: list[ModeSymbol]
    normalized_to_reference: bool = False
    module_tag: str = field(default="")

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "kernelDim": self.kernel_dim,
            "basis": [format_vector(v) for v in self.basis],
            "checkedModes": [str(m) for m in self.checked_modes],
            "normalizedToReference": self.normalized_to_reference,
            "module": self.module_tag,
        }


def positive_action_matrix(level: int, modes: Sequence[ModeSymbol],
                           module: HighestWeightModule | None = None) -> RatMatrix:
    """Stacked blocks of each mode's action VM_level -> VM_{level - index}.

    Columns follow graded_basis(level); rows follow graded_basis of each target
    level in the order the modes are given. A target level below zero gives an
    empty block.
    """
    module = module or vacuum_module(AlgebraConfig.CENTRAL_CHARGE)
    for mode in modes:
        if mode.index <= 0:
            raise ValueError(f"{mode} is not a positive mode")
    sources = module.graded_basis(level)
    blocks = []
    for mode in modes:
        targets = module.graded_basis(level - mode.index)
        columns = [
            module.coordinates(module.apply_mode(mode, StateVector.basis(module, monomial)), targets)
            for monomial in sources
        ]
        blocks.append(RatMatrix.from_columns(columns, len(targets)))
        debug(f"{mode} on level {level}: {len(targets)}x{len(sources)} block")
    return RatMatrix.vstack(blocks, len(sources))


def _same_span(first: list[list], second: list[list], cols: int) -> bool:
    if not first or not second:
        return not first and not second
    rank_first = RatMatrix.from_rows(first, cols).rank()
    rank_second = RatMatrix.from_rows(second, cols).rank()
    rank_joint = RatMatrix.from_rows(first + second, cols).rank()
    return rank_first == rank_second == rank_joint == len(first) == len(second)


def find_singular(level: int, module: HighestWeightModule | None = None,
                  modes: Sequence[ModeSymbol] | None = None) -> SingularReport:
    """Singular vectors at one level of a module (default: vacuum module, c from config)."""
    if level < 0:
        raise ValueError("level must be non-negative")
    module = module or vacuum_module(AlgebraConfig.CENTRAL_CHARGE)
    modes = list(modes) if modes is not None else checked_modes()
    basis = module.graded_basis(level)
    matrix = positive_action_matrix(level, modes, module)
    kernel = kernel_basis(matrix)
    vectors = [module.from_coordinates(k, basis) for k in kernel]

    normalized = False
    if level == SINGULAR_LEVEL and isinstance(module, VacuumModule) and module.params.c == -2:
        references = reference_vectors(module)
        reference_rows = [module.coordinates(v, basis) for v in references]
        if _same_span([list(k) for k in kernel], reference_rows, len(basis)):
            vectors = list(references)
            normalized = True

    info(f"{module.tag} level {level}: dim {len(basis)}, kernel dimension {len(vectors)}")
    return SingularReport(
        level=level,
        kernel_dim=len(vectors),
        basis=vectors,
        checked_modes=modes,
        normalized_to_reference=normalized,
        module_tag=module.tag,
    )


def full_sweep(vector: StateVector, max_index: int | None = None) -> dict[ModeSymbol, StateVector]:
    """Images of the vector under every positive mode L_n, Wt_n with n <= max_index."""
    module = vector.module
    if max_index is None:
        max_index = max(vector.components(), default=0)
    return {
        ModeSymbol(family, n): module.apply_mode(ModeSymbol(family, n), vector)
        for family in ("L", "Wt")
        for n in range(1, max_index + 1)
    }


def is_singular(vector: StateVector, max_index: int | None = None) -> bool:
    return all(image.is_zero() for image in full_sweep(vector, max_index).values())
