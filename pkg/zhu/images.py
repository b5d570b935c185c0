"""
Images of the singular vectors in C[t, w].
"""
from __future__ import annotations

from config.engine_config import ZhuConfig
from singvec.reference import reference_vectors
from utils.logger import info, warn
from w3core.module import vacuum_module
from w3core.states import StateVector, format_vector

from .curve import CurveIdeal, ZhuElement
from .products import circ, star
from .reduction import Strategy, reduce_to_poly


def curve_poly(strategy: Strategy | None = None) -> tuple[CurveIdeal, tuple[ZhuElement, ZhuElement]]:
    """The ideal <f> and ([v_s], [v_s']); expected (f, 0)."""
    strategy = strategy or ZhuConfig.DEFAULT_STRATEGY
    v_s, v_s_prime = reference_vectors(vacuum_module(-2))
    images = (reduce_to_poly(v_s, strategy), reduce_to_poly(v_s_prime, strategy))
    ideal = CurveIdeal()
    if images[0].value != ideal.generator or images[1].value:
        warn(f"singular images [{images[0]}], [{images[1]}] differ from ({ideal}, 0)")
    else:
        info(f"[v_s] = {images[0]}, [v_s'] = 0 ({strategy})")
    return ideal, images


def _homogeneous_basis(max_weight: int) -> list[StateVector]:
    module = vacuum_module(-2)
    return [
        StateVector.basis(module, monomial)
        for level in range(max_weight + 1)
        for monomial in module.graded_basis(level)
    ]


def ideal_failures(max_weight: int | None = None) -> list[tuple[str, str]]:
    """Pairs of basis states with wt a + wt b <= max_weight and [a o b] != 0."""
    max_weight = ZhuConfig.IDEAL_MAX_WEIGHT if max_weight is None else max_weight
    basis = _homogeneous_basis(max_weight)
    failures = []
    for a in basis:
        for b in basis:
            if a.level + b.level > max_weight:
                continue
            if reduce_to_poly(circ(a, b)).value:
                failures.append((format_vector(a), format_vector(b)))
    info(f"O(V) sweep through weight {max_weight}: {len(failures)} failures")
    return failures


def product_failures(max_weight: int | None = None) -> list[tuple[str, str]]:
    """Pairs where [a * b] differs from [a][b]."""
    max_weight = ZhuConfig.COMMUTATIVITY_MAX_WEIGHT if max_weight is None else max_weight
    basis = _homogeneous_basis(max_weight)
    failures = []
    for a in basis:
        for b in basis:
            if a.level + b.level > max_weight:
                continue
            if reduce_to_poly(star(a, b)) != reduce_to_poly(a) * reduce_to_poly(b):
                failures.append((format_vector(a), format_vector(b)))
    info(f"star-product sweep through weight {max_weight}: {len(failures)} failures")
    return failures
