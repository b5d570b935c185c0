"""pytest suite for the exact arithmetic kernel (rationals, polynomials, matrices)."""

from __future__ import annotations

from fractions import Fraction

import pytest

from exact import (
    ALPHA,
    T,
    W,
    MissingVariableError,
    RatMatrix,
    SparseVector,
    as_poly,
    as_rational,
    binomial,
    format_poly,
    format_rational,
    kernel_basis,
    parse_poly,
    parse_rational,
    partitions,
    poly_constant_value,
    poly_eval,
    poly_substitute,
    strict_partitions,
)
from exact.combinatorics import multiplicity_count, sorted_index_tuples


class _Tagged(SparseVector[str]):
    """Minimal SparseVector with string keys whose level is the key length."""

    __slots__ = ()

    @staticmethod
    def key_level(key: str) -> int:
        return len(key)


def test_parse_rational_forms() -> None:
    """Integers and p/q parse; decimals and zero denominators are rejected."""
    assert parse_rational("-19/36") == Fraction(-19, 36)
    assert parse_rational(" 7 ") == Fraction(7)
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_as_rational_rejects_bool() -> None:
    """Booleans are not silently treated as 0/1."""
    with pytest.raises(TypeError):
        as_rational(True)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-8, 9)) == "-8/9"


def test_curve_polynomial_prints_canonically() -> None:
    """w^2 - 1/9 t^2 (8t+1) prints with w first, then descending t powers."""
    curve = W ** 2 - as_poly(Fraction(1, 9)) * T ** 2 * (8 * T + 1)
    assert format_poly(curve) == "w^2 - 8/9*t^3 - 1/9*t^2"
    assert format_poly(as_poly(0)) == "0"
    assert format_poly(-2 * T) == "-2*t"


def test_parse_poly_matches_printer() -> None:
    """Printed text parses back to the same polynomial."""
    curve = W ** 2 - as_poly(Fraction(8, 9)) * T ** 3 - as_poly(Fraction(1, 9)) * T ** 2
    assert parse_poly(format_poly(curve)) == curve
    with pytest.raises(ValueError):
        parse_poly("x + t")


def test_poly_eval_requires_every_variable() -> None:
    """Evaluation is exact and refuses to guess missing variables."""
    p = T ** 2 + W
    assert poly_eval(p, {"t": Fraction(1, 2), "w": 3}) == Fraction(13, 4)
    with pytest.raises(MissingVariableError):
        poly_eval(p, {"t": 1})


def test_poly_substitute_alpha_parametrization() -> None:
    """Substituting t(alpha), w(alpha) into the curve gives the zero polynomial."""
    t = ALPHA * (ALPHA - 1) * as_poly(Fraction(1, 2))
    w = ALPHA * (ALPHA - 1) * (2 * ALPHA - 1) * as_poly(Fraction(1, 6))
    curve = W ** 2 - as_poly(Fraction(1, 9)) * T ** 2 * (8 * T + 1)
    assert not poly_substitute(curve, {"t": t, "w": w})


def test_poly_constant_value() -> None:
    """Constant polynomials convert to Fractions; others raise."""
    assert poly_constant_value(as_poly(Fraction(98, 27))) == Fraction(98, 27)
    with pytest.raises(ValueError):
        poly_constant_value(T)


def test_matrix_rank_rref_and_kernel() -> None:
    """A rank-1 2x2 matrix has a one-dimensional, RREF-normalized kernel."""
    m = RatMatrix.from_rows([[1, 2], [2, 4]])
    assert m.rank() == 1
    reduced, pivots = m.rref()
    assert pivots == [0]
    assert reduced.to_rows() == [[Fraction(1), Fraction(2)]]
    assert kernel_basis(m) == [(Fraction(1), Fraction(-1, 2))]


def test_matrix_solve_and_inconsistency() -> None:
    """solve returns an exact solution or None."""
    m = RatMatrix.from_rows([[2, 0], [0, 3]])
    assert m.solve([1, 1]) == [Fraction(1, 2), Fraction(1, 3)]
    singular = RatMatrix.from_rows([[1, 1], [1, 1]])
    assert singular.solve([1, 2]) is None


def test_identity_kernel_is_empty() -> None:
    """Full-rank matrices have no kernel."""
    assert kernel_basis(RatMatrix.identity(3)) == []
    assert RatMatrix.identity(3) @ RatMatrix.identity(3) == RatMatrix.identity(3)


def test_partitions_and_strict_partitions() -> None:
    """Counts and ordering of the graded-basis enumerators."""
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions(6, min_part=2)) == 4
    assert strict_partitions(5) == ((5,), (4, 1), (3, 2))


def test_binomial_negative_upper() -> None:
    """C(-1, k) = (-1)^k and C(-3, 2) = 6."""
    assert [binomial(-1, k) for k in range(4)] == [1, -1, 1, -1]
    assert binomial(-3, 2) == 6
    assert binomial(5, -1) == 0


def test_sorted_index_tuples() -> None:
    """Nondecreasing pairs summing to 0 with entries at most 1."""
    assert sorted(sorted_index_tuples(0, 2, 1)) == [(-1, 1), (0, 0)]
    assert multiplicity_count((-1, 1)) == 2
    assert multiplicity_count((0, 0, 0)) == 1


def test_sparse_vector_linear_structure() -> None:
    """Zero coefficients vanish and components split by level."""
    v = _Tagged({"a": 1, "bc": 2})
    w = _Tagged({"a": -1})
    total = v + w
    assert total == _Tagged({"bc": 2})
    assert len(total) == 1
    assert (v - v).is_zero()
    assert set(v.components()) == {1, 2}
    assert not v.is_homogeneous()
    with pytest.raises(ValueError):
        _ = v.level
    assert v.scale(3).coefficient("bc") == as_poly(6)
