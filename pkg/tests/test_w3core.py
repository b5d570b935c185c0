"""pytest suite for the W3 mode algebra, PBW rewriting and highest-weight modules."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from exact import T, W, as_poly
from w3core import (
    AlgebraParams,
    L,
    ModeSymbol,
    ModuleMismatchError,
    PBWMonomial,
    StateVector,
    Wt,
    antisymmetry_failures,
    bracket_defect,
    commutator,
    format_vector,
    generators,
    jacobi_defect,
    jacobi_failures,
    lambda_apply,
    vacuum_module,
    verma_module,
)

PARAMS = AlgebraParams(Fraction(-2))


def test_beta_at_minus_two() -> None:
    """beta = 16/(22+5c) = 4/3 at c = -2, so the Lambda coefficient 3/2 beta is 2."""
    assert PARAMS.beta == Fraction(4, 3)
    with pytest.raises(ValueError):
        AlgebraParams(Fraction(-22, 5))


def test_mode_symbol_validation() -> None:
    """Only L and Wt exist; field indices shift by weight - 1."""
    with pytest.raises(ValueError):
        ModeSymbol("X", 1)
    assert L(-2).field_index() == -1
    assert Wt(-3).field_index() == -1
    assert ModeSymbol.from_field_index("Wt", -1) == Wt(-3)
    assert str(Wt(-3)) == "Wt(-3)"


def test_virasoro_commutator_central_term() -> None:
    """[L_2, L_-2] = 4 L_0 + c/2 = 4 L_0 - 1 at c = -2."""
    expr = commutator(L(2), L(-2), PARAMS)
    assert expr.modes == ((L(0), Fraction(4)),)
    assert expr.central == Fraction(-1)
    assert commutator(L(1), L(-1), PARAMS).central == 0


def test_mixed_commutator_and_antisymmetry() -> None:
    """[L_m, Wt_n] = (2m - n) Wt_{m+n} and [Wt, L] is its negative."""
    assert commutator(L(1), Wt(-3), PARAMS).modes == ((Wt(-2), Fraction(5)),)
    assert commutator(Wt(-3), L(1), PARAMS) == -commutator(L(1), Wt(-3), PARAMS)


def test_ww_commutator_lambda_coefficient() -> None:
    """[Wt_2, Wt_-2] carries 3/2 beta (m - n) Lambda_0 = 8 Lambda_0 at c = -2."""
    expr = commutator(Wt(2), Wt(-2), PARAMS)
    assert expr.lambdas == ((0, Fraction(8)),)


def test_vacuum_graded_dimensions(vacuum) -> None:
    """Vacuum module dimensions through level 6."""
    assert [vacuum.dimension(n) for n in range(7)] == [1, 0, 1, 2, 3, 4, 8]


def test_annihilation_on_vacuum(vacuum) -> None:
    """L_{-1}, Wt_{-1}, Wt_{-2} and every non-negative mode kill |0>."""
    top = vacuum.top()
    for mode in (L(-1), L(0), L(1), Wt(-2), Wt(-1), Wt(0)):
        assert vacuum.apply_mode(mode, top).is_zero()


def test_lambda_minus_four_on_vacuum(vacuum) -> None:
    """Lambda_{-4}|0> = L_{-2}^2|0> - 3/5 L_{-4}|0>."""
    expected = vacuum.from_word([L(-2), L(-2)]) + vacuum.from_word([L(-4)], Fraction(-3, 5))
    assert lambda_apply(-4, vacuum.top()) == expected


def test_ww_on_vacuum_reduces_to_virasoro(vacuum) -> None:
    """Wt_{-2} Wt_{-3}|0> = 4 L_{-3}L_{-2}|0> - L_{-5}|0>."""
    result = vacuum.from_word([Wt(-2), Wt(-3)])
    expected = vacuum.from_word([L(-3), L(-2)], 4) - vacuum.from_word([L(-5)])
    assert result == expected


def test_l_zero_measures_level(vacuum) -> None:
    """L_0 acts by the level on homogeneous vacuum-module states."""
    v = vacuum.from_word([L(-2), Wt(-3)])
    assert vacuum.apply_mode(L(0), v) == v.scale(5)


def test_words_normal_order(vacuum) -> None:
    """Out-of-order words are rewritten into PBW form."""
    v = vacuum.from_word([Wt(-3), L(-2)])
    assert v.coefficient(PBWMonomial((-2,), (-3,))) == as_poly(1)
    assert v.coefficient(PBWMonomial((), (-5,))) == as_poly(1)


def test_verma_top_eigenvalues() -> None:
    """M(t, w) with symbolic weights: L_0 -> t, Wt_0 -> w, L_{-1} creates."""
    verma = verma_module(T, W)
    top = verma.top()
    assert verma.apply_mode(L(0), top) == top.scale(T)
    assert verma.apply_mode(Wt(0), top) == top.scale(W)
    assert not verma.apply_mode(L(-1), top).is_zero()
    assert verma_module(T, W) is verma


def test_verma_l1_on_l_minus_one() -> None:
    """L_1 L_{-1}|t> = 2t |t>."""
    verma = verma_module(T, W)
    v = verma.from_word([L(1), L(-1)])
    assert v == verma.top().scale(2 * T)


def test_module_mismatch_is_rejected(vacuum) -> None:
    """A Verma vector cannot be fed to the vacuum module."""
    stray = verma_module(0, 0).top()
    with pytest.raises(ModuleMismatchError):
        vacuum.apply_mode(L(1), stray)


def test_vector_printer(vacuum) -> None:
    """Higher level first, unit coefficients omitted."""
    v = vacuum.from_word([Wt(-3), Wt(-3)]) - vacuum.from_word([L(-2)], Fraction(19, 36))
    assert format_vector(v) == "Wt(-3)Wt(-3)vac - 19/36*L(-2)vac"
    assert format_vector(StateVector(vacuum)) == "0"


@pytest.mark.parametrize("level", [0, 2, 3])
def test_bracket_defects_vanish(vacuum, level: int) -> None:
    """a(b v) - b(a v) agrees with the relation expressions on low levels."""
    for monomial in vacuum.graded_basis(level):
        v = StateVector.basis(vacuum, monomial)
        for a in (L(1), L(2), Wt(1), Wt(2)):
            for b in (L(-2), Wt(-3), Wt(-1)):
                assert bracket_defect(a, b, v).is_zero(), (a, b, monomial)


def test_jacobi_defect_vanishes(vacuum) -> None:
    """Cyclic sum of double brackets is zero on L_{-2}|0>."""
    v = vacuum.from_word([L(-2)])
    assert jacobi_defect(Wt(1), Wt(-1), L(1), v).is_zero()
    assert jacobi_defect(Wt(2), Wt(-1), Wt(-1), v).is_zero()
    assert len(generators(1)) == 6


def test_relation_expressions_antisymmetric(vacuum) -> None:
    """[a,b] = -[b,a] as operators on every basis vector through level 5, |index| <= 3."""
    assert antisymmetry_failures(vacuum, 5, generators(3)) == []


def test_jacobi_small_range(vacuum) -> None:
    """All generator triples with |index| <= 1 through level 3."""
    assert jacobi_failures(vacuum, 3, product(generators(1), repeat=3)) == []


@pytest.mark.slow
def test_jacobi_identity_full_range(vacuum) -> None:
    """Jacobi for every triple with |index| <= 3 on every basis vector through level 5."""
    assert jacobi_failures(vacuum, 5, product(generators(3), repeat=3)) == []
