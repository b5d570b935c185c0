"""pytest suite for the free-boson and bc realizations of W3 at c = -2."""

from __future__ import annotations

from fractions import Fraction

import pytest

from config import FreeFieldConfig
from exact import ALPHA, as_poly
from freefield import (
    BosonFock,
    FermionFock,
    RealizedMode,
    TruncationError,
    bosonization_map,
    charge_decomposition,
    highest_weight,
    realized,
    verify_bosonization,
    verify_w3_relations,
)
from zhu import weight_from_alpha


def test_heisenberg_commutator_on_vacuum() -> None:
    """j_1 j_{-1}|alpha> = |alpha> and j_0 acts by alpha."""
    fock = BosonFock(as_poly(3))
    one = RealizedMode("j", -1, "boson", 2).apply(fock.vacuum())
    assert RealizedMode("j", 1, "boson", 2).apply(one) == fock.vacuum()
    assert RealizedMode("j", 0, "boson", 2).apply(fock.vacuum()) == fock.vacuum().scale(3)


def test_boson_l_minus_two_on_vacuum() -> None:
    """L_{-2}|0> = 1/2 j_{-1}^2|0> + 1/2 j_{-2}|0> on H^0."""
    fock = BosonFock(as_poly(0))
    image = RealizedMode("L", -2, "boson", 0).apply(fock.vacuum())
    assert image == fock.state({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})


def test_highest_weight_formula() -> None:
    """(t, w) = (1/2 a(a-1), 1/6 a(a-1)(2a-1)), symbolic and rational."""
    assert highest_weight(ALPHA) == weight_from_alpha(ALPHA)
    assert highest_weight(0) == (as_poly(0), as_poly(0))
    assert highest_weight(1) == (as_poly(0), as_poly(0))
    assert highest_weight(2) == (as_poly(1), as_poly(1))


def test_truncation_guard() -> None:
    """Realized modes refuse states above their truncation level."""
    fock = BosonFock(as_poly(0))
    state = fock.state({(2, 1): 1})
    with pytest.raises(TruncationError):
        RealizedMode("L", 0, "boson", 2).apply(state)
    with pytest.raises(ValueError):
        RealizedMode("b", 0, "boson", 2)


def test_boson_l0_counts_level() -> None:
    """On H^0, L_0 is the level operator."""
    fock = BosonFock(as_poly(0))
    state = fock.state({(3,): 1, (2, 1): 2})
    assert RealizedMode("L", 0, "boson", 3).apply(state) == state.scale(3)


def test_fermion_signs() -> None:
    """b(1) b(0)|0> = 0, and j_0 vanishes on charge-0 states."""
    fock = FermionFock()
    b0 = fock.apply_b(0, fock.vacuum())
    assert fock.apply_b(1, b0).is_zero()
    state = fock.state({((0,), (1,)): 1})
    assert RealizedMode("j", 0, "fermion", 1).apply(state).is_zero()


def test_fermion_l0_on_b_minus_one_c_minus_one() -> None:
    """Fermionic L_0 on b(-1)c(-1)|0> is 2 times the state."""
    fock = FermionFock()
    state = fock.state({((1,), (1,)): 1})
    assert RealizedMode("L", 0, "fermion", 2).apply(state) == state.scale(2)


def test_fermion_current_modes() -> None:
    """j_{-1}|0> = b(0)c(-1)|0> and j_1 j_{-1}|0> = |0>."""
    fock = FermionFock()
    j_minus = RealizedMode("j", -1, "fermion", 1).apply(fock.vacuum())
    assert j_minus == fock.state({((0,), (1,)): 1})
    assert RealizedMode("j", 1, "fermion", 1).apply(j_minus) == fock.vacuum()


def test_fermion_wt0_on_vacuum() -> None:
    """Wt_0 kills both vacua."""
    assert RealizedMode("Wt", 0, "fermion", 0).apply(FermionFock().vacuum()).is_zero()
    assert RealizedMode("Wt", 0, "boson", 0).apply(BosonFock(as_poly(0)).vacuum()).is_zero()


def test_charge_decomposition_level_three() -> None:
    """Charge-0 states at level 3 number p(3) = 3."""
    dims = charge_decomposition(3)
    assert dims[0] == 3
    assert len(FermionFock().basis(3, 0)) == 3
    assert len(bosonization_map(3)) == 3


def test_realized_charge_conservation() -> None:
    """Realized L_n and Wt_n keep the bc charge."""
    fock = FermionFock()
    state = fock.state({((0,), (2,)): 1, ((1,), (1,)): -1})
    for symbol in ("L", "Wt", "j"):
        for n in (-2, -1, 1):
            image = RealizedMode(symbol, n, "fermion", 4).apply(state)
            assert image.charges() <= {0}


def test_w3_relations_low_level() -> None:
    """Realized commutators match the W3 relations on H^0 through level 2."""
    report = verify_w3_relations(max_level=2, alpha=0, max_index=2)
    assert report.passed, report.to_dict()["failures"][:3]
    assert report.pairs_checked == 3 * 25


def test_w3_relations_symbolic_alpha() -> None:
    """The relations hold on H^alpha for symbolic alpha."""
    assert verify_w3_relations(max_level=2, alpha=ALPHA, max_index=1).passed


@pytest.mark.slow
def test_w3_relations_full_range() -> None:
    """All pairs with |index| <= 3 through level 4."""
    assert verify_w3_relations(4, 0, 3).passed


def test_bosonization() -> None:
    """Phi is an isomorphism per level through level 4 and intertwines j, L and Wt."""
    report = verify_bosonization(
        max_level=FreeFieldConfig.MAX_LEVEL, max_index=FreeFieldConfig.BOSONIZATION_MAX_INDEX
    )
    assert FreeFieldConfig.MAX_LEVEL >= 4
    assert [d.isomorphic for d in report.dimensions] == [True] * 5
    assert [d.boson for d in report.dimensions] == [1, 1, 2, 3, 5]
    assert report.passed, report.mismatches[:3]


def test_fermion_images_use_bounded_cache() -> None:
    """Repeated fermion bilinear actions hit a bounded memo."""
    memo = realized._fermion_on_key
    assert memo.cache_info().maxsize == FreeFieldConfig.FERMION_CACHE_SIZE
    state = FermionFock().state({((1,), (1,)): 1})
    first = RealizedMode("Wt", -1, "fermion", 3).apply(state)
    hits = memo.cache_info().hits
    assert RealizedMode("Wt", -1, "fermion", 3).apply(state) == first
    assert memo.cache_info().hits > hits
