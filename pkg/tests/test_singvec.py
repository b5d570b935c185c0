"""pytest suite for singular-vector detection and the Wt_0 structure at level 6."""

from __future__ import annotations

from fractions import Fraction

import pytest

from singvec import (
    checked_modes,
    find_singular,
    full_sweep,
    generating_modes,
    is_singular,
    positive_action_matrix,
    reference_vectors,
    verify_not_verma_singular,
    w0_structure,
)
from w3core import L, Wt, verma_module


@pytest.mark.parametrize("level", [1, 2, 3, 4, 5])
def test_no_singular_vectors_below_six(level: int) -> None:
    """The positive action is injective on levels 1 to 5."""
    assert find_singular(level).kernel_dim == 0


def test_level_six_pair_matches_reference(singular_pair) -> None:
    """Two singular vectors at level 6, normalized to v_s and v_s'."""
    report = find_singular(6)
    assert report.kernel_dim == 2
    assert report.normalized_to_reference is True
    assert tuple(report.basis) == singular_pair
    assert report.to_dict()["kernelDim"] == 2


def test_reference_vectors_are_singular(singular_pair) -> None:
    """Every positive mode up to index 6 kills both vectors."""
    for v in singular_pair:
        assert is_singular(v, max_index=6)
        assert all(image.is_zero() for image in full_sweep(v).values())


def test_l1_kills_v_s(vacuum, singular_pair) -> None:
    """L_1 v_s = 0 computed directly."""
    v_s, _ = singular_pair
    assert vacuum.apply_mode(L(1), v_s).is_zero()


def test_negative_target_level_gives_empty_block() -> None:
    """A mode of index above the level contributes no rows."""
    matrix = positive_action_matrix(2, [L(3)])
    assert matrix.rows == 0
    with pytest.raises(ValueError):
        positive_action_matrix(2, [L(0)])


def test_w0_structure_on_pair() -> None:
    """Wt_0 v_s = 98/27 v_s', Wt_0 v_s' = 54 v_s, eigenvalues +-14."""
    structure = w0_structure()
    assert structure.image_of_v_s == (Fraction(0), Fraction(98, 27))
    assert structure.image_of_v_s_prime == (Fraction(54), Fraction(0))
    assert structure.eigenvalues == [Fraction(14), Fraction(-14)]
    assert structure.eigenvectors == [(Fraction(1), Fraction(7, 27)), (Fraction(1), Fraction(-7, 27))]
    assert structure.characteristic_polynomial() == "x^2 - 196"
    assert any("14" in note for note in structure.notes)


def test_w0_structure_on_given_vector(singular_pair) -> None:
    """Coordinates and image of an arbitrary vector of the span."""
    v_s, v_s_prime = singular_pair
    structure = w0_structure(v_s + v_s_prime)
    assert structure.input_coordinates == (Fraction(1), Fraction(1))
    assert structure.input_image == (Fraction(54), Fraction(98, 27))


def test_pair_not_singular_in_verma() -> None:
    """Inside M(0,0) some positive generator acts nonzero on each vector."""
    witnesses = verify_not_verma_singular()
    assert [w.name for w in witnesses] == ["v_s", "v_s'"]
    assert all(w.passed for w in witnesses)
    verma = verma_module(0, 0)
    v_s, _ = reference_vectors(verma)
    images = [verma.apply_mode(m, v_s) for m in (L(1), L(2), Wt(1), Wt(2))]
    assert any(not image.is_zero() for image in images)


def test_level_zero_kernel_is_the_vacuum(vacuum) -> None:
    """Every positive mode maps level 0 to a negative level, so |0> spans the kernel."""
    report = find_singular(0)
    assert report.kernel_dim == 1
    assert report.basis == [vacuum.top()]
    assert report.to_dict()["kernelDim"] == 1


def test_level_six_matrix_shape(vacuum) -> None:
    """Eight basis vectors at level 6; rows stack the targets of L_1, L_2, Wt_1, Wt_2."""
    matrix = positive_action_matrix(6, checked_modes())
    assert matrix.cols == 8
    expected_rows = sum(len(vacuum.graded_basis(6 - m.index)) for m in checked_modes())
    assert matrix.rows == expected_rows


@pytest.mark.parametrize("level", range(7))
def test_wt2_is_redundant(level: int) -> None:
    """The kernel of {L_1, L_2, Wt_1} equals the kernel with Wt_2 added."""
    generated = find_singular(level, modes=generating_modes())
    checked = find_singular(level, modes=checked_modes())
    assert generated.kernel_dim == checked.kernel_dim
    assert generated.basis == checked.basis


def test_find_singular_is_deterministic() -> None:
    """Repeated runs give identical reports."""
    assert find_singular(6).to_dict() == find_singular(6).to_dict()
    assert find_singular(4).to_dict() == find_singular(4).to_dict()
