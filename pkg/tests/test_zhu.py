"""pytest suite for the Zhu algebra: field modes, products, reductions and the curve."""

from __future__ import annotations

import dataclasses
from fractions import Fraction

import pytest

from config import ZhuConfig
from exact import ALPHA, T, W, as_poly, format_poly
from w3core import L, ModuleMismatchError, StateVector, Wt, verma_module
from zhu import (
    CURVE,
    STRATEGIES,
    CurveIdeal,
    ZhuElement,
    circ,
    curve_poly,
    curve_value,
    field_mode,
    ideal_failures,
    iso_partner,
    on_curve,
    product_failures,
    quotient_normal_form,
    reduce_to_poly,
    reduce_via_zero_mode,
    star,
    weight_from_alpha,
    weights_coincide,
    zero_mode,
)


def test_field_modes_of_omega(vacuum) -> None:
    """omega_(1) = L_0 and omega_(0) = L_{-1}; the vacuum acts as identity."""
    omega = vacuum.from_word([L(-2)])
    w3 = vacuum.from_word([Wt(-3)])
    assert field_mode(omega, 1, w3) == w3.scale(3)
    assert field_mode(omega, 0, vacuum.top()).is_zero()
    assert field_mode(vacuum.top(), -1, w3) == w3


def test_star_with_vacuum_and_circ(vacuum) -> None:
    """omega * |0> = omega, and |0> o b = 0."""
    omega = vacuum.from_word([L(-2)])
    assert star(omega, vacuum.top()) == omega
    assert circ(vacuum.top(), omega).is_zero()


def test_zero_mode_on_symbolic_verma(vacuum) -> None:
    """o(omega) and o(Wt_{-3}|0>) act on the top of M(t, w) by t and w."""
    top = verma_module(T, W).top()
    assert zero_mode(vacuum.from_word([L(-2)]), top) == top.scale(T)
    assert zero_mode(vacuum.from_word([Wt(-3)]), top) == top.scale(W)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_generator_images(vacuum, strategy: str) -> None:
    """[L_{-2}|0>] = t, [Wt_{-3}|0>] = w, [L_{-3}|0>] = -2t."""
    assert reduce_to_poly(vacuum.from_word([L(-2)]), strategy).value == T
    assert reduce_to_poly(vacuum.from_word([Wt(-3)]), strategy).value == W
    assert reduce_to_poly(vacuum.from_word([L(-3)]), strategy).value == -2 * T


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_singular_images(singular_pair, strategy: str) -> None:
    """[v_s] = w^2 - 8/9 t^3 - 1/9 t^2 and [v_s'] = 0 under each strategy."""
    v_s, v_s_prime = singular_pair
    image = reduce_to_poly(v_s, strategy)
    assert format_poly(image.value) == "w^2 - 8/9*t^3 - 1/9*t^2"
    assert reduce_to_poly(v_s_prime, strategy).value == 0


def test_zero_mode_reduction_agrees(singular_pair, vacuum) -> None:
    """The zero-mode route gives the same classes."""
    v_s, v_s_prime = singular_pair
    assert reduce_via_zero_mode(v_s).value == CURVE
    assert reduce_via_zero_mode(v_s_prime).value == 0
    v = vacuum.from_word([L(-2), Wt(-3)])
    assert reduce_via_zero_mode(v) == reduce_to_poly(v, "peel") == reduce_to_poly(v, "star")


def test_curve_poly_report() -> None:
    """curve_poly returns the ideal <f> and the images (f, 0)."""
    ideal, (image, image_prime) = curve_poly("star")
    assert str(ideal) == "w^2 - 8/9*t^3 - 1/9*t^2"
    assert image.value == ideal.generator
    assert not image_prime.value


def test_reduction_rejects_bad_input(vacuum) -> None:
    """Only vacuum-module vectors and known strategies are accepted."""
    with pytest.raises(ModuleMismatchError):
        reduce_to_poly(verma_module(0, 0).top())
    with pytest.raises(ValueError):
        reduce_to_poly(vacuum.top(), "sideways")


def test_ideal_and_product_sweeps() -> None:
    """[a o b] = 0 and [a * b] = [a][b] on low-weight basis pairs."""
    assert product_failures(4) == []


def test_ideal_maps_to_zero_through_weight_six() -> None:
    """[a o b] = 0 for homogeneous basis pairs of total weight <= 6."""
    assert ZhuConfig.IDEAL_MAX_WEIGHT >= 6
    assert ideal_failures(ZhuConfig.IDEAL_MAX_WEIGHT) == []


def test_quotient_normal_form_and_ideal() -> None:
    """w^2 is replaced by 1/9 t^2(8t+1); f itself lies in the ideal."""
    assert format_poly(quotient_normal_form(W ** 3).value) == "8/9*t^3*w + 1/9*t^2*w"
    assert CurveIdeal().contains(CURVE * T)
    assert not CurveIdeal().contains(W)
    assert ZhuElement(W * W).normal_form() == ZhuElement(quotient_normal_form(W ** 2).value)


def test_curve_points() -> None:
    """(0,0) and (1,1) lie on the curve, (1,0) does not."""
    assert on_curve(0, 0)
    assert on_curve(1, 1)
    assert curve_value(1, 0) == Fraction(-1)
    assert not on_curve(1, 0)


def test_weight_from_alpha() -> None:
    """alpha = 2 gives (1, 1); symbolic alpha parametrizes the curve."""
    assert weight_from_alpha(2) == (as_poly(1), as_poly(1))
    t, w = weight_from_alpha(ALPHA)
    assert not (w * w - as_poly(Fraction(1, 9)) * t * t * (8 * t + 1))


def test_only_zero_and_one_coincide() -> None:
    """V_0 = V_1, while alpha and 1 - alpha differ in w unless w vanishes."""
    assert weights_coincide(0, 1)
    assert iso_partner(Fraction(1, 3)) == Fraction(2, 3)
    assert not weights_coincide(Fraction(1, 3), Fraction(2, 3))
    assert weights_coincide(Fraction(1, 2), Fraction(1, 2))


def test_star_of_omega_with_itself(vacuum) -> None:
    """omega * omega = L_{-2}^2|0> + 2 L_{-3}|0> + 2 L_{-2}|0>."""
    omega = vacuum.from_word([L(-2)])
    expected = (
        vacuum.from_word([L(-2), L(-2)])
        + vacuum.from_word([L(-3)], 2)
        + vacuum.from_word([L(-2)], 2)
    )
    assert star(omega, omega) == expected


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_reduce_l_minus_two_squared(vacuum, strategy: str) -> None:
    """[L_{-2}L_{-2}|0>] = t^2 + 2t."""
    assert reduce_to_poly(vacuum.from_word([L(-2), L(-2)]), strategy).value == T * T + 2 * T


@pytest.mark.parametrize("level", range(7))
def test_strategies_agree_on_every_basis_vector(vacuum, level: int) -> None:
    """peel and star give the same class for each PBW basis vector of the level."""
    for monomial in vacuum.graded_basis(level):
        v = StateVector.basis(vacuum, monomial)
        assert reduce_to_poly(v, "peel") == reduce_to_poly(v, "star"), str(monomial)


@pytest.mark.slow
@pytest.mark.parametrize("level", range(6))
def test_zero_mode_agrees_on_every_basis_vector(vacuum, level: int) -> None:
    """o(v) on the top of M(t, w) matches the peel class through level 5."""
    for monomial in vacuum.graded_basis(level):
        v = StateVector.basis(vacuum, monomial)
        assert reduce_via_zero_mode(v) == reduce_to_poly(v, "peel"), str(monomial)


def test_curve_ideal_default_generator() -> None:
    """The default generator is built per instance, not a shared class-level default."""
    (generator_field,) = dataclasses.fields(CurveIdeal)
    assert generator_field.default is dataclasses.MISSING
    assert CurveIdeal().generator == CURVE
    assert CurveIdeal() == CurveIdeal(CURVE)
