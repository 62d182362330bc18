from fractions import Fraction

import pytest

from aztec_tilings.engines import count
from aztec_tilings.errors import InvalidHolesError, InvalidOrderError
from aztec_tilings.formulas import (
    LEMMA1_IDS,
    aztec_diamond_value,
    delta,
    lemma1_check,
    lemma1_sides,
    lemma4_value,
    lemma5_value,
    lemma6_check,
    lemma6_lhs,
    lemma6_rhs,
    theorem1_value,
)
from aztec_tilings.grids import dual_graph
from aztec_tilings.regions import (
    KLEIN_ABUT,
    KLEIN_NONABUT,
    PINWHEEL,
    QUARTER_KINDS,
    build_quartered,
)

# Closed-form values for small orders, frozen from brute-force counting of
# the constructed regions.
KNOWN = {
    (PINWHEEL, 1): 0,
    (PINWHEEL, 2): 0,
    (PINWHEEL, 3): 1,
    (PINWHEEL, 4): 2,
    (PINWHEEL, 5): 0,
    (PINWHEEL, 6): 0,
    (PINWHEEL, 7): 20,
    (PINWHEEL, 8): 80,
    (KLEIN_ABUT, 1): 1,
    (KLEIN_ABUT, 2): 2,
    (KLEIN_ABUT, 3): 3,
    (KLEIN_ABUT, 4): 2,
    (KLEIN_ABUT, 5): 3,
    (KLEIN_ABUT, 6): 48,
    (KLEIN_ABUT, 7): 140,
    (KLEIN_ABUT, 8): 48,
    (KLEIN_NONABUT, 1): 1,
    (KLEIN_NONABUT, 2): 1,
    (KLEIN_NONABUT, 3): 1,
    (KLEIN_NONABUT, 4): 6,
    (KLEIN_NONABUT, 5): 12,
    (KLEIN_NONABUT, 6): 6,
    (KLEIN_NONABUT, 7): 12,
    (KLEIN_NONABUT, 8): 560,
}


@pytest.mark.parametrize("kind,order", sorted(KNOWN))
def test_closed_form_matches_frozen_values(kind, order):
    assert theorem1_value(kind, order) == KNOWN[(kind, order)]


@pytest.mark.parametrize("kind", QUARTER_KINDS)
@pytest.mark.parametrize("order", range(1, 9))
def test_closed_form_matches_engine(kind, order):
    counted = count(dual_graph(build_quartered(order, kind)))
    assert theorem1_value(kind, order) == counted


@pytest.mark.parametrize("order", [1, 2, 5, 6, 9, 10, 13, 14])
def test_pinwheel_zero_orders(order):
    assert theorem1_value(PINWHEEL, order) == 0


@pytest.mark.parametrize("n", range(1, 26))
def test_equalities_within_residue_classes(n):
    # Formula-level only: the paired orders share one closed form.
    assert theorem1_value(KLEIN_ABUT, 4 * n - 2) == theorem1_value(KLEIN_ABUT, 4 * n)
    assert theorem1_value(KLEIN_ABUT, 4 * n - 1) == theorem1_value(KLEIN_ABUT, 4 * n + 1)
    assert theorem1_value(KLEIN_NONABUT, 4 * n) == theorem1_value(KLEIN_NONABUT, 4 * n + 2)
    assert theorem1_value(KLEIN_NONABUT, 4 * n - 3) == theorem1_value(KLEIN_NONABUT, 4 * n - 1)


def test_theorem1_rejects_bad_order():
    with pytest.raises(InvalidOrderError):
        theorem1_value(PINWHEEL, 0)
    with pytest.raises(ValueError):
        theorem1_value("octant", 4)


def test_diamond_values():
    assert aztec_diamond_value(1) == 2
    assert aztec_diamond_value(2) == 8
    assert aztec_diamond_value(4) == 1024


def test_lemma4_values():
    assert lemma4_value(3, 5, (1, 3, 5)) == 512
    assert lemma4_value(2, 4, (2, 3)) == 8
    for k in range(1, 6):
        assert lemma4_value(1, 5, (k,)) == 2


def test_lemma5_values():
    assert lemma5_value(3, 5, (3, 4, 6)) == 24
    assert lemma5_value(2, 3, (1, 4)) == 6
    assert lemma5_value(1, 1, (2,)) == 1


def test_hole_formula_preconditions():
    with pytest.raises(InvalidHolesError):
        lemma4_value(2, 4, (1, 2, 3))
    with pytest.raises(InvalidHolesError):
        lemma4_value(2, 4, (2, 5))
    with pytest.raises(InvalidHolesError):
        lemma5_value(2, 3, (4, 1))


def test_delta_values():
    assert delta((1, 4)) == 3
    assert delta((2, 3)) == 1
    assert delta((1, 3, 6, 8)) == 2100
    assert delta((7,)) == 1
    with pytest.raises(InvalidHolesError):
        delta(())


def test_difference_product_ratio():
    assert lemma6_lhs(1) == 3 == lemma6_rhs(1)
    assert lemma6_lhs(2) == Fraction(35, 3) == lemma6_rhs(2)
    assert lemma6_check(30)


@pytest.mark.parametrize("n", range(1, 51))
def test_ratio_identity_up_to_50(n):
    assert lemma6_check(n)


@pytest.mark.parametrize("which", LEMMA1_IDS)
@pytest.mark.parametrize("n", (1, 2))
def test_doubling_recurrences(which, n):
    assert lemma1_check(which, n)


@pytest.mark.parametrize("n", (1, 2))
def test_counted_rectangle_ratios_equal_delta_ratio(n):
    # The A-set and B-set variants of one rectangle differ in count by
    # exactly the ratio of their pairwise-difference products.
    from aztec_tilings.regions import build_holey_ar, build_holey_ar_bar, set_A, set_B

    want = lemma6_lhs(n)
    kept = Fraction(
        count(build_holey_ar(2 * n, 4 * n, set_A(n))),
        count(build_holey_ar(2 * n, 4 * n, set_B(n))),
    )
    barred = Fraction(
        count(build_holey_ar_bar(2 * n, 4 * n - 1, set_A(n))),
        count(build_holey_ar_bar(2 * n, 4 * n - 1, set_B(n))),
    )
    assert kept == want
    assert barred == want


def test_doubling_recurrence_examples():
    assert lemma1_sides("eq7", 1) == (2, 2)
    assert lemma1_sides("eq9", 1) == (6, 6)
    assert lemma1_sides("eq10", 1) == (2, 2)
    with pytest.raises(ValueError):
        lemma1_check("eq99", 1)
    with pytest.raises(InvalidOrderError):
        lemma1_check("eq7", 0)
