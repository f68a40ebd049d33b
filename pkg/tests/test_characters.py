import pytest

from incidence_cohomology import char_ring as cr
from incidence_cohomology import characters
from incidence_cohomology.char_ring import Weight
from incidence_cohomology.characters import (
    CohPair,
    NotComputable,
    char_small_d,
    corner_char,
    euler_char,
    h0,
    h0_twist,
    h1,
    h1_p2_closed,
    h1_twist,
    hw_h1,
    line_bundle_character,
)
from incidence_cohomology.errors import (
    DomainError,
    NoHighestWeightError,
    OutOfRangeError,
    UnsplitWeightError,
    UnsupportedRankError,
)
from incidence_cohomology.vanishing import full_profile


def test_euler_characteristic():
    assert euler_char(2, 2).is_zero()
    assert euler_char(3, 1) == -cr.schur2(2, 1, n=3)
    assert euler_char(1, 3) == cr.schur2(2, 1, n=3)


def test_recursion_examples():
    """h1(2,2) = 1 in characteristic two, h1(3,1) = s_(2,1), h1(0,e) = 0."""
    assert h1(2, 2, 2) == cr.one(3)
    assert h1(3, 1, 2) == cr.schur2(2, 1, n=3)
    assert h1(3, 1, 2).dim_eval() == 8
    assert h1(0, 5, 3).is_zero()


@pytest.mark.parametrize("p", [2, 3])
def test_h0_is_h1_with_arguments_exchanged(p):
    for d in range(0, 10):
        for e in range(0, 10):
            assert h0(d, e, p) == h1(e, d, p)


@pytest.mark.parametrize("p", [2, 3])
def test_difference_is_the_euler_characteristic(p):
    for d in range(0, 12):
        for e in range(0, 12):
            assert h0(d, e, p) - h1(d, e, p) == euler_char(d, e)


@pytest.mark.parametrize("p", [2, 3])
def test_h1_is_an_honest_symmetric_character(p):
    for d in range(1, 12):
        for e in range(0, 12):
            character = h1(d, e, p)
            assert character.has_nonnegative_coefficients()
            assert character.is_symmetric()


def test_large_characteristic_has_no_correction():
    """For p larger than every argument only the Euler characteristic survives."""
    for d in range(1, 6):
        for e in range(0, d):
            assert h1(d, e, 11) == cr.schur2(d - 1, e, n=3)
        for e in range(d, 6):
            assert h1(d, e, 11).is_zero()


def test_twist_wrappers_shift_by_one():
    assert h1_twist(2, 1, 2) == h1(2, 2, 2)
    assert h0_twist(3, 0, 2) == h0(3, 1, 2)


def test_coh_pair():
    pair = CohPair(2, 2, p=2)
    assert pair.twist == 1
    assert pair.h1() == pair.h0() == cr.one(3)
    assert pair.euler_char().is_zero()


def test_pair_operations_need_rank_three_and_valid_arguments():
    with pytest.raises(UnsupportedRankError):
        h1(2, 2, 2, n=4)
    with pytest.raises(DomainError):
        h1(-1, 2, 2)


def test_small_d_characters():
    assert char_small_d(3, 2, 2, 1) == cr.one(3)
    assert char_small_d(3, 3, 4, 3) == cr.schur2_trunc(3, 6, 1, n=3)
    for n, p in [(3, 2), (3, 3), (4, 2), (4, 3)]:
        assert char_small_d(n, p, p, (n - 1) * p - n) == cr.one(n)


def test_small_d_range_is_enforced():
    with pytest.raises(OutOfRangeError):
        char_small_d(3, 3, 6, 8)
    with pytest.raises(OutOfRangeError):
        char_small_d(3, 3, 4, 2)


def test_small_d_agrees_with_recursion_for_rank_three():
    for p in (2, 3):
        for d in range(p, 2 * p):
            for twist in range(d - 1, 2 * p):
                assert char_small_d(3, p, d, twist) == h1_twist(d, twist, p)


def test_corner_characters():
    corner = corner_char(3, 2, 1, 1)
    assert (corner.d, corner.a, corner.b) == (2, 2, -4)
    assert corner.character == cr.one(3)

    corner = corner_char(3, 3, 2, 1)
    assert (corner.d, corner.a, corner.b) == (6, 7, -8)
    assert corner.character == cr.schur2(1, 1, n=3).frobenius(3)
    assert corner.twist == 6

    corner = corner_char(4, 2, 1, 2)
    assert (corner.d, corner.a, corner.b) == (4, 9, -7)
    assert corner.character == cr.one(4)


def test_corner_needs_a_leading_digit():
    with pytest.raises(DomainError):
        corner_char(3, 3, 3, 1)
    with pytest.raises(DomainError):
        corner_char(3, 3, 0, 1)


def test_corner_matches_recursion_for_rank_three():
    for p in (2, 3):
        for k in range(0, 3):
            for t in range(1, p):
                corner = corner_char(3, p, t, k)
                assert h1_twist(corner.d, corner.twist, p) == corner.character


@pytest.mark.parametrize(
    "d, e, p, weight",
    [(3, 2, 2, (2, 2, 0)), (2, 2, 2, (0, 0, 0)), (5, 6, 2, (1, 0, 0))],
)
def test_highest_weight_examples(d, e, p, weight):
    assert hw_h1(d, e, p) == Weight(weight)


@pytest.mark.parametrize("p", [2, 3])
def test_highest_weight_prediction_matches_recursion(p):
    for d in range(0, 20):
        for e in range(0, 20):
            character = h1(d, e, p)
            if character.is_zero():
                with pytest.raises(NoHighestWeightError):
                    hw_h1(d, e, p)
            else:
                assert hw_h1(d, e, p) == character.highest_weight()


def test_highest_weight_is_rank_three_only():
    assert hw_h1(3, 2, 2, n=3) == Weight((2, 2, 0))
    with pytest.raises(UnsupportedRankError):
        hw_h1(3, 2, 2, n=4)


def test_highest_weight_reports_an_unsplit_pair(monkeypatch):
    monkeypatch.setattr(characters, "_h1_vanishes", lambda d, e, p: False)
    with pytest.raises(UnsplitWeightError, match="d=2, e=3"):
        hw_h1(2, 3, 2)


def test_p2_closed_form_examples():
    assert h1_p2_closed(2, 2, 1) == cr.one(3)
    assert h1_p2_closed(5, 5, 2) == cr.schur2_trunc(4, 8, 1, n=3)
    assert h1(5, 5, 2) == h1_p2_closed(5, 5, 2)


def test_p2_closed_form_matches_recursion():
    for k in range(1, 5):
        for d in range(2**k, 2 ** (k + 1) - 1):
            for e in range(d, 2 ** (k + 1) - 1):
                assert h1_p2_closed(d, e, k) == h1(d, e, 2)


def test_p2_closed_form_range_is_enforced():
    with pytest.raises(OutOfRangeError):
        h1_p2_closed(3, 2, 1)
    with pytest.raises(OutOfRangeError):
        h1_p2_closed(4, 7, 2)


def test_line_bundle_character_examples():
    assert line_bundle_character(3, 2, 2, -4, 2) == corner_char(3, 2, 1, 1).character
    assert line_bundle_character(3, 2, 3, -5, 2).is_zero()
    assert isinstance(line_bundle_character(3, 2, 5, 2, 0), NotComputable)
    assert line_bundle_character(3, 2, 5, 2, 1).is_zero()
    assert isinstance(line_bundle_character(3, 2, -2, -7, 3), NotComputable)


def test_line_bundle_character_edge():
    """O(a, -2) carries H^1 = Sym^(a-1) V."""
    assert line_bundle_character(3, 3, 4, -2, 1) == cr.h(3, n=3)
    assert line_bundle_character(3, 3, 0, -2, 1).is_zero()


@pytest.mark.parametrize("p", [2, 3])
def test_line_bundle_character_respects_serre_duality_and_swap(p):
    for a in range(-9, 10):
        for b in range(-9, 10):
            for i in range(4):
                value = line_bundle_character(3, p, a, b, i)
                serre = line_bundle_character(3, p, -2 - a, -2 - b, 3 - i)
                swap = line_bundle_character(3, p, b, a, i)
                if isinstance(value, NotComputable):
                    assert isinstance(serre, NotComputable)
                    assert isinstance(swap, NotComputable)
                else:
                    assert value == serre.dual()
                    assert value == swap.dual()


@pytest.mark.parametrize("p", [2, 3])
def test_line_bundle_character_agrees_with_vanishing(p):
    for a in range(-9, 10):
        for b in range(-9, 10):
            profile = full_profile(3, p, a, b)
            for i in range(4):
                value = line_bundle_character(3, p, a, b, i)
                if isinstance(value, NotComputable):
                    assert profile.is_nonzero(i)
                else:
                    assert value.is_zero() != profile.is_nonzero(i)


def test_line_bundle_character_arguments():
    with pytest.raises(UnsupportedRankError):
        line_bundle_character(4, 2, 2, -5, 2)
    with pytest.raises(DomainError):
        line_bundle_character(3, 2, 2, -4, 4)
