from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitquant.catalog import catalog_lookup
from orbitquant.errors import MissingSpec, RankMismatch, WrongFamily
from orbitquant.orbits import family_partition
from orbitquant.vchar import (
    VirtualCharacter,
    character,
    dominant_rep,
    mcgovern_character,
    mcgovern_roots,
    r_e,
    r_x,
    unipotent_pair,
    x_pi,
)
from orbitquant.weight import Weight
from orbitquant.weyl import SubgroupSpec, arrangement

from oracles import r_x_by_enumeration

Ind = VirtualCharacter.ind
DESK = [(p, q) for p in (1, 2) for q in range(0, 6 - 2 * p) if 2 * p + q <= 5]


def test_dominant_rep():
    assert dominant_rep((0, -3, 2)) == Weight.of(3, 2, 0)
    assert dominant_rep((1, -1)) == Weight.of(1, 1)
    assert dominant_rep((3, 2, 0)) == Weight.of(3, 2, 0)
    assert dominant_rep(("-1/2", "3/2")).strings() == ["3/2", "1/2"]


def test_arithmetic():
    a = Ind(0, 0) - Ind(2, 0)
    assert (a + (-1) * a).terms == {}
    assert a.scale(0).terms == {}
    assert a * Fraction(1, 2) + a * Fraction(1, 2) == a
    assert Ind(1, -1) == Ind(1, 1)
    with pytest.raises(RankMismatch):
        a + Ind(0, 0, 0)
    assert VirtualCharacter.from_json(2, a.to_json()) == a


def test_serialisation_order():
    chi = Ind(0, 0) - Ind(1, 1) + Fraction(1, 2) * Ind(2, 0)
    assert chi.to_json() == [
        {"weight": ["2", "0"], "coeff": "1/2"},
        {"weight": ["1", "1"], "coeff": "-1"},
        {"weight": ["0", "0"], "coeff": "1"},
    ]


def test_r_x_hand_examples():
    assert r_x(Weight.of(0, 1), SubgroupSpec.parse("D1xC1")) == Ind(0, 0) - Ind(2, 0)
    assert r_x(Weight.of(1, 0), SubgroupSpec.parse("D2")) == Ind(0, 0) - 2 * Ind(1, 1) + Ind(2, 0)
    with pytest.raises(RankMismatch):
        r_x(Weight.of(1, 0, 0), "D2")


@pytest.mark.parametrize("text", ["D1xC1", "D2", "D2xC2", "D1xC3", "D4xC0", "D3xC2", "D2xC3", "A4", "C3", "D3xA2"])
def test_r_x_matches_full_enumeration(text):
    spec = SubgroupSpec.parse(text)
    lam = arrangement(spec)
    assert r_x(lam, spec) == r_x_by_enumeration(lam, spec)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.sampled_from(["D1xC2", "C3", "D3", "A3", "A1xD2"]))
@settings(max_examples=40, deadline=None)
def test_r_x_arbitrary_weights(coords, text):
    spec = SubgroupSpec.parse(text)
    lam = Weight.of(*coords)
    assert r_x(lam, spec) == r_x_by_enumeration(lam, spec)


def test_sp4_pair():
    xp, xm = unipotent_pair((2, 2))
    assert xp == Ind(0, 0) - Ind(1, 1)
    assert xm == Ind(1, 1) - Ind(2, 0)
    assert xp + xm == r_e((2, 2))
    assert unipotent_pair((2, 2, 1, 1))[0].coeff((0, 0, 0)) == 1


def test_x_pi_missing_spec():
    entry = catalog_lookup((4, 4, 3, 3, 2, 2, 1, 1))
    for pi in ["00", "01", "10", "11"]:
        with pytest.raises(MissingSpec):
            x_pi(entry, pi)
    with pytest.raises(MissingSpec):
        character((4, 4, 3, 3, 2, 2, 1, 1), "minus")


def test_wrong_family():
    with pytest.raises(WrongFamily):
        unipotent_pair((4, 4, 3, 3, 2, 2, 1, 1))
    with pytest.raises(WrongFamily):
        unipotent_pair((1, 1, 1, 1))


@pytest.mark.parametrize("p,q", DESK)
def test_pair_properties(p, q):
    P = family_partition(p, q)
    n = 2 * p + q
    xp, xm = unipotent_pair(P)
    assert xp + xm == r_e(P)
    assert xp.coeff(Weight.zero(n)) == 1
    assert xm.coeff(Weight.of(*([1] * 2 * p + [0] * q))) == 1
    for i in range(p):
        assert xm.coeff(Weight.of(*([1] * 2 * i + [0] * (n - 2 * i)))) == 0
    for chi in (xp, xm):
        assert all(c.denominator == 1 for _, c in chi)
    # before the halving, R_e and R_s have integer coefficients
    assert all(c.denominator == 1 for _, c in character(P, "Rs"))


def test_mcgovern_small_cases():
    assert mcgovern_character((2, 2)) == Ind(0, 0) - Ind(1, 1)
    for n in range(1, 5):
        assert mcgovern_roots((2 * n,)) == []
        assert mcgovern_character((2 * n,)) == VirtualCharacter.ind(*([0] * n))
    assert len(mcgovern_roots((1, 1, 1, 1, 1, 1))) == 9


@pytest.mark.parametrize("n", [1, 2, 3])
def test_denominator_identity(n):
    rho = Weight.of(*range(n, 0, -1))
    spec = SubgroupSpec((("C", n),))
    assert mcgovern_character((1,) * (2 * n)) == r_x_by_enumeration(rho, spec)


@pytest.mark.parametrize("p,q", DESK)
def test_mcgovern_equals_x_plus(p, q):
    P = family_partition(p, q)
    assert mcgovern_character(P) == unipotent_pair(P)[0]


@pytest.mark.parametrize("p", [1, 2])
def test_lemma_44_identity(p):
    spec = SubgroupSpec((("A", 2 * p),))
    assert unipotent_pair(family_partition(p, 0))[0] == r_x_by_enumeration(arrangement(spec), spec)


def test_lowest_term_of_r_x_is_identity():
    for p, q in DESK:
        entry = catalog_lookup(family_partition(p, q))
        for spec in entry.specs.values():
            assert r_x(arrangement(spec), spec).coeff(Weight.zero(2 * p + q)) == 1
