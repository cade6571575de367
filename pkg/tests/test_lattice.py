import pytest
from hypothesis import given, strategies as st

from snakechar.duality import halved_snake
from snakechar.lattice import (Character, Family, Weight, char_add, char_dominates, char_mul,
                               fold_weight, in_p_prime, lpi_weight, map_char, pi_char, pi_weight)
from snakechar.segments import seg_char
from snakechar.snakes import SnakeB, char_snake, twisted_char_snake


def W(family, *coeffs):
    return Weight(Family(family), tuple(coeffs))


def C(family, rank, terms):
    return Character(Family(family), rank, terms)


def chars(family="A", rank=2, max_terms=4):
    keys = st.tuples(*[st.integers(-3, 3)] * rank)
    return st.dictionaries(keys, st.integers(-3, 3), max_size=max_terms).map(
        lambda d: C(family, rank, d))


def weights(family, rank, lo=-6, hi=6):
    return st.tuples(*[st.integers(lo, hi)] * rank).map(lambda c: W(family, *c))


# character ring

def test_add_units():
    one = Character.unit(Family.A, 3)
    assert char_add(one, one) == C("A", 3, {(0, 0, 0): 2})


def test_add_cancels():
    w = (1, -1)
    assert char_add(C("A", 2, {w: 3}), C("A", 2, {w: -3})) == C("A", 2, {})
    assert not C("A", 2, {w: 0})


def test_add_segment_mass():
    c = seg_char(3, 0, 1)
    assert char_add(c, c).mass() == 6


def test_mul_unit_and_monomials():
    x = C("A", 2, {(1, 0): 2, (-1, 1): 1})
    assert char_mul(Character.unit(Family.A, 2), x) == x
    assert char_mul(C("A", 2, {(1, 0): 1}), C("A", 2, {(0, 1): 1})) == C("A", 2, {(1, 1): 1})


def test_mul_trivial_segment():
    assert char_mul(seg_char(3, 0, 0), seg_char(3, 0, 1)) == seg_char(3, 0, 1)


def test_family_mismatch_rejected():
    with pytest.raises(ValueError):
        char_add(C("A", 2, {}), C("B", 2, {}))
    with pytest.raises(ValueError):
        char_mul(C("A", 2, {}), C("A", 3, {}))
    with pytest.raises(ValueError):
        char_dominates(C("A", 2, {}), C("TW", 2, {}))


def test_canonical_order_and_json_roundtrip():
    c = C("B", 2, {(1, 0): 1, (-1, 2): 3, (0, 0): 0})
    assert [k for k, _ in c] == [(-1, 2), (1, 0)]
    assert Character.from_json(c.to_json()) == c
    assert c.to_json() == {"family": "B", "rank": 2, "terms": [[[-1, 2], 3], [[1, 0], 1]]}


@given(chars(), chars())
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(chars(max_terms=3), chars(max_terms=3), chars(max_terms=3))
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(chars(), chars(), chars())
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(chars())
def test_unit_is_identity(a):
    assert a * Character.unit(Family.A, 2) == a


# weight maps

def test_fold_examples():
    assert fold_weight(W("A", 1, 0, 1)) == W("TW", 2, 0)
    assert fold_weight(W("A", 0, 1, 0)) == W("TW", 0, 1)
    assert fold_weight(W("A", 1, 0, 0, 0, 2)) == W("TW", 3, 0, 0)
    with pytest.raises(ValueError):
        fold_weight(W("A", 1, 0))


def test_pi_examples():
    assert pi_weight(W("B", 1, 0)) == W("TW", 1, 0)
    assert pi_weight(W("B", 0, 2)) == W("TW", 0, 1)
    with pytest.raises(ValueError):
        pi_weight(W("B", 0, 1))


def test_lpi_examples():
    assert lpi_weight(W("TW", 2, 0)) == W("B", 1, 0)
    assert lpi_weight(W("TW", 1, 0)) == W("B", 0, 0)
    assert lpi_weight(W("TW", 0, 1)) == W("B", 0, 1)


def test_map_char_examples():
    c = C("A", 3, {(1, 0, 0): 1, (0, 0, 1): 1})
    assert map_char(fold_weight, c) == C("TW", 2, {(1, 0): 2})
    assert map_char(pi_weight, C("B", 2, {})) == C("TW", 2, {})
    assert map_char(lpi_weight, C("TW", 2, {(1, 0): 1, (2, 0): 1})) == C("B", 2, {(0, 0): 1, (1, 0): 1})


def test_map_char_pi_rejects_odd_key():
    with pytest.raises(ValueError):
        map_char(pi_weight, C("B", 2, {(0, 1): 1}))


def test_dominance_examples():
    x = char_snake(SnakeB(2, ((1, 4),)))
    assert char_dominates(x, x)
    assert char_dominates(x, C("B", 2, {}))
    dual = twisted_char_snake(halved_snake(SnakeB(2, ((1, 4),))))
    assert char_dominates(pi_char(x), dual)


@given(weights("A", 5), weights("A", 5))
def test_fold_additive(u, v):
    assert fold_weight(u + v) == fold_weight(u) + fold_weight(v)


@given(weights("B", 3), weights("B", 3))
def test_pi_additive_on_p_prime(u, v):
    u = Weight(u.family, u.coeffs[:-1] + (2 * u.coeffs[-1],))
    v = Weight(v.family, v.coeffs[:-1] + (2 * v.coeffs[-1],))
    assert in_p_prime(u) and in_p_prime(v)
    assert pi_weight(u + v) == pi_weight(u) + pi_weight(v)


@given(weights("TW", 3), weights("TW", 3))
def test_lpi_additive_on_its_sublattice(u, v):
    u = Weight(u.family, tuple(2 * c for c in u.coeffs[:-1]) + u.coeffs[-1:])
    v = Weight(v.family, tuple(2 * c for c in v.coeffs[:-1]) + v.coeffs[-1:])
    assert lpi_weight(u + v) == lpi_weight(u) + lpi_weight(v)


@given(weights("B", 3))
def test_pi_is_a_bijection_onto_its_image(w):
    w = Weight(w.family, w.coeffs[:-1] + (2 * w.coeffs[-1],))
    image = pi_weight(w)
    doubled = Weight(Family.TW, tuple(2 * c for c in image.coeffs[:-1]) + image.coeffs[-1:])
    back = lpi_weight(doubled)
    assert Weight(Family.B, back.coeffs[:-1] + (2 * back.coeffs[-1],)) == w


@given(chars(), chars())
def test_dominance_antisymmetric(a, b):
    assert (char_dominates(a, b) and char_dominates(b, a)) == (a == b)


@given(chars("A", 3))
def test_fold_char_mass_and_push_forward(c):
    folded = map_char(fold_weight, c)
    assert folded.mass() == c.mass()
    for key, mult in folded:
        assert mult == sum(m for k, m in c if fold_weight(W("A", *k)).coeffs == key)


@given(chars("B", 2))
def test_pi_char_preserves_terms(c):
    c = C("B", 2, {(a, 2 * b): m for (a, b), m in c})
    image = map_char(pi_weight, c)
    assert image.mass() == c.mass()
    assert len(image) == len(c)
