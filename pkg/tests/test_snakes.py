import itertools
from collections import Counter

import pytest

import oracles
from snakechar.config import LimitExceeded
from snakechar.lattice import Character, Family, fold_char
from snakechar.monomials import YMonomial, ZMonomial
from snakechar.paths import (PathA, enum_paths_A, enum_paths_B, in_xb, monomial_of_path,
                             strictly_above)
from snakechar.snakes import (SnakeA, SnakeB, char_snake, count_nop_tuples, enum_nop_tuples,
                              fold_monomial, format_snake, nop_character, parse_snake,
                              path_sets, qchar_snake, snake_to_monomial, twisted_char_snake,
                              twisted_qchar_snake)


def a_snakes(m, max_T=2, span=8):
    pts = [(i, k) for k in range(span + 1) for i in range(m + 1) if (k - i) % 2 == 0]
    for T in range(1, max_T + 1):
        for chain in itertools.combinations(pts, T):
            try:
                yield SnakeA(m, chain)
            except ValueError:
                pass


def b_snakes(n, max_T=2, span=12):
    pts = [(i, k) for k in range(span + 1) for i in range(1, n + 1) if in_xb(n, i, k)]
    for T in range(1, max_T + 1):
        for chain in itertools.combinations(pts, T):
            try:
                yield SnakeB(n, chain)
            except ValueError:
                pass


def twisted_snakes(n, max_T=2, span=6):
    for s in a_snakes(2 * n, max_T, span):
        if all(i <= n for i, _ in s.points):
            yield s


# validation and parsing

def test_snake_validation():
    SnakeA(4, ((1, 0), (2, 3)))
    with pytest.raises(ValueError, match="snake position"):
        SnakeA(4, ((1, 0), (2, 1)))
    with pytest.raises(ValueError, match="parity"):
        SnakeA(4, ((1, 0), (2, 4)))
    SnakeB(2, ((1, 4), (1, 8)))
    with pytest.raises(ValueError, match="snake position"):
        SnakeB(2, ((1, 4), (2, 6)))
    with pytest.raises(ValueError, match=r"\(1, 5\)"):
        SnakeB(2, ((1, 5),))
    with pytest.raises(ValueError):
        SnakeB(2, ((3, 4),))


def test_parse_and_format():
    assert parse_snake("1:4, 2:10") == ((1, 4), (2, 10))
    assert format_snake(SnakeB(2, parse_snake("1:4,2:10"))) == "1:4,2:10"
    assert parse_snake("1:-4") == ((1, -4),)
    for bad in ("", "1-4", "a:b", "1:2:3"):
        with pytest.raises(ValueError):
            parse_snake(bad)


def test_snake_monomials():
    assert snake_to_monomial(SnakeB(2, ((1, 4),))) == YMonomial.var(1, 4)
    assert snake_to_monomial(SnakeB(2, ((2, 2),))) == YMonomial.var(2, 1) * YMonomial.var(2, 3)
    assert snake_to_monomial(SnakeA(4, ((1, 0), (2, 3)))) == YMonomial.var(1, 0) * YMonomial.var(2, 3)


# NOP tuples

def test_nop_single_set_is_the_path_set():
    ps = enum_paths_A(4, 2, 0)
    assert enum_nop_tuples([ps]) == [(p,) for p in ps]


def test_nop_identical_singletons_is_empty():
    p = enum_paths_A(4, 2, 0)[0]
    assert enum_nop_tuples([[p], [p]]) == []


def test_nop_matches_product_filter():
    sets = [enum_paths_A(4, 1, 0), enum_paths_A(4, 1, 2)]
    got = enum_nop_tuples(sets)
    expected = [t for t in itertools.product(*sets) if strictly_above(t[0], t[1])]
    assert sorted(got, key=repr) == sorted(expected, key=repr)
    assert len(got) == len(oracles.nop([oracles.paths_A(4, 1, 0), oracles.paths_A(4, 1, 2)],
                                       oracles.above_A)) == 10
    assert count_nop_tuples(sets) == len(got)


def test_nop_three_sets_product_filter():
    s = SnakeB(2, ((1, 0), (1, 4), (2, 10)))
    sets = path_sets(s)
    got = enum_nop_tuples(sets)
    expected = [t for t in itertools.product(*sets)
                if all(strictly_above(a, b) for a, b in zip(t, t[1:]))]
    assert set(got) == set(expected) and len(got) == len(expected)


def test_nop_limit():
    s = SnakeB(3, ((3, 2), (3, 6)))
    with pytest.raises(LimitExceeded):
        enum_nop_tuples(path_sets(s), max_tuples=3)
    with pytest.raises(LimitExceeded):
        nop_character(path_sets(s), Family.B, 3, max_tuples=3)


# q-characters and characters

def test_qchar_examples():
    k = 5
    q = qchar_snake(SnakeA(4, ((1, k),)))
    assert len(q) == 4 and q.count(YMonomial.var(1, k)) == 1
    q = qchar_snake(SnakeA(2, ((1, k),)))
    assert Counter(q) == Counter([YMonomial.var(1, k), YMonomial.var(1, k + 2, exp=-1)])
    for i, kk in [(1, 0), (2, 2)]:
        assert len(qchar_snake(SnakeB(2, ((i, kk),)))) == len(enum_paths_B(2, i, kk))


def test_char_examples():
    c = char_snake(SnakeA(2, ((1, 3),)))
    assert c == Character(Family.A, 1, {(1,): 1, (-1,): 1})
    assert char_snake(SnakeA(4, ((2, 0),))).mass() == 6


@pytest.mark.parametrize("m", [2, 3, 4])
def test_char_A_matches_oracle(m):
    for s in a_snakes(m):
        assert Counter(char_snake(s).terms()) == oracles.char_A(m, s.points), s


@pytest.mark.parametrize("n,span,max_T", [(2, 12, 2), (2, 12, 3), (3, 8, 2)])
def test_char_B_matches_oracle(n, span, max_T):
    for s in b_snakes(n, max_T, span):
        if len(s.points) < max_T - 1:
            continue
        assert Counter(char_snake(s).terms()) == oracles.char_B(n, s.points), s


def test_tuple_count_is_mass():
    for s in list(b_snakes(2)) + list(a_snakes(3)):
        assert char_snake(s).mass() == len(enum_nop_tuples(path_sets(s)))


def _project(monomials, family, rank):
    return Character.from_weights(family, rank, (m.weight(family, rank).coeffs for m in monomials))


def test_qchar_projects_to_char():
    for s in list(b_snakes(2)) + list(b_snakes(3, span=8)):
        assert _project(qchar_snake(s), Family.B, s.n) == char_snake(s)
    for s in a_snakes(4):
        assert _project(qchar_snake(s), Family.A, s.m - 1) == char_snake(s)


def test_dominant_monomial_unique():
    for s in list(b_snakes(2)) + list(a_snakes(4, span=6)):
        q = qchar_snake(s)
        dominant = [m for m in q if m.is_dominant()]
        assert dominant == [snake_to_monomial(s)], s


def test_char_is_shift_invariant():
    s = SnakeB(2, ((1, 4), (2, 10)))
    direct = nop_character(path_sets(s.shifted(8)), Family.B, 2)
    assert char_snake(s) == direct == char_snake(s.shifted(-12))
    a = SnakeA(4, ((1, 3), (2, 6)))
    assert char_snake(a) == nop_character(path_sets(a), Family.A, 3)


def test_b_weights_stay_in_the_class_of_the_highest_weight():
    for s in b_snakes(3, span=10):
        top = snake_to_monomial(s).weight(Family.B, 3).coeffs
        for key, _ in char_snake(s):
            assert (key[-1] - top[-1]) % 2 == 0


# folding

def test_fold_monomial_examples():
    assert fold_monomial(YMonomial.var(3, 2), 2) == ZMonomial.var(2, 1, 2, sign=-1)
    assert fold_monomial(YMonomial.var(2, 3, sign=-1), 2) == ZMonomial.var(2, 2, 3)
    assert fold_monomial(YMonomial(), 2) == ZMonomial.one(2)
    with pytest.raises(ValueError):
        fold_monomial(YMonomial.var(4, 0), 2)


def test_twisted_qchar_examples():
    k = 4
    q = twisted_qchar_snake(SnakeA(4, ((1, k),)))
    assert len(q) == 4
    assert q.count(ZMonomial.var(2, 1, k)) == 1
    with pytest.raises(ValueError):
        twisted_qchar_snake(SnakeA(4, ((3, 0),)))


@pytest.mark.parametrize("n", [2, 3])
def test_twisted_char_is_folded_char(n):
    for s in twisted_snakes(n):
        assert twisted_char_snake(s) == fold_char(char_snake(s)), s


def test_twisted_qchar_independent_of_enumeration_order():
    s = SnakeA(6, ((1, 0), (3, 4)))
    sets = [oracles.paths_A(6, i, k) for i, k in s.points]
    tuples = oracles.nop(sets, oracles.above_A)
    brute = Counter()
    for t in reversed(tuples):
        m = YMonomial()
        for ys in t:
            m = m * monomial_of_path(PathA.from_ys(ys))
        brute[fold_monomial(m, 3)] += 1
    assert Counter(twisted_qchar_snake(s)) == brute
