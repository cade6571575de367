"""Snakes, non-overlapping path tuples and snake-module (q-)characters."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .config import check_limit
from .lattice import Character, Family
from .monomials import YMonomial, ZMonomial, product
from .paths import (Path, enum_paths_A, enum_paths_B, in_xb,
                    monomial_of_path, strictly_above, weight_of_path)


@dataclass(frozen=True)
class SnakeA:
    """Snake in type A_{m-1}: points (i, k) with 0 <= i <= m."""

    m: int
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((int(i), int(k)) for i, k in self.points))
        if self.m < 2:
            raise ValueError("type A snakes need m >= 2 columns")
        if not self.points:
            raise ValueError("a snake needs at least one point")
        i1, k1 = self.points[0]
        for i, k in self.points:
            if not 0 <= i <= self.m:
                raise ValueError(f"point ({i}, {k}): index outside 0..{self.m}")
            if (k - k1 - (i - i1)) % 2:
                raise ValueError(f"point ({i}, {k}) is not in the parity class of ({i1}, {k1})")
        for (i0, k0), (i, k) in zip(self.points, self.points[1:]):
            if k - k0 < abs(i - i0) + 2:
                raise ValueError(f"point ({i}, {k}) is not in snake position after ({i0}, {k0})")

    @property
    def rank(self) -> int:
        return self.m - 1

    def shifted(self, c: int) -> SnakeA:
        return SnakeA(self.m, tuple((i, k + c) for i, k in self.points))

    def normalized(self) -> SnakeA:
        return self.shifted(-self.points[0][1])


@dataclass(frozen=True)
class SnakeB:
    """Shortened snake in type B_n."""

    n: int
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((int(i), int(k)) for i, k in self.points))
        if self.n < 2:
            raise ValueError("type B snakes need n >= 2")
        if not self.points:
            raise ValueError("a snake needs at least one point")
        for i, k in self.points:
            if not 1 <= i <= self.n:
                raise ValueError(f"point ({i}, {k}): index outside 1..{self.n}")
            if not in_xb(self.n, i, k):
                raise ValueError(f"point ({i}, {k}) violates k = 2n+2i+2 mod 4 for n={self.n}")
        for (i0, k0), (i, k) in zip(self.points, self.points[1:]):
            if k - k0 < 2 * abs(i - i0) + 4:
                raise ValueError(f"point ({i}, {k}) is not in snake position after ({i0}, {k0})")

    @property
    def rank(self) -> int:
        return self.n

    def shifted(self, c: int) -> SnakeB:
        if c % 4:
            raise ValueError("type B snakes shift by multiples of 4")
        return SnakeB(self.n, tuple((i, k + c) for i, k in self.points))

    def normalized(self) -> SnakeB:
        k1 = self.points[0][1]
        return self.shifted(-(k1 - k1 % 4))


Snake = Union[SnakeA, SnakeB]


def parse_snake(text: str) -> tuple[tuple[int, int], ...]:
    """Parse the ``"i:k,i:k"`` syntax."""
    pts = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            i, k = chunk.split(":")
            pts.append((int(i), int(k)))
        except ValueError:
            raise ValueError(f"malformed snake point {chunk!r}; expected i:k") from None
    if not pts:
        raise ValueError("empty snake")
    return tuple(pts)


def format_snake(s: Snake) -> str:
    return ",".join(f"{i}:{k}" for i, k in s.points)


def snake_to_monomial(s: Snake) -> YMonomial:
    acc: Counter = Counter()
    if isinstance(s, SnakeB):
        for i, k in s.points:
            if i == s.n:
                acc[(i, 1, k - 1)] += 1
                acc[(i, 1, k + 1)] += 1
            else:
                acc[(i, 1, k)] += 1
    else:
        for i, k in s.points:
            if 0 < i < s.m:
                acc[(i, 1, k)] += 1
    return YMonomial.from_map(acc)


def path_sets(s: Snake) -> list[list[Path]]:
    if isinstance(s, SnakeB):
        return [enum_paths_B(s.n, i, k) for i, k in s.points]
    return [enum_paths_A(s.m, i, k) for i, k in s.points]


def _successors(sets: Sequence[Sequence[Path]]) -> list[list[list[int]]]:
    """succ[t][a]: indices b of sets[t+1] with sets[t][a] strictly above sets[t+1][b]."""
    kinds = {type(p) for ps in sets for p in ps}
    if len(kinds) > 1:
        raise ValueError("mixed path types in one tuple enumeration")
    return [[[b for b, q in enumerate(nxt) if strictly_above(p, q)] for p in cur]
            for cur, nxt in zip(sets, sets[1:])]


def _tail_counts(succ, sizes) -> list[list[int]]:
    counts = [[1] * sizes[-1]]
    for t in range(len(succ) - 1, -1, -1):
        below = counts[0]
        counts.insert(0, [sum(below[b] for b in row) for row in succ[t]])
    return counts


def count_nop_tuples(sets: Sequence[Sequence[Path]]) -> int:
    if not sets:
        return 0
    succ = _successors(sets)
    return sum(_tail_counts(succ, [len(ps) for ps in sets])[0])


def enum_nop_tuples(sets: Sequence[Sequence[Path]], max_tuples: int | None = None) -> list[tuple]:
    """All tuples p_1 > p_2 > ... > p_T (strictly above), lexicographic by index."""
    if any(len(ps) == 0 for ps in sets):
        raise ValueError("every path set must be nonempty")
    if not sets:
        return []
    succ = _successors(sets)
    check_limit(sum(_tail_counts(succ, [len(ps) for ps in sets])[0]), max_tuples)
    out: list[tuple] = []
    chosen: list[Path] = []

    def rec(t: int, candidates):
        for b in candidates:
            chosen.append(sets[t][b])
            if t + 1 == len(sets):
                out.append(tuple(chosen))
            else:
                rec(t + 1, succ[t][b])
            chosen.pop()

    rec(0, range(len(sets[0])))
    return out


def nop_character(sets: Sequence[Sequence[Path]], family: Family, rank: int,
                  max_tuples: int | None = None) -> Character:
    """Character summed over NOP tuples by dynamic programming on tails."""
    succ = _successors(sets)
    check_limit(sum(_tail_counts(succ, [len(ps) for ps in sets])[0]), max_tuples)
    wts = [[weight_of_path(p, rank).coeffs for p in ps] for ps in sets]
    tails = [Counter({w: 1}) for w in wts[-1]]
    for t in range(len(sets) - 2, -1, -1):
        new = []
        for a, row in enumerate(succ[t]):
            acc: Counter = Counter()
            wa = wts[t][a]
            for b in row:
                for w, c in tails[b].items():
                    acc[tuple(x + y for x, y in zip(wa, w))] += c
            new.append(acc)
        tails = new
    total: Counter = Counter()
    for c in tails:
        total.update(c)
    return Character(family, rank, total)


def nop_tuples(s: Snake, max_tuples: int | None = None) -> list[tuple]:
    return enum_nop_tuples(path_sets(s), max_tuples)


def qchar_snake(s: Snake, max_tuples: int | None = None) -> list[YMonomial]:
    unit = YMonomial()
    return [product((monomial_of_path(p) for p in tup), unit)
            for tup in nop_tuples(s, max_tuples)]


def _family(s: Snake) -> Family:
    return Family.B if isinstance(s, SnakeB) else Family.A


@lru_cache(maxsize=None)
def _char_normalized(s: Snake, max_tuples: int | None) -> Character:
    return nop_character(path_sets(s), _family(s), s.rank, max_tuples)


def char_snake(s: Snake, max_tuples: int | None = None) -> Character:
    """Usual character; memoized on the translate of ``s`` with k_1 near 0."""
    return _char_normalized(s.normalized(), max_tuples)


def fold_monomial(m: YMonomial, n: int) -> ZMonomial:
    acc: Counter = Counter()
    for (i, sign, k), e in m.exps:
        if 1 <= i <= n:
            acc[(i, sign, k)] += e
        elif n < i <= 2 * n - 1:
            acc[(2 * n - i, -sign, k)] += e
        else:
            raise ValueError(f"index {i} outside 1..{2 * n - 1}")
    return ZMonomial.from_map(n, acc)


def _twisted_rank(s: SnakeA) -> int:
    if s.m % 2:
        raise ValueError("twisted snakes live in type A_{2n-1}: m must be even")
    n = s.m // 2
    for i, k in s.points:
        if i > n:
            raise ValueError(f"point ({i}, {k}) has index above n={n}")
    return n


def twisted_qchar_snake(s: SnakeA, max_tuples: int | None = None) -> list[ZMonomial]:
    n = _twisted_rank(s)
    return [fold_monomial(m, n) for m in qchar_snake(s, max_tuples)]


def twisted_char_snake(s: SnakeA, max_tuples: int | None = None) -> Character:
    """Twisted character read off the folded q-character monomials."""
    n = _twisted_rank(s)
    return Character.from_weights(Family.TW, n,
                                  (z.weight().coeffs for z in twisted_qchar_snake(s, max_tuples)))
