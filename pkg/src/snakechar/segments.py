"""Multisegments in type A_{n-1}: W(l, r), the determinant formula, the
left/right shifting identity and the endpoint-window NOP sets."""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .config import ordered_map
from .lattice import Character, Family, char_sum
from .paths import enum_paths_A, half_char_at_n, paths_between, weight_of_path
from .reports import Report, character_report
from .snakes import SnakeA, char_snake, enum_nop_tuples, nop_character


@dataclass(frozen=True, order=True)
class Segment:
    l: int
    r: int

    def __str__(self) -> str:
        return f"{self.l}-{self.r}"


@dataclass(frozen=True)
class MultiSegment:
    n: int
    segs: tuple[Segment, ...]

    def __post_init__(self):
        object.__setattr__(self, "segs", tuple(s if isinstance(s, Segment) else Segment(*s)
                                               for s in self.segs))
        if self.n < 2:
            raise ValueError("multisegments live in type A_{n-1} with n >= 2")
        if not self.segs:
            raise ValueError("a multisegment needs at least one segment")

    @property
    def ls(self) -> tuple[int, ...]:
        return tuple(s.l for s in self.segs)

    @property
    def rs(self) -> tuple[int, ...]:
        return tuple(s.r for s in self.segs)

    @classmethod
    def from_ends(cls, n: int, ls: Sequence[int], rs: Sequence[int]) -> MultiSegment:
        return cls(n, tuple(Segment(l, r) for l, r in zip(ls, rs)))

    def is_snake(self) -> bool:
        ls, rs = self.ls, self.rs
        return (all(a < b for a, b in zip(ls, ls[1:]))
                and all(a < b for a, b in zip(rs, rs[1:]))
                and all(0 <= r - l <= self.n for l, r in zip(ls, rs)))

    def to_snake(self) -> SnakeA:
        if not self.is_snake():
            raise ValueError(f"multisegment {self} is not a snake")
        return SnakeA(self.n, tuple((s.r - s.l, s.r + s.l) for s in self.segs))

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.segs)


_SEG = re.compile(r"^\s*(-?\d+)\s*-\s*(-?\d+)\s*$")


def parse_segments(text: str) -> tuple[Segment, ...]:
    """Parse ``"l-r,l-r"``; negative ends are written as ``-2--1``."""
    segs = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        m = _SEG.match(chunk)
        if not m:
            raise ValueError(f"malformed segment {chunk!r}; expected l-r")
        segs.append(Segment(int(m.group(1)), int(m.group(2))))
    if not segs:
        raise ValueError("empty multisegment")
    return tuple(segs)


@lru_cache(maxsize=None)
def seg_char(n: int, l: int, r: int) -> Character:
    """Character of the segment module [l, r]; zero outside 0 <= r-l <= n."""
    if not 0 <= r - l <= n:
        return Character(Family.A, n - 1)
    return nop_character([enum_paths_A(n, r - l, r + l)], Family.A, n - 1)


def seg_char_shift_check(n: int, l: int, r: int, m: int) -> bool:
    return seg_char(n, l, r) == seg_char(n, l + m, r + m)


def _perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inv % 2 else 1


def det_char(ms: MultiSegment) -> Character:
    """Leibniz expansion of det(W(l_s, r_t)) in the character ring."""
    n, ls, rs = ms.n, ms.ls, ms.rs
    T = len(ls)
    acc: Counter = Counter()
    for perm in itertools.permutations(range(T)):
        factors = [seg_char(n, ls[t], rs[perm[t]]) for t in range(T)]
        if not all(factors):
            continue
        term = factors[0]
        for f in factors[1:]:
            term = term * f
        sign = _perm_sign(perm)
        for key, mult in term:
            acc[key] += sign * mult
    return Character(Family.A, n - 1, acc)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative integers summing to ``total``, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def left_shifts(ms: MultiSegment, M: int) -> list[MultiSegment]:
    """Snakes [l', r] with l <= l' < l[1] and |l' - l| = M."""
    ls, rs = ms.ls, ms.rs
    out = []
    for a in compositions(M, len(ls)):
        lp = tuple(l + d for l, d in zip(ls, a))
        if any(lp[t] >= ls[t + 1] for t in range(len(ls) - 1)):
            continue
        cand = MultiSegment.from_ends(ms.n, lp, rs)
        if cand.is_snake():
            out.append(cand)
    return out


def right_shifts(ms: MultiSegment, M: int) -> list[MultiSegment]:
    """Snakes [l, r'] with r[-1] < r' <= r and |r - r'| = M."""
    ls, rs = ms.ls, ms.rs
    out = []
    for a in compositions(M, len(rs)):
        rp = tuple(r - d for r, d in zip(rs, a))
        if any(rp[t] <= rs[t - 1] for t in range(1, len(rs))):
            continue
        cand = MultiSegment.from_ends(ms.n, ls, rp)
        if cand.is_snake():
            out.append(cand)
    return out


def nonsnake_left_shifts(ms: MultiSegment, M: int) -> list[MultiSegment]:
    """Window members [l', r] of the left sum that fail to be snakes."""
    ls, rs = ms.ls, ms.rs
    out = []
    for a in compositions(M, len(ls)):
        lp = tuple(l + d for l, d in zip(ls, a))
        if any(lp[t] >= ls[t + 1] for t in range(len(ls) - 1)):
            continue
        cand = MultiSegment.from_ends(ms.n, lp, rs)
        if not cand.is_snake():
            out.append(cand)
    return out


def identity_sides(ms: MultiSegment, M: int, max_tuples: int | None = None,
                   threads: int = 1) -> tuple[Character, Character]:
    if not ms.is_snake():
        raise ValueError(f"multisegment {ms} is not a snake")
    if M < 0:
        raise ValueError("M must be nonnegative")
    rank = ms.n - 1

    def char_of(x: MultiSegment) -> Character:
        return char_snake(x.to_snake(), max_tuples)

    lhs = char_sum(ordered_map(char_of, left_shifts(ms, M), threads), Family.A, rank)
    rhs = char_sum(ordered_map(char_of, right_shifts(ms, M), threads), Family.A, rank)
    return lhs, rhs


def verify_identity(ms: MultiSegment, M: int, max_tuples: int | None = None,
                    threads: int = 1) -> Report:
    lhs, rhs = identity_sides(ms, M, max_tuples, threads)
    return character_report("identity", {"n": ms.n, "segments": str(ms), "M": M}, lhs, rhs)


def verify_determinant(ms: MultiSegment, max_tuples: int | None = None) -> Report:
    lhs = det_char(ms)
    rhs = char_snake(ms.to_snake(), max_tuples)
    return character_report("determinant", {"n": ms.n, "segments": str(ms)}, lhs, rhs)


@dataclass(frozen=True)
class NopSetSpec:
    """Anchors of the A-set (left ends free) or B-set (right ends free)."""

    n: int
    x0: tuple[int, ...]
    xn: tuple[int, ...]
    M: int
    side: str = "A"

    def __post_init__(self):
        object.__setattr__(self, "x0", tuple(int(v) for v in self.x0))
        object.__setattr__(self, "xn", tuple(int(v) for v in self.xn))
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.side not in ("A", "B"):
            raise ValueError(f"side must be 'A' or 'B', got {self.side!r}")
        if not self.x0 or len(self.x0) != len(self.xn):
            raise ValueError("x0 and xn must be nonempty and of equal length")
        if self.M < 0:
            raise ValueError("M must be nonnegative")
        for v in (self.x0, self.xn):
            if any(a >= b for a, b in zip(v, v[1:])):
                raise ValueError(f"anchors must be strictly increasing: {list(v)}")
        for a, b in zip(self.x0, self.xn):
            if not -self.n <= b - a <= self.n:
                raise ValueError(f"anchors {a} and {b} are more than n={self.n} apart")
            if (b - a - self.n) % 2:
                raise ValueError(f"anchors {a} and {b} have the wrong parity for n={self.n}")

    @property
    def T(self) -> int:
        return len(self.x0)

    def with_side(self, side: str) -> NopSetSpec:
        return NopSetSpec(self.n, self.x0, self.xn, self.M, side)

    def to_json(self) -> dict:
        return {"n": self.n, "x0": list(self.x0), "xn": list(self.xn), "M": self.M, "side": self.side}

    @classmethod
    def from_json(cls, data) -> NopSetSpec:
        return cls(int(data["n"]), tuple(data["x0"]), tuple(data["xn"]), int(data["M"]),
                   data.get("side", "A"))


def _window_choices(spec: NopSetSpec) -> list[list[tuple[int, int]]]:
    """Per t, the admissible (free endpoint, displacement) pairs."""
    n, x0, xn, M, T = spec.n, spec.x0, spec.xn, spec.M, spec.T
    out = []
    for t in range(T):
        opts = []
        for d in range(2 * M + 1):
            if spec.side == "A":
                y0, yn = x0[t] - d, xn[t]
                if t > 0 and y0 <= x0[t - 1]:
                    break
            else:
                y0, yn = x0[t], xn[t] + d
                if t + 1 < T and yn >= xn[t + 1]:
                    break
            if abs(y0 - yn) <= n and (y0 - yn - n) % 2 == 0:
                opts.append((y0, yn, d))
        out.append(opts)
    return out


def build_nop_set(spec: NopSetSpec, max_tuples: int | None = None) -> list[tuple]:
    out: list[tuple] = []
    for combo in itertools.product(*_window_choices(spec)):
        if sum(d for _, _, d in combo) != 2 * spec.M:
            continue
        sets = [paths_between(spec.n, y0, yn) for y0, yn, _ in combo]
        out.extend(enum_nop_tuples(sets, max_tuples))
    return out


def tuple_statistic(tup: Sequence, rank: int) -> tuple[tuple[int, ...], int]:
    """(summed weight, summed half-character at n) of a path tuple."""
    w = [0] * rank
    half = 0
    for p in tup:
        for j, c in enumerate(weight_of_path(p, rank).coeffs):
            w[j] += c
        half += half_char_at_n(p)
    return tuple(w), half


def ab_statistics(spec: NopSetSpec, max_tuples: int | None = None) -> Counter:
    return Counter(tuple_statistic(tup, spec.n - 1) for tup in build_nop_set(spec, max_tuples))


def verify_ab(spec: NopSetSpec, max_tuples: int | None = None) -> Report:
    a = ab_statistics(spec.with_side("A"), max_tuples)
    b = ab_statistics(spec.with_side("B"), max_tuples)
    diff = Counter(a)
    diff.subtract(b)
    difference = [[list(w), h, v] for (w, h), v in sorted(diff.items()) if v]
    params = spec.with_side("A").to_json()
    del params["side"]
    return Report("ab", params, ok=not difference, equal=not difference,
                  lhs_mass=sum(a.values()), rhs_mass=sum(b.values()), difference=difference)


def ab_statistics_equal(spec: NopSetSpec, max_tuples: int | None = None) -> bool:
    return verify_ab(spec, max_tuples).ok
