"""Lattice paths of types A and B, their corners, monomials and weights.

Type A paths are +-1 step sequences.  Type B paths have two branches of
+-2 steps whose last step has size 1+eps, so the terminal heights are
stored exactly as ``EpsInt`` values a + b*eps.
"""
from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from .lattice import Family, Weight
from .monomials import YMonomial


def floor_div_eps(a: int, b: int, d: int) -> int:
    """Floor of (a + b*eps) / d for d >= 1 and |b|*eps < 1."""
    q, r = divmod(a, d)
    if r == 0 and b < 0:
        return q - 1
    return q


@functools.total_ordering
class EpsInt:
    """Exact a + b*eps with b in {-1, 0, 1} and 0 < eps < 1/2."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        if b not in (-1, 0, 1):
            raise ValueError(f"eps coefficient must be -1, 0 or 1, got {b}")
        self.a = a
        self.b = b

    @staticmethod
    def _pair(x) -> tuple[int, int]:
        if isinstance(x, EpsInt):
            return (x.a, x.b)
        if isinstance(x, int):
            return (x, 0)
        raise TypeError(f"cannot compare EpsInt with {type(x).__name__}")

    def __eq__(self, other) -> bool:
        try:
            return (self.a, self.b) == self._pair(other)
        except TypeError:
            return NotImplemented

    def __lt__(self, other) -> bool:
        return (self.a, self.b) < self._pair(other)

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __repr__(self) -> str:
        if self.b == 0:
            return f"EpsInt({self.a})"
        return f"EpsInt({self.a}{'+' if self.b > 0 else '-'}eps)"

    def __add__(self, c: int) -> EpsInt:
        return EpsInt(self.a + c, self.b)

    __radd__ = __add__

    def floor_half(self, c: int = 0) -> int:
        """Floor of (self + c) / 2."""
        return floor_div_eps(self.a + c, self.b, 2)

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    @classmethod
    def from_json(cls, data) -> EpsInt:
        if isinstance(data, int):
            return cls(data)
        a, b = data
        return cls(int(a), int(b))


@dataclass(frozen=True, order=True)
class Corner:
    j: int
    level: int


@dataclass(frozen=True)
class PathA:
    """Path through the points (offset + r, ys[r]) for r = 0..m."""

    m: int
    i: int
    k: int
    ys: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        ys = self.ys
        if self.m < 1 or len(ys) != self.m + 1:
            raise ValueError(f"type A path with m={self.m} needs {self.m + 1} heights, got {len(ys)}")
        if not 0 <= self.i <= self.m:
            raise ValueError(f"index i={self.i} outside 0..{self.m}")
        if ys[0] != self.i + self.k or ys[-1] != self.m - self.i + self.k:
            raise ValueError(f"endpoints {ys[0]}, {ys[-1]} do not match (i, k) = ({self.i}, {self.k})")
        if any(abs(b - a) != 1 for a, b in zip(ys, ys[1:])):
            raise ValueError(f"type A steps must be +-1: {list(ys)}")

    @classmethod
    def from_ys(cls, ys: Sequence[int], offset: int = 0) -> PathA:
        ys = tuple(ys)
        m = len(ys) - 1
        i2, k2 = ys[0] - ys[-1] + m, ys[0] + ys[-1] - m
        if i2 % 2:
            raise ValueError(f"heights {list(ys)} cannot form a +-1 path")
        return cls(m, i2 // 2, k2 // 2, ys, offset)

    def to_json(self) -> dict:
        out = {"m": self.m, "i": self.i, "k": self.k, "ys": list(self.ys)}
        if self.offset:
            out["offset"] = self.offset
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> PathA:
        return cls(int(data["m"]), int(data["i"]), int(data["k"]),
                   tuple(int(y) for y in data["ys"]), int(data.get("offset", 0)))


def in_xb(n: int, i: int, k: int) -> bool:
    return (k - 2 * n - 2 * i - 2) % 4 == 0


def in_xa(n: int, i: int, k: int) -> bool:
    return (k - n - i - 1) % 2 == 0


@dataclass(frozen=True)
class PathB:
    """Type B path: left branch ys and right branch zs, each indexed 0..n.

    Entries 0..n-1 are even integers; entry n is an ``EpsInt``.
    """

    n: int
    i: int
    k: int
    ys: tuple
    zs: tuple

    def __post_init__(self):
        n, i, k = self.n, self.i, self.k
        if n < 2:
            raise ValueError("type B paths need n >= 2")
        if not 1 <= i <= n:
            raise ValueError(f"index i={i} outside 1..{n}")
        if not in_xb(n, i, k):
            raise ValueError(f"(i, k) = ({i}, {k}) violates k = 2n+2i+2 mod 4")
        if self.ys[0] != 2 * i + k or self.zs[0] != 4 * n - 2 * i + k - 2:
            raise ValueError("type B start points do not match (i, k)")
        for br in (self.ys, self.zs):
            if len(br) != n + 1:
                raise ValueError(f"type B branches need {n + 1} entries")
            if any(not isinstance(v, int) or isinstance(v, bool) for v in br[:n]):
                raise ValueError("inner branch heights must be integers")
            if any(abs(b - a) != 2 for a, b in zip(br[: n - 1], br[1:n])):
                raise ValueError(f"inner branch steps must be +-2: {br}")
            last = br[n]
            if not isinstance(last, EpsInt) or last.b == 0:
                raise ValueError("terminal height must carry a nonzero eps part")
            if (last.a - br[n - 1], last.b) not in ((1, 1), (-1, -1)):
                raise ValueError(f"terminal step must be +-(1+eps): {br}")
        if not self.ys[n] > self.zs[n]:
            raise ValueError("left terminal must lie above the right terminal (y_n > z_n)")

    def figure_points(self) -> list[tuple[int, EpsInt]]:
        """Points in drawing order: y_0..y_n then z_n..z_0."""
        n = self.n
        pts = [(2 * j, EpsInt(self.ys[j])) for j in range(n)]
        pts.append((2 * n - 1, self.ys[n]))
        pts.append((2 * n - 1, self.zs[n]))
        pts.extend((4 * n - 2 - 2 * j, EpsInt(self.zs[j])) for j in range(n - 1, -1, -1))
        return pts

    def to_json(self) -> dict:
        def enc(br):
            return list(br[: self.n]) + [br[self.n].to_json()]

        return {"n": self.n, "i": self.i, "k": self.k, "ys": enc(self.ys), "zs": enc(self.zs)}

    @classmethod
    def from_json(cls, data: Mapping) -> PathB:
        n = int(data["n"])

        def dec(br):
            return tuple(int(v) for v in br[:n]) + (EpsInt.from_json(br[n]),)

        return cls(n, int(data["i"]), int(data["k"]), dec(data["ys"]), dec(data["zs"]))


Path = Union[PathA, PathB]


def _pm_sequences(start: int, steps: int, step: int = 1, end: int | None = None) -> Iterator[tuple[int, ...]]:
    """All sequences of ``steps`` moves of size +-step, lexicographic order."""
    def rec(prefix: list[int], left: int):
        if left == 0:
            if end is None or prefix[-1] == end:
                yield tuple(prefix)
            return
        cur = prefix[-1]
        for nxt in (cur - step, cur + step):
            if end is not None and abs(end - nxt) > step * (left - 1):
                continue
            prefix.append(nxt)
            yield from rec(prefix, left - 1)
            prefix.pop()

    yield from rec([start], steps)


def enum_paths_A(m: int, i: int, k: int, offset: int = 0) -> list[PathA]:
    if m < 1:
        raise ValueError("need at least one column")
    if not 0 <= i <= m:
        raise ValueError(f"index i={i} outside 0..{m}")
    return [PathA(m, i, k, ys, offset) for ys in _pm_sequences(i + k, m, 1, m - i + k)]


def paths_between(m: int, y0: int, ym: int, offset: int = 0) -> list[PathA]:
    """All type A paths with m columns from height y0 to height ym."""
    i2, k2 = y0 - ym + m, y0 + ym - m
    if i2 % 2 or not 0 <= i2 <= 2 * m:
        return []
    return enum_paths_A(m, i2 // 2, k2 // 2, offset)


def _b_branches(n: int, start: int) -> list[tuple]:
    out = []
    for inner in _pm_sequences(start, n - 1, 2):
        last = inner[-1]
        out.append(inner + (EpsInt(last - 1, -1),))
        out.append(inner + (EpsInt(last + 1, 1),))
    return out


def enum_paths_B(n: int, i: int, k: int) -> list[PathB]:
    if n < 2:
        raise ValueError("type B needs n >= 2")
    if not 1 <= i <= n:
        raise ValueError(f"index i={i} outside 1..{n}")
    if not in_xb(n, i, k):
        raise ValueError(f"(i, k) = ({i}, {k}) violates k = 2n+2i+2 mod 4")
    lefts = _b_branches(n, 2 * i + k)
    rights = _b_branches(n, 4 * n - 2 * i + k - 2)
    return [PathB(n, i, k, ys, zs) for ys in lefts for zs in rights if ys[n] > zs[n]]


def tau(n: int, j: int, level: int) -> tuple[int, int]:
    """Figure coordinates of a point of the type B index set."""
    if j == n:
        if level % 2 == 0:
            raise ValueError(f"(j, l) = ({j}, {level}): the short node needs odd l")
        return (2 * n - 1, level)
    if 0 <= j < n and level % 2 == 0:
        if (level - 2 * n - 2 * j - 2) % 4 == 0:
            return (2 * j, level)
        return (4 * n - 2 - 2 * j, level)
    raise ValueError(f"(j, l) = ({j}, {level}) is not a valid type B point for n={n}")


def tau_inv(n: int, x: int, y: int) -> tuple[int, int]:
    if x == 2 * n - 1:
        if y % 2 == 0:
            raise ValueError(f"({x}, {y}) is not in the image: needs odd height")
        return (n, y)
    if x % 2 == 0 and 0 <= x <= 2 * n - 2:
        j = x // 2
        if (y - 2 * n - 2 * j - 2) % 4 == 0:
            return (j, y)
    elif x % 2 == 0 and 2 * n <= x <= 4 * n - 2:
        j = (4 * n - 2 - x) // 2
        if (y - 2 * n - 2 * j) % 4 == 0:
            return (j, y)
    raise ValueError(f"({x}, {y}) is not in the image of tau for n={n}")


def corners_A(p: PathA) -> tuple[list[Corner], list[Corner]]:
    """Upper corners (local minima) and lower corners (local maxima)."""
    ys = p.ys
    plus, minus = [], []
    for r in range(1, p.m):
        if ys[r - 1] == ys[r + 1]:
            if ys[r] < ys[r - 1]:
                plus.append(Corner(p.offset + r, ys[r]))
            else:
                minus.append(Corner(p.offset + r, ys[r]))
    return plus, minus


def corners_B(p: PathB) -> tuple[list[Corner], list[Corner]]:
    n = p.n
    pts = p.figure_points()
    plus, minus = [], []
    for r in range(1, len(pts) - 1):
        x, v = pts[r]
        if x == 2 * n - 1:
            continue
        before, after = pts[r - 1][1], pts[r + 1][1]
        if before > v < after:
            plus.append(Corner(*tau_inv(n, x, v.a)))
        elif before < v > after:
            minus.append(Corner(*tau_inv(n, x, v.a)))
    terminals = {p.ys[n], p.zs[n]}
    for v in terminals:
        if v.b > 0 and EpsInt(v.a, -1) not in terminals:
            minus.append(Corner(n, v.a))
        elif v.b < 0 and EpsInt(v.a, 1) not in terminals:
            plus.append(Corner(n, v.a))
    return sorted(plus), sorted(minus)


def corners(p: Path) -> tuple[list[Corner], list[Corner]]:
    return corners_B(p) if isinstance(p, PathB) else corners_A(p)


def monomial_of_path(p: Path) -> YMonomial:
    plus, minus = corners(p)
    acc: Counter = Counter()
    for c in plus:
        acc[(c.j, 1, c.level)] += 1
    for c in minus:
        acc[(c.j, 1, c.level)] -= 1
    return YMonomial.from_map(acc)


def path_rank(p: Path) -> int:
    return p.n if isinstance(p, PathB) else p.offset + p.m - 1


def weight_of_path(p: Path, rank: int | None = None) -> Weight:
    """Sum of fundamental weights over upper corners minus lower corners."""
    rank = rank or path_rank(p)
    family = Family.B if isinstance(p, PathB) else Family.A
    c = [0] * rank
    plus, minus = corners(p)
    for cn in plus:
        c[cn.j - 1] += 1
    for cn in minus:
        c[cn.j - 1] -= 1
    return Weight(family, tuple(c))


def half_char_at_n(p: PathA) -> int:
    return 1 if p.ys[-1] == p.ys[-2] - 1 else -1


def strictly_above(p: Path, q: Path) -> bool:
    """p lies strictly above q: smaller heights at every shared abscissa."""
    if isinstance(p, PathA) and isinstance(q, PathA):
        if (p.m, p.offset) != (q.m, q.offset):
            raise ValueError("type A paths must share their columns")
        return all(a < b for a, b in zip(p.ys, q.ys))
    if isinstance(p, PathB) and isinstance(q, PathB):
        if p.n != q.n:
            raise ValueError("type B paths must have the same rank")
        n = p.n
        return (all(p.ys[j] < q.ys[j] for j in range(n))
                and all(p.zs[j] < q.zs[j] for j in range(n))
                and p.ys[n] < q.zs[n])
    raise ValueError("cannot compare paths of different types")


def path_from_json(data: Mapping) -> Path:
    return PathB.from_json(data) if "zs" in data else PathA.from_json(data)
