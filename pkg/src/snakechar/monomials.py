"""Laurent monomials in the variables Y_{i, ±q^k} and Z_{i, ±q^k}.

A key ``(i, sign, k)`` stands for the variable with index ``i`` and
spectral parameter ``sign * q**k``; the value is the exponent.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .lattice import Family, Weight

Key = tuple[int, int, int]


def _canonical(exps: Mapping[Key, int]) -> tuple[tuple[Key, int], ...]:
    for (_, sign, _) in exps:
        if sign not in (1, -1):
            raise ValueError(f"spectral sign must be +1 or -1, got {sign}")
    return tuple(sorted((k, e) for k, e in exps.items() if e))


@dataclass(frozen=True)
class YMonomial:
    exps: tuple[tuple[Key, int], ...] = ()

    @classmethod
    def from_map(cls, exps: Mapping[Key, int]) -> YMonomial:
        return cls(_canonical(exps))

    @classmethod
    def var(cls, i: int, k: int, sign: int = 1, exp: int = 1) -> YMonomial:
        return cls.from_map({(i, sign, k): exp})

    def as_map(self) -> dict[Key, int]:
        return dict(self.exps)

    def __mul__(self, other: YMonomial) -> YMonomial:
        if type(other) is not type(self):
            return NotImplemented
        acc = Counter(self.as_map())
        acc.update(other.as_map())
        return type(self).from_map(acc)

    def inverse(self) -> YMonomial:
        return type(self).from_map({k: -e for k, e in self.exps})

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self.exps)

    def weight(self, family: Family, rank: int) -> Weight:
        c = [0] * rank
        for (i, _, _), e in self.exps:
            c[i - 1] += e
        return Weight(Family(family), tuple(c))

    def to_json(self) -> list:
        return [[i, s, k, e] for (i, s, k), e in self.exps]

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(_fmt("Y", key, e) for key, e in self.exps)


@dataclass(frozen=True)
class ZMonomial:
    """Monomial over the twisted variables Z_1..Z_n.

    Z_{n, a} and Z_{n, -a} are the same variable, so index-n keys are
    stored with sign +1.
    """

    n: int
    exps: tuple[tuple[Key, int], ...] = ()

    @classmethod
    def from_map(cls, n: int, exps: Mapping[Key, int]) -> ZMonomial:
        acc: Counter = Counter()
        for (i, sign, k), e in exps.items():
            if not 1 <= i <= n:
                raise ValueError(f"twisted index {i} outside 1..{n}")
            acc[(i, 1 if i == n else sign, k)] += e
        return cls(n, _canonical(acc))

    @classmethod
    def var(cls, n: int, i: int, k: int, sign: int = 1, exp: int = 1) -> ZMonomial:
        return cls.from_map(n, {(i, sign, k): exp})

    @classmethod
    def one(cls, n: int) -> ZMonomial:
        return cls(n, ())

    def as_map(self) -> dict[Key, int]:
        return dict(self.exps)

    def __mul__(self, other: ZMonomial) -> ZMonomial:
        if not isinstance(other, ZMonomial) or other.n != self.n:
            return NotImplemented
        acc = Counter(self.as_map())
        acc.update(other.as_map())
        return ZMonomial.from_map(self.n, acc)

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self.exps)

    def weight(self) -> Weight:
        c = [0] * self.n
        for (i, _, _), e in self.exps:
            c[i - 1] += e
        return Weight(Family.TW, tuple(c))

    def to_json(self) -> list:
        return [[i, s, k, e] for (i, s, k), e in self.exps]

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(_fmt("Z", key, e) for key, e in self.exps)


def _fmt(letter: str, key: Key, e: int) -> str:
    i, s, k = key
    base = f"{letter}{i}({'-' if s < 0 else ''}q^{k})"
    return base if e == 1 else f"{base}^{e}"


def product(monomials: Iterable, unit):
    acc = Counter(unit.as_map())
    for m in monomials:
        acc.update(m.as_map())
    if isinstance(unit, ZMonomial):
        return ZMonomial.from_map(unit.n, acc)
    return YMonomial.from_map(acc)
