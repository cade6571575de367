"""Weight lattices, the character ring and the maps between them.

Weights are integer vectors in a fundamental-weight basis.  Three families
occur: ``A`` (rank 2n-1 or n-1), ``B`` (rank n) and ``TW``, the lattice of
the twisted dual, whose basis vectors are indexed by the orbits 1..n of the
diagram involution i <-> 2n-i.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Mapping


class Family(str, Enum):
    A = "A"
    B = "B"
    TW = "TW"


@dataclass(frozen=True, order=True)
class Weight:
    family: Family
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("weight rank must be at least 1")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, family: Family, rank: int) -> Weight:
        return cls(Family(family), (0,) * rank)

    @classmethod
    def fundamental(cls, family: Family, rank: int, i: int) -> Weight:
        c = [0] * rank
        c[i - 1] = 1
        return cls(Family(family), tuple(c))

    def __add__(self, other: Weight) -> Weight:
        _same_shape(self.family, self.rank, other.family, other.rank)
        return Weight(self.family, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Weight:
        return Weight(self.family, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def to_json(self) -> dict:
        return {"family": self.family.value, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> Weight:
        return cls(Family(data["family"]), tuple(int(c) for c in data["coeffs"]))


def _same_shape(f1, r1, f2, r2):
    if f1 != f2 or r1 != r2:
        raise ValueError(f"family mismatch: {f1.value}{r1} vs {f2.value}{r2}")


class Character:
    """Sparse element of the group ring Z[P], keyed by coefficient tuples.

    Instances are immutable; zero multiplicities are never stored.
    """

    __slots__ = ("family", "rank", "_terms", "_hash")

    def __init__(self, family: Family, rank: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if rank < 1:
            raise ValueError("character rank must be at least 1")
        self.family = Family(family)
        self.rank = rank
        clean = {}
        for key, mult in (terms or {}).items():
            if len(key) != rank:
                raise ValueError(f"weight {key} does not have rank {rank}")
            if mult:
                clean[tuple(key)] = mult
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def from_weights(cls, family: Family, rank: int, weights: Iterable[tuple[int, ...]]) -> Character:
        """Character with one unit of multiplicity per listed weight."""
        return cls(family, rank, Counter(weights))

    @classmethod
    def unit(cls, family: Family, rank: int) -> Character:
        return cls(family, rank, {(0,) * rank: 1})

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> int:
        if isinstance(key, Weight):
            key = key.coeffs
        return self._terms.get(tuple(key), 0)

    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def weights(self) -> list[Weight]:
        return [Weight(self.family, k) for k in self._terms]

    def mass(self) -> int:
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (self.family, self.rank, self._terms) == (other.family, other.rank, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.family, self.rank, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{list(k)}: {v}" for k, v in self._terms.items())
        return f"Character({self.family.value}{self.rank}, {{{body}}})"

    def __add__(self, other: Character) -> Character:
        return char_add(self, other)

    def __neg__(self) -> Character:
        return Character(self.family, self.rank, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Character) -> Character:
        return char_add(self, -other)

    def __mul__(self, other: Character) -> Character:
        return char_mul(self, other)

    def scale(self, c: int) -> Character:
        return Character(self.family, self.rank, {k: c * v for k, v in self._terms.items()})

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "rank": self.rank,
            "terms": [[list(k), v] for k, v in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Character:
        terms = data["terms"]
        rank = data.get("rank") or (len(terms[0][0]) if terms else None)
        if rank is None:
            raise ValueError("empty character JSON needs an explicit rank")
        return cls(Family(data["family"]), int(rank), {tuple(k): int(v) for k, v in terms})


def char_add(a: Character, b: Character) -> Character:
    _same_shape(a.family, a.rank, b.family, b.rank)
    out = dict(a._terms)
    for k, v in b._terms.items():
        out[k] = out.get(k, 0) + v
    return Character(a.family, a.rank, out)


def char_mul(a: Character, b: Character) -> Character:
    _same_shape(a.family, a.rank, b.family, b.rank)
    out: dict[tuple[int, ...], int] = {}
    for u, mu in a._terms.items():
        for v, mv in b._terms.items():
            key = tuple(x + y for x, y in zip(u, v))
            out[key] = out.get(key, 0) + mu * mv
    return Character(a.family, a.rank, out)


def char_sum(chars: Iterable[Character], family: Family, rank: int) -> Character:
    """Sum of many characters without building the intermediates."""
    acc: Counter = Counter()
    for c in chars:
        _same_shape(family, rank, c.family, c.rank)
        acc.update(c._terms)
    return Character(family, rank, acc)


def char_dominates(big: Character, small: Character) -> bool:
    """True when ``big - small`` has no negative multiplicity."""
    if big.family != small.family:
        raise ValueError(f"family mismatch: {big.family.value} vs {small.family.value}")
    _same_shape(big.family, big.rank, small.family, small.rank)
    keys = set(big._terms) | set(small._terms)
    return all(big[k] >= small[k] for k in keys)


# weight maps

def fold_weight(w: Weight) -> Weight:
    """Fold an A_{2n-1} weight onto the twisted lattice: i and 2n-i merge."""
    if w.family is not Family.A:
        raise ValueError("folding expects a type A weight")
    if w.rank % 2 == 0:
        raise ValueError(f"folding needs odd rank 2n-1, got {w.rank}")
    n = (w.rank + 1) // 2
    k = w.coeffs
    out = tuple(k[i - 1] + k[2 * n - i - 1] for i in range(1, n)) + (k[n - 1],)
    return Weight(Family.TW, out)


def in_p_prime(w: Weight) -> bool:
    """Membership in the sublattice where the short-node coefficient is even."""
    if w.family is not Family.B:
        raise ValueError("P' membership is defined for type B weights")
    return w.coeffs[-1] % 2 == 0


def pi_weight(w: Weight) -> Weight:
    if not in_p_prime(w):
        raise ValueError(f"weight {list(w.coeffs)} has odd last coefficient; outside P'")
    return Weight(Family.TW, w.coeffs[:-1] + (w.coeffs[-1] // 2,))


def in_dual_p_prime(w: Weight) -> bool:
    if w.family is not Family.TW:
        raise ValueError("expected a twisted weight")
    return all(c % 2 == 0 for c in w.coeffs[:-1])


def lpi_weight(w: Weight) -> Weight:
    """Twisted weight back to type B; weights off the sublattice go to zero."""
    if not in_dual_p_prime(w):
        return Weight.zero(Family.B, w.rank)
    return Weight(Family.B, tuple(c // 2 for c in w.coeffs[:-1]) + (w.coeffs[-1],))


_TARGETS: dict[Callable, Callable[[Character], tuple[Family, int]]] = {
    fold_weight: lambda c: (Family.TW, (c.rank + 1) // 2),
    pi_weight: lambda c: (Family.TW, c.rank),
    lpi_weight: lambda c: (Family.B, c.rank),
}


def map_char(f: Callable[[Weight], Weight], c: Character,
             target: tuple[Family, int] | None = None) -> Character:
    """Push a character forward along a weight map, adding colliding images.

    ``target`` gives the output family and rank; it is inferred for the
    built-in maps and from the first image otherwise.
    """
    if target is None and f in _TARGETS:
        target = _TARGETS[f](c)
    out: Counter = Counter()
    for key, mult in c._terms.items():
        img = f(Weight(c.family, key))
        if target is None:
            target = (img.family, img.rank)
        out[img.coeffs] += mult
    if target is None:
        raise ValueError("cannot infer the target lattice of an empty character")
    return Character(target[0], target[1], out)


def fold_char(c: Character) -> Character:
    return map_char(fold_weight, c)


def pi_char(c: Character) -> Character:
    return map_char(pi_weight, c)


def lpi_char(c: Character) -> Character:
    return map_char(lpi_weight, c)
