"""Uniform, JSON-serializable results for the identity checkers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .lattice import Character


@dataclass(frozen=True)
class Report:
    theorem: str
    params: dict
    ok: bool
    equal: bool
    lhs_mass: int
    rhs_mass: int
    difference: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    lhs: Character | None = field(default=None, compare=False)
    rhs: Character | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "ok": self.ok,
            "equal": self.equal,
            "lhs_mass": self.lhs_mass,
            "rhs_mass": self.rhs_mass,
            "difference": self.difference,
        }
        out.update(self.extra)
        return out


def character_report(theorem: str, params: dict, lhs: Character, rhs: Character,
                     ok: bool | None = None, **extra) -> Report:
    """Compare two characters; ``ok`` defaults to exact equality."""
    diff = lhs - rhs
    equal = not diff
    return Report(
        theorem=theorem,
        params=params,
        ok=equal if ok is None else ok,
        equal=equal,
        lhs_mass=lhs.mass(),
        rhs_mass=rhs.mass(),
        difference=[[list(k), v] for k, v in diff],
        extra=extra,
        lhs=lhs,
        rhs=rhs,
    )
