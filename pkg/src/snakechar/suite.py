"""Parameter lattices and batch runners for the full verification suite."""
from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from .config import ordered_map
from .duality import (branch_tuples, verify_branching, verify_corner_transport,
                      verify_dominance, verify_g_paths, verify_gap0, verify_gkr)
from .paths import enum_paths_A, in_xa, in_xb
from .reports import Report
from .segments import (MultiSegment, NopSetSpec, build_nop_set, verify_ab, verify_determinant,
                       verify_identity)
from .snakes import SnakeB


def segment_snakes(n: int, max_T: int = 3, lo: int = 0, hi: int = 12) -> Iterator[MultiSegment]:
    """All type A_{n-1} snakes with every end in [lo, hi]."""
    for T in range(1, max_T + 1):
        for ls in itertools.combinations(range(lo, hi + 1), T):
            ranges = [range(l, min(l + n, hi) + 1) for l in ls]
            for rs in itertools.product(*ranges):
                if all(a < b for a, b in zip(rs, rs[1:])):
                    yield MultiSegment.from_ends(n, ls, rs)


def b_snakes(n: int, max_T: int = 2, span: int = 24) -> Iterator[SnakeB]:
    """All shortened B_n snakes with every k in [0, span]."""
    pts = [(i, k) for k in range(span + 1) for i in range(1, n + 1) if in_xb(n, i, k)]
    pts.sort(key=lambda p: (p[1], p[0]))

    def extend(chain):
        yield SnakeB(n, tuple(chain))
        if len(chain) == max_T:
            return
        i0, k0 = chain[-1]
        for i, k in pts:
            if k - k0 >= 2 * abs(i - i0) + 4:
                yield from extend(chain + [(i, k)])

    for p in pts:
        yield from extend([p])


def kr_snakes(n: int, max_T: int = 2) -> Iterator[SnakeB]:
    """Equally spaced single-index snakes (i, k0), (i, k0+4), ..."""
    for i in range(1, n + 1):
        k0 = 4 if in_xb(n, i, 4) else 2
        for T in range(1, max_T + 1):
            yield SnakeB(n, tuple((i, k0 + 4 * t) for t in range(T)))


def random_nop_specs(count: int, seed: int, max_n: int = 4, max_T: int = 3,
                     max_M: int = 2) -> list[NopSetSpec]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        T = rng.randint(1, max_T)
        M = rng.randint(0, max_M)
        x0 = [rng.randint(-4, 4)]
        for _ in range(T - 1):
            x0.append(x0[-1] + rng.randint(1, 4))
        xn = [a + rng.choice(range(-n, n + 1, 2)) for a in x0]
        try:
            spec = NopSetSpec(n, tuple(x0), tuple(xn), M)
        except ValueError:
            continue
        # skip specs where both sides are empty: the comparison would be vacuous
        if build_nop_set(spec) or build_nop_set(spec.with_side("B")):
            out.append(spec)
    return out


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    checked: int
    seconds: float
    digest: str
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.checked} checks, {self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "ok": self.ok,
                "checked": self.checked, "digest": self.digest, "failures": self.failures[:20]}


def _digest(payloads: list) -> str:
    h = hashlib.sha256()
    for p in payloads:
        h.update(json.dumps(p, sort_keys=True, separators=(",", ":")).encode())
    return h.hexdigest()


def _run(number: int, name: str, items: list, check: Callable[[object], Report],
         threads: int) -> CriterionResult:
    start = time.perf_counter()
    reports = ordered_map(check, items, threads)
    payloads = [r.to_json() for r in reports]
    failures = [p for r, p in zip(reports, payloads) if not r.ok]
    return CriterionResult(number, name, not failures, len(reports),
                           time.perf_counter() - start, _digest(payloads), failures)


def check_path_counts(max_m: int = 8) -> CriterionResult:
    start = time.perf_counter()
    payloads, failures = [], []
    for m in range(1, max_m + 1):
        for i in range(m + 1):
            got = len(enum_paths_A(m, i, 0))
            payloads.append([m, i, got])
            if got != comb(m, i):
                failures.append({"m": m, "i": i, "count": got, "expected": comb(m, i)})
    return CriterionResult(1, "path counts are binomial", not failures, len(payloads),
                           time.perf_counter() - start, _digest(payloads), failures)


def check_determinant(threads: int = 1, ns=(2, 3, 4)) -> CriterionResult:
    items = [ms for n in ns for ms in segment_snakes(n)]
    return _run(2, "determinant equals path character", items, verify_determinant, threads)


def check_identity(threads: int = 1, ns=(2, 3, 4), max_M: int = 3) -> CriterionResult:
    items = [(ms, M) for n in ns for ms in segment_snakes(n) for M in range(max_M + 1)]
    return _run(3, "left and right shifted sums agree", items,
                lambda x: verify_identity(x[0], x[1]), threads)


def check_dominance(threads: int = 1, ns=(2, 3)) -> CriterionResult:
    items = [s for n in ns for s in b_snakes(n)]
    return _run(4, "dual character dominated, slack counts gap>0", items, verify_dominance,
                threads)


def _kr_branch_shape(s: SnakeB) -> bool:
    """Equally spaced snakes branch into i+1 leading shifts, zero elsewhere."""
    i = s.points[0][0]
    return branch_tuples(s) == [(d,) + (0,) * (len(s.points) - 1) for d in range(i + 1)]


def check_branching(threads: int = 1, ns=(2, 3)) -> CriterionResult:
    items = [s for n in ns for s in b_snakes(n)] + [s for n in ns for s in kr_snakes(n)]

    def check(s: SnakeB) -> Report:
        r = verify_branching(s)
        if s.points[0][0] == s.points[-1][0] and all(
                b[1] - a[1] == 4 for a, b in zip(s.points, s.points[1:])) and not _kr_branch_shape(s):
            return Report(r.theorem, r.params, False, r.equal, r.lhs_mass, r.rhs_mass,
                          r.difference, {**r.extra, "kr_shape": False})
        return r

    return _run(5, "branching rule", items, check, threads)


def check_gap0(threads: int = 1, ns=(2, 3)) -> CriterionResult:
    items = [s for n in ns for s in b_snakes(n)]
    return _run(6, "gap-0 tuples are the F-images", items, verify_gap0, threads)


def check_g(threads: int = 1) -> CriterionResult:
    items = [("g", n, i, k) for n in (2, 3) for i in range(1, n + 1)
             for k in range(-2, 4) if in_xa(n, i, k)]
    items += [("gkr", 2, i, T, k) for i in (1, 2) for T in (1, 2)
              for k in range(-1, 3) if in_xa(2, i, k)]

    def check(x) -> Report:
        if x[0] == "g":
            return verify_g_paths(*x[1:])
        return verify_gkr(*x[1:])

    return _run(7, "G injective, weight-preserving; KR dominance", items, check, threads)


def check_corners(threads: int = 1) -> CriterionResult:
    items = [2, 3]
    return _run(8, "corner transport", items,
                lambda n: verify_corner_transport(n, range(-10, 11)), threads)


def check_ab(threads: int = 1, seed: int = 0, count: int = 200) -> CriterionResult:
    items = random_nop_specs(count, seed)
    return _run(9, "A-set and B-set statistics agree", items, verify_ab, threads)


CRITERIA = {
    1: lambda threads, seed: check_path_counts(),
    2: lambda threads, seed: check_determinant(threads),
    3: lambda threads, seed: check_identity(threads),
    4: lambda threads, seed: check_dominance(threads),
    5: lambda threads, seed: check_branching(threads),
    6: lambda threads, seed: check_gap0(threads),
    7: lambda threads, seed: check_g(threads),
    8: lambda threads, seed: check_corners(threads),
    9: lambda threads, seed: check_ab(threads, seed),
}


def run_suite(threads: int = 1, seed: int = 0, only=None,
              progress: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    results = []
    for number, fn in CRITERIA.items():
        if only and number not in only:
            continue
        res = fn(threads, seed)
        if progress:
            progress(res)
        results.append(res)
    return results
