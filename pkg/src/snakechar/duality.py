"""Maps between type A_{2n-1} paths and type B_n paths, and the checks
built on them: dominance, the branching rule, gap-0 correspondence and
the generalized KR dominance in the opposite direction."""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from typing import Sequence

from .config import ordered_map
from .lattice import (Character, Family, Weight, char_dominates, char_sum, fold_char,
                      fold_weight, lpi_char, lpi_weight, pi_char, pi_weight)
from .monomials import YMonomial, ZMonomial, product
from .paths import (Corner, EpsInt, PathA, PathB, corners_A, corners_B, enum_paths_A,
                    enum_paths_B, floor_div_eps, in_xa, monomial_of_path, strictly_above,
                    weight_of_path)
from .reports import Report, character_report
from .segments import NopSetSpec, build_nop_set
from .snakes import (SnakeA, SnakeB, char_snake, enum_nop_tuples,
                     fold_monomial, format_snake, nop_tuples, qchar_snake,
                     twisted_char_snake, twisted_qchar_snake)


# single paths

def map_F(p: PathA) -> PathB:
    """Send a type A_{2n-1} path with i <= n to a type B_n path."""
    if p.offset or p.m % 2:
        raise ValueError("map_F expects a path on columns 0..2n")
    n = p.m // 2
    if not 1 <= p.i <= n:
        raise ValueError(f"map_F needs 1 <= i <= n, got i={p.i}, n={n}")
    if not in_xa(n, p.i, p.k):
        raise ValueError(f"(i, k) = ({p.i}, {p.k}) violates k = n+i+1 mod 2")
    x = p.ys
    ys = tuple(2 * x[j] for j in range(n))
    ys += (EpsInt(2 * x[n] - 1, 1) if x[n] > x[n - 1] else EpsInt(2 * x[n] + 1, -1),)
    zs = tuple(2 * x[2 * n - j] - 2 for j in range(n))
    zs += (EpsInt(2 * x[n] - 3, 1) if x[n] > x[n + 1] else EpsInt(2 * x[n] - 1, -1),)
    return PathB(n, p.i, 2 * p.k, ys, zs)


def gap(p: PathB) -> int:
    """Half the distance between the two branch ends after rescaling."""
    n = p.n
    diff = p.ys[n].floor_half(1) - p.zs[n].floor_half(3)
    if diff < 0 or diff % 2:
        raise ArithmeticError(f"gap numerator {diff} is not a nonnegative even integer")
    return diff // 2


def gap_direct(p: PathB) -> int:
    """The same quantity as floor((y_n - z_n) / 4)."""
    y, z = p.ys[p.n], p.zs[p.n]
    return floor_div_eps(y.a - z.a, y.b - z.b, 4)


def gap_tuple(tup: Sequence[PathB]) -> int:
    return sum(gap(p) for p in tup)


def map_F_inv(p: PathB) -> PathA:
    if gap(p) != 0:
        raise ValueError("only gap-0 paths are in the image of map_F")
    n = p.n
    xs = [y // 2 for y in p.ys[:n]]
    xs.append(p.ys[n].floor_half(1))
    xs.extend((p.zs[j] + 2) // 2 for j in range(n - 1, -1, -1))
    return PathA.from_ys(xs)


def map_L(p: PathB) -> PathA:
    """Left branch rescaled to a path on columns 0..n."""
    n = p.n
    return PathA.from_ys([y // 2 for y in p.ys[:n]] + [p.ys[n].floor_half(1)])


def map_R(p: PathB) -> PathA:
    """Right branch rescaled to a path on columns n..2n."""
    n = p.n
    xs = [p.zs[n].floor_half(3)] + [(p.zs[j] + 2) // 2 for j in range(n - 1, -1, -1)]
    return PathA.from_ys(xs, offset=n)


def reconstruct_B(left: PathA, right: PathA) -> PathB:
    """Inverse of p -> (map_L(p), map_R(p))."""
    n = left.m
    if right.m != n or left.offset != 0 or right.offset != n:
        raise ValueError("expected paths on columns 0..n and n..2n")
    xl, xr = left.ys, right.ys
    if xr[0] > xl[n]:
        raise ValueError("right branch head lies above the left branch end")
    ys = tuple(2 * v for v in xl[:n])
    ys += (EpsInt(2 * xl[n] - 1, 1) if xl[n] > xl[n - 1] else EpsInt(2 * xl[n] + 1, -1),)
    zs = tuple(2 * xr[n - j] - 2 for j in range(n))
    zs += (EpsInt(2 * xr[0] - 3, 1) if xr[0] > xr[1] else EpsInt(2 * xr[0] - 1, -1),)
    y0, z0 = ys[0], zs[0]
    i4 = y0 - z0 + 4 * n - 2
    if i4 % 4:
        raise ValueError("branch starts are incompatible")
    i = i4 // 4
    return PathB(n, i, y0 - 2 * i, ys, zs)


def concat_paths(left: PathA, right: PathA) -> PathA:
    """Join a path on columns 0..n with one on columns n..2n."""
    if left.ys[-1] != right.ys[0] or right.offset != left.offset + left.m:
        raise ValueError("paths do not meet")
    return PathA.from_ys(left.ys + right.ys[1:], left.offset)


def g_crossover(p: PathB) -> int:
    return max(j for j in range(1, p.n + 1) if p.ys[j - 1] <= p.zs[j - 1] + 2)


def map_G(p: PathB) -> tuple[PathA, PathA]:
    """Split a type B path into two type A_{2n-1} paths of indices i, 2n-i."""
    n = p.n
    j0 = g_crossover(p)
    ys, zs = p.ys, p.zs
    left, right = [], []
    for j in range(2 * n + 1):
        if j < n:
            left.append(ys[j] // 2)
            right.append((zs[j] + 2) // 2)
        elif j == n:
            left.append(ys[n].floor_half(1))
            right.append(zs[n].floor_half(3))
        elif j <= 2 * n - j0:
            left.append(ys[2 * n - j] // 2)
            right.append((zs[2 * n - j] + 2) // 2)
        else:
            left.append((zs[2 * n - j] + 2) // 2)
            right.append(ys[2 * n - j] // 2)
    return PathA.from_ys(left), PathA.from_ys(right)


def verify_G_weight(p: PathB) -> bool:
    gl, gr = map_G(p)
    return weight_of_path(p) == lpi_weight(fold_weight(weight_of_path(gl) + weight_of_path(gr)))


# corner transport

def transported_corners(p: PathA) -> tuple[list[Corner], list[Corner]]:
    """Corners of map_F(p) predicted from the corners of p."""
    n = p.m // 2
    x = p.ys

    def f(c: Corner) -> Corner:
        if c.j < n:
            return Corner(c.j, 2 * c.level)
        return Corner(2 * n - c.j, 2 * c.level - 2)

    plus_a, minus_a = corners_A(p)
    plus = [f(c) for c in plus_a if c.j != n]
    minus = [f(c) for c in minus_a if c.j != n]
    for c in plus_a:
        if c.j == n:
            plus += [Corner(n, 2 * c.level - 1), Corner(n, 2 * c.level + 1)]
    for c in minus_a:
        if c.j == n:
            minus += [Corner(n, 2 * c.level - 1), Corner(n, 2 * c.level - 3)]
    if x[n - 1] == x[n] + 1 and x[n + 1] == x[n] - 1:
        plus.append(Corner(n, 2 * x[n] + 1))
        minus.append(Corner(n, 2 * x[n] - 3))
    return sorted(plus), sorted(minus)


def verify_corner_transport(n: int, k_values: Sequence[int] | None = None) -> Report:
    """Compare predicted and actual corners of map_F over all paths with i <= n."""
    checked, bad = 0, []
    for i in range(1, n + 1):
        ks = k_values if k_values is not None else _xa_shifts(n, i, 2)
        for k in ks:
            if not in_xa(n, i, k):
                continue
            for p in enum_paths_A(2 * n, i, k):
                checked += 1
                if corners_B(map_F(p)) != transported_corners(p):
                    bad.append(p.to_json())
    return Report("corners", {"n": n}, ok=not bad, equal=not bad, lhs_mass=checked,
                  rhs_mass=checked - len(bad), difference=bad)


def _xa_shifts(n: int, i: int, radius: int) -> list[int]:
    return [k for k in range(-radius, radius + 2) if in_xa(n, i, k)]


# snakes

def halved_snake(s: SnakeB) -> SnakeA:
    return SnakeA(2 * s.n, tuple((i, k // 2) for i, k in s.points))


def dual_monomial(s: SnakeB) -> ZMonomial:
    return product((ZMonomial.var(s.n, i, k // 2) for i, k in s.points), ZMonomial.one(s.n))


def _params(s) -> dict:
    return {"n": s.n, "snake": format_snake(s)}


def verify_dominance(s: SnakeB, max_tuples: int | None = None) -> Report:
    """Dual character inside the folded character, slack counted by gap."""
    lhs = pi_char(char_snake(s, max_tuples))
    rhs = twisted_char_snake(halved_snake(s), max_tuples)
    slack = lhs - rhs
    dominates = char_dominates(lhs, rhs)
    positive = sum(1 for tup in nop_tuples(s, max_tuples) if gap_tuple(tup) > 0)
    ok = dominates and slack.mass() == positive
    return character_report("dominance", _params(s), lhs, rhs, ok=ok, dominates=dominates,
                            slack_mass=slack.mass(), gap_positive_tuples=positive)


def branch_tuples(s: SnakeB) -> list[tuple[int, ...]]:
    ranges = []
    prev = None
    for i, k in s.points:
        upper = i + 1
        if prev is not None:
            i0, k0 = prev
            upper = min((2 * i + k - 2 * i0 - k0) // 4, upper)
        ranges.append(range(max(upper, 0)))
        prev = (i, k)
    return list(itertools.product(*ranges))


def branch_snake(s: SnakeB, shifts: Sequence[int]) -> SnakeA:
    return SnakeA(2 * s.n, tuple((i - d, k // 2 - d) for (i, k), d in zip(s.points, shifts)))


def branch_monomials(s: SnakeB) -> list[ZMonomial]:
    out = []
    for shifts in branch_tuples(s):
        factors = (ZMonomial.var(s.n, i - d, k // 2 - d)
                   for (i, k), d in zip(s.points, shifts) if i - d > 0)
        out.append(product(factors, ZMonomial.one(s.n)))
    return out


def verify_branching(s: SnakeB, max_tuples: int | None = None, threads: int = 1) -> Report:
    lhs = pi_char(char_snake(s, max_tuples))

    def term(shifts):
        return fold_char(char_snake(branch_snake(s, shifts), max_tuples))

    tuples = branch_tuples(s)
    rhs = char_sum(ordered_map(term, tuples, threads), Family.TW, s.n)
    return character_report("branching", _params(s), lhs, rhs,
                            branch_tuples=[list(t) for t in tuples])


# gap zero

def gap0_tuples(s: SnakeB, max_tuples: int | None = None) -> list[tuple]:
    return [tup for tup in nop_tuples(s, max_tuples) if gap_tuple(tup) == 0]


def gap0_twisted_qchar(s: SnakeB, max_tuples: int | None = None) -> list[ZMonomial]:
    out = []
    for tup in gap0_tuples(s, max_tuples):
        m = product((monomial_of_path(map_F_inv(p)) for p in tup), YMonomial())
        out.append(fold_monomial(m, s.n))
    return out


def verify_gap0(s: SnakeB, max_tuples: int | None = None) -> Report:
    """Gap-0 tuples against F-images of the halved snake's tuples."""
    half = halved_snake(s)
    a_tuples = nop_tuples(half, max_tuples)
    images = [tuple(map_F(p) for p in tup) for tup in a_tuples]
    zero = gap0_tuples(s, max_tuples)
    image_equal = len(set(images)) == len(images) and set(images) == set(zero)

    roundtrip = True
    for (i, k) in half.points:
        for p in enum_paths_A(half.m, i, k):
            q = map_F(p)
            roundtrip &= map_F_inv(q) == p and gap(q) == 0
    for (i, k) in s.points:
        for q in enum_paths_B(s.n, i, k):
            if gap(q) == 0:
                roundtrip &= map_F(map_F_inv(q)) == q

    lhs = Counter(gap0_twisted_qchar(s, max_tuples))
    rhs = Counter(twisted_qchar_snake(half, max_tuples))
    qchar_equal = lhs == rhs
    diff = Counter(lhs)
    diff.subtract(rhs)
    ok = image_equal and roundtrip and qchar_equal
    return Report("gap0", _params(s), ok=ok, equal=qchar_equal,
                  lhs_mass=sum(lhs.values()), rhs_mass=sum(rhs.values()),
                  difference=[[m.to_json(), v] for m, v in sorted(diff.items(), key=lambda x: x[0].exps) if v],
                  extra={"image_equal": image_equal, "roundtrip": roundtrip,
                         "gap0_tuples": len(zero), "a_tuples": len(a_tuples)})


# decomposition by right branches

def verify_decomposition(s: SnakeB, max_tuples: int | None = None) -> Report:
    """Group tuples by their right halves and gap; compare with window sets."""
    n = s.n
    x0 = tuple((2 * i + k) // 2 for i, k in s.points)
    groups: dict = defaultdict(list)
    for tup in nop_tuples(s, max_tuples):
        rights = tuple(map_R(p) for p in tup)
        groups[(rights, gap_tuple(tup))].append(tup)

    bad = []
    for (rights, M), members in sorted(groups.items(), key=lambda g: ([r.ys for r in g[0][0]], g[0][1])):
        xn = tuple(r.ys[0] for r in rights)
        spec = NopSetSpec(n, x0, xn, M, "B")
        b_set = build_nop_set(spec, max_tuples)
        a_set = build_nop_set(spec.with_side("A"), max_tuples)
        lefts = {tuple(map_L(p) for p in tup) for tup in members}
        b_weights = Counter(pi_weight(_tuple_weight(tup, n, Family.B)).coeffs for tup in members)
        a_weights = Counter(
            fold_weight(_tuple_weight([concat_paths(a, r) for a, r in zip(tup, rights)], 2 * n - 1,
                                      Family.A)).coeffs
            for tup in a_set)
        if not (lefts == set(b_set) and len(b_set) == len(members) == len(a_set)
                and b_weights == a_weights):
            bad.append({"rights": [r.to_json() for r in rights], "M": M,
                        "members": len(members), "b_set": len(b_set), "a_set": len(a_set)})
    total = sum(len(v) for v in groups.values())
    return Report("decomposition", _params(s), ok=not bad, equal=not bad, lhs_mass=total,
                  rhs_mass=total, difference=bad, extra={"groups": len(groups)})


def _tuple_weight(tup, rank: int, family: Family) -> Weight:
    w = Weight.zero(family, rank)
    for p in tup:
        w = w + weight_of_path(p, rank)
    return w


def window_set_character(s: SnakeB, max_tuples: int | None = None) -> Character:
    """Folded character of A_{2n-1} tuples whose left ends float in the windows
    ]i_{t-1} + k_{t-1}/2, i_t + k_t/2] and whose right ends are pinned."""
    n = s.n
    m = 2 * n
    tops = [i + k // 2 for i, k in s.points]
    ends = [2 * n - i + k // 2 for i, k in s.points]
    choices = []
    for t, (top, end) in enumerate(zip(tops, ends)):
        lo = tops[t - 1] + 1 if t else end - m
        choices.append([y for y in range(max(lo, end - m), top + 1) if (y - end - m) % 2 == 0])
    acc: Counter = Counter()
    for starts in itertools.product(*choices):
        sets = [enum_paths_A(m, (y - e + m) // 2, (y + e - m) // 2) for y, e in zip(starts, ends)]
        for tup in enum_nop_tuples(sets, max_tuples):
            acc[_tuple_weight(tup, m - 1, Family.A).coeffs] += 1
    return fold_char(Character(Family.A, m - 1, acc))


# opposite direction

def gkr_snakes(n: int, i: int, T: int, k: int) -> tuple[SnakeA, SnakeA]:
    if not 1 <= i <= n:
        raise ValueError(f"index i={i} outside 1..{n}")
    if T < 1:
        raise ValueError("T must be positive")
    pts = range(k, k + 2 * T, 2)
    return (SnakeA(2 * n, tuple((i, kk) for kk in pts)),
            SnakeA(2 * n, tuple((2 * n - i, kk) for kk in pts)))


def gkr_b_snake(n: int, i: int, T: int, k: int) -> SnakeB:
    return SnakeB(n, tuple((i, 2 * k + 4 * t) for t in range(T)))


def gkr_qchar(n: int, i: int, T: int, k: int, max_tuples: int | None = None) -> list[ZMonomial]:
    s1, s2 = gkr_snakes(n, i, T, k)
    q1, q2 = qchar_snake(s1, max_tuples), qchar_snake(s2, max_tuples)
    return [fold_monomial(a * b, n) for a in q1 for b in q2]


def gkr_char(n: int, i: int, T: int, k: int, max_tuples: int | None = None) -> Character:
    s1, s2 = gkr_snakes(n, i, T, k)
    return fold_char(char_snake(s1, max_tuples) * char_snake(s2, max_tuples))


def verify_gkr(n: int, i: int, T: int, k: int, max_tuples: int | None = None) -> Report:
    """B_n KR character against the pulled-back twisted generalized KR character,
    plus G on tuples: injective and NOP-preserving."""
    s = gkr_b_snake(n, i, T, k)
    small = char_snake(s, max_tuples)
    big = lpi_char(gkr_char(n, i, T, k, max_tuples))
    dominates = char_dominates(big, small)

    s1, s2 = gkr_snakes(n, i, T, k)
    q1 = set(nop_tuples(s1, max_tuples))
    q2 = set(nop_tuples(s2, max_tuples))
    images = []
    lands = True
    for tup in nop_tuples(s, max_tuples):
        pairs = [map_G(p) for p in tup]
        left = tuple(a for a, _ in pairs)
        right = tuple(b for _, b in pairs)
        lands &= left in q1 and right in q2
        images.append((left, right))
    injective = len(set(images)) == len(images)
    qmass = len(gkr_qchar(n, i, T, k, max_tuples))
    product_ok = qmass == len(q1) * len(q2)
    ok = dominates and injective and lands and product_ok
    return character_report("gkr", {"n": n, "i": i, "T": T, "k": k}, big, small, ok=ok,
                            dominates=dominates, g_injective=injective, g_lands_in_nop=lands,
                            qchar_terms=qmass)


def verify_gkr_dominance(n: int, i: int, T: int, k: int, max_tuples: int | None = None) -> bool:
    return verify_gkr(n, i, T, k, max_tuples).extra["dominates"]


def crossover_is_tight(p: PathB) -> bool:
    """Whether the branches touch at the crossover: y_{j0-1} == z_{j0-1} + 2."""
    j0 = g_crossover(p)
    return p.ys[j0 - 1] == p.zs[j0 - 1] + 2


def verify_g_paths(n: int, i: int, k: int) -> Report:
    """map_G on all of P^B_{i,2k}: injective, weight-preserving, right endpoints.

    Tightness of the crossover is reported but not required; it fails exactly
    when both terminals share their integer part (y_n = l+eps, z_n = l-eps).
    """
    paths = enum_paths_B(n, i, 2 * k)
    images = [map_G(p) for p in paths]
    injective = len(set(images)) == len(images)
    bad = []
    loose = 0
    for p, (gl, gr) in zip(paths, images):
        loose += not crossover_is_tight(p)
        fine = ((gl.i, gl.k) == (i, k) and (gr.i, gr.k) == (2 * n - i, k)
                and verify_G_weight(p))
        if not fine:
            bad.append(p.to_json())
    ok = injective and not bad
    return Report("gweight", {"n": n, "i": i, "k": k}, ok=ok, equal=not bad,
                  lhs_mass=len(paths), rhs_mass=len(set(images)), difference=bad,
                  extra={"g_injective": injective, "loose_crossovers": loose})


def verify_tensor_square(s: SnakeB, max_tuples: int | None = None) -> Report:
    """chi(L(m)) below the pull-back of the twisted dual character squared
    (the spectral sign does not change a usual character)."""
    tw = twisted_char_snake(halved_snake(s), max_tuples)
    big = lpi_char(tw * tw)
    small = char_snake(s, max_tuples)
    dominates = char_dominates(big, small)
    return character_report("tensor-square", _params(s), big, small, ok=dominates,
                            dominates=dominates)


def nop_preserved_by_F(s: SnakeB, max_tuples: int | None = None) -> bool:
    for tup in nop_tuples(halved_snake(s), max_tuples):
        img = [map_F(p) for p in tup]
        if not all(strictly_above(a, b) for a, b in zip(img, img[1:])):
            return False
    return True

