"""Centralizer predicates and finite-window double centralizers.

Centralizers inside the full infinite group are only ever exposed as
membership predicates. Double centralizers are brute-forced inside a
finite window of points, which is legitimate because the centralizer of
the finite symmetric group on A is exactly the pointwise stabilizer of A
once |A| >= 3, making window answers stable under enlargement.
"""

from __future__ import annotations

from array import array
from itertools import combinations, permutations
from typing import Iterable, Sequence

from . import kernels
from .errors import BadCardinality, FiniteSupport, InfiniteSupport, WindowTooSmall
from .perm import ResiduePerm, from_mapping, transposition


def in_centralizer(f: ResiduePerm, perms: Iterable[ResiduePerm]) -> bool:
    """True iff f commutes with every listed permutation."""
    return all(f * h == h * f for h in perms)


def in_subgroup_centralizer(f: ResiduePerm, points: Iterable[int]) -> bool:
    """True iff f commutes with every permutation supported in `points`.

    Transpositions generate the finite symmetric group on the set, and
    f t(a,b) f^-1 = t(f(a), f(b)), so each generator check is a set
    comparison.
    """
    pts = sorted(set(points))
    if len(pts) < 2:
        raise BadCardinality(len(pts), 2)
    for a, b in combinations(pts, 2):
        fa, fb = f.apply(a), f.apply(b)
        if {fa, fb} != {a, b}:
            return False
    return True


def centralizer_equals_stabilizer(points: Iterable[int], window: Iterable[int]) -> bool:
    """Brute-force test: inside S(window), centralizing all of S(points)
    coincides with fixing `points` pointwise.

    True whenever |points| >= 3; the two-point case fails (a transposition
    centralizes the group it generates while moving both points).
    """
    pts = sorted(set(points))
    win = sorted(set(window))
    if not set(pts) <= set(win):
        raise WindowTooSmall(f"window misses {sorted(set(pts) - set(win))}")
    spots = [win.index(p) for p in pts]
    pairs = list(combinations(spots, 2))
    for perm in permutations(range(len(win))):
        commutes = True
        for i, j in pairs:
            pi, pj = perm[i], perm[j]
            if not ((pi == i and pj == j) or (pi == j and pj == i)):
                commutes = False
                break
        fixes = all(perm[i] == i for i in spots)
        if commutes != fixes:
            return False
    return True


_ROW_CACHE: dict[int, tuple[array, int]] = {}


def _window_rows(n: int) -> tuple[array, int]:
    """All permutations of range(n) as one flat row-major array, lex order."""
    cached = _ROW_CACHE.get(n)
    if cached is None:
        flat = array("i")
        for perm in permutations(range(n)):
            flat.extend(perm)
        cached = (flat, n and len(flat) // n or 1)
        _ROW_CACHE[n] = cached
    return cached


def _row_commutes(flat: array, base: int, h: Sequence[int], n: int) -> bool:
    for i in range(n):
        if flat[base + h[i]] != h[flat[base + i]]:
            return False
    return True


def double_centralizer_window(perms: Sequence[ResiduePerm],
                              window: Iterable[int]) -> list[ResiduePerm]:
    """c(c(F)) computed inside the symmetric group on the window.

    Output in lexicographic one-line order. The second centralizer pass
    filters the whole window group by one largest-support member of c(F)
    first; survivors of that single strong filter are then verified
    against every member.
    """
    win = sorted(set(window))
    if not win:
        raise WindowTooSmall("empty window")
    n = len(win)
    pos = {p: i for i, p in enumerate(win)}
    rows_f: list[array] = []
    for f in perms:
        if not f.has_finite_support():
            raise InfiniteSupport()
        moved = f.moved_points()
        if not set(moved) <= set(win):
            raise WindowTooSmall(f"window misses {sorted(set(moved) - set(win))}")
        rows_f.append(array("i", (pos[f.apply(p)] for p in win)))

    flat, nrows = _window_rows(n)
    mask = b"\x01" * nrows
    for row in rows_f:
        other = kernels.commuting_rows(flat, n, row)
        mask = (int.from_bytes(mask, "little")
                & int.from_bytes(other, "little")).to_bytes(nrows, "little")
    c1 = [i for i, hit in enumerate(mask) if hit]

    # strongest filter first: a member moving the most window points has
    # the smallest centralizer
    def row_support(i: int) -> int:
        base = i * n
        return sum(1 for j in range(n) if flat[base + j] != j)

    c1_rows = [array("i", flat[i * n:(i + 1) * n]) for i in c1]
    order = sorted(range(len(c1)), key=lambda t: row_support(c1[t]), reverse=True)
    strong = c1_rows[order[0]]
    cand = kernels.commuting_rows(flat, n, strong)
    out = []
    for i, hit in enumerate(cand):
        if not hit:
            continue
        base = i * n
        if all(_row_commutes(flat, base, c1_rows[t], n) for t in order):
            out.append(from_mapping({win[j]: win[flat[base + j]] for j in range(n)}))
    return out


def centralizer_not_open_witness(g: ResiduePerm, points: Iterable[int]) -> ResiduePerm:
    """Transposition fixing `points` pointwise yet not commuting with g.

    Exists for every finite point set exactly because supt(g) is infinite:
    take the least moved x outside the set and a fresh y, so the
    transposition avoids the set while g t g^-1 = t(g(x), g(y)) moves g(x).
    """
    if g.has_finite_support():
        raise FiniteSupport()
    avoid = set(points)
    x = next(p for p in g.support().iter_members() if p not in avoid)
    gx = g.apply(x)
    y = 0
    while y in avoid or y == x or y == gx:
        y += 1
    return transposition(x, y)
