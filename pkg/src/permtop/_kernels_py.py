"""Pure-Python implementations of the two hot kernels.

Same contracts as the compiled variants in _speedups; the dispatcher in
kernels.py picks whichever is available. Group elements are indices into
a flat row-major Cayley table with the identity at index 0.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence


def commuting_rows(flat: Sequence[int], width: int, h: Sequence[int]) -> bytes:
    """One byte per row of `flat`: 1 iff that permutation commutes with h.

    Rows are permutations of range(width) in row-major order; h is one
    such permutation.
    """
    if width == 0:
        return b"\x01"
    nrows = len(flat) // width
    out = bytearray(nrows)
    rng = range(width)
    for i in range(nrows):
        base = i * width
        ok = 1
        for j in rng:
            if flat[base + h[j]] != h[flat[base + j]]:
                ok = 0
                break
        out[i] = ok
    return bytes(out)


def word_inequality_masks(mul: Sequence[int], n: int, max_vars: int) -> list[int]:
    """Distinct masks {x : w(x) != identity} over all words in one unknown.

    Words are alternating products x^(+-1) g_1 x^(+-1) g_2 ... with up to
    max_vars variable occurrences and constants ranging over the whole
    group (identity included, so adjacent variables arise as a special
    case). Bit x of a mask is set iff the word evaluates off the identity
    at element x.
    """
    inv = [0] * n
    for x in range(n):
        for y in range(n):
            if mul[x * n + y] == 0:
                inv[x] = y
                break
    bit = [1 << x for x in range(n)]
    xs = list(range(n))
    masks: set[int] = set()
    for m in range(1, max_vars + 1):
        for sbits in range(1 << m):
            heads = xs if sbits & 1 == 0 else inv
            for combo in product(range(n), repeat=m):
                mask = 0
                c0 = combo[0]
                for x in xs:
                    acc = mul[heads[x] * n + c0]
                    for i in range(1, m):
                        v = x if (sbits >> i) & 1 == 0 else inv[x]
                        acc = mul[mul[acc * n + v] * n + combo[i]]
                    if acc:
                        mask |= bit[x]
                masks.add(mask)
    return sorted(masks)
