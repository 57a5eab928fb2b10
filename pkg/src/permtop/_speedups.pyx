# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled variants of the two hot kernels; contracts in _kernels_py."""


def commuting_rows(int[:] flat, int width, int[:] h):
    cdef Py_ssize_t nrows, i, j, base
    cdef int ok
    if width == 0:
        return b"\x01"
    nrows = flat.shape[0] // width
    out = bytearray(nrows)
    cdef unsigned char[:] ob = out
    for i in range(nrows):
        base = i * width
        ok = 1
        for j in range(width):
            if flat[base + h[j]] != h[flat[base + j]]:
                ok = 0
                break
        ob[i] = ok
    return bytes(out)


def word_inequality_masks(int[:] mul, int n, int max_vars):
    cdef int inv[128]
    cdef int combo[8]
    cdef int x, y, m, i, v, acc, c0, head
    cdef int sbits, pos
    cdef unsigned long long lo, hi
    if n > 128:
        raise ValueError("element count exceeds the 128-bit mask budget")
    if max_vars > 8:
        raise ValueError("variable budget exceeds the odometer width")
    for x in range(n):
        for y in range(n):
            if mul[x * n + y] == 0:
                inv[x] = y
                break
    masks = set()
    for m in range(1, max_vars + 1):
        for sbits in range(1 << m):
            for i in range(m):
                combo[i] = 0
            while True:
                lo = 0
                hi = 0
                c0 = combo[0]
                for x in range(n):
                    head = x if (sbits & 1) == 0 else inv[x]
                    acc = mul[head * n + c0]
                    for i in range(1, m):
                        v = x if ((sbits >> i) & 1) == 0 else inv[x]
                        acc = mul[mul[acc * n + v] * n + combo[i]]
                    if acc != 0:
                        if x < 64:
                            lo |= 1ULL << x
                        else:
                            hi |= 1ULL << (x - 64)
                if hi == 0:
                    masks.add(int(lo))
                else:
                    masks.add((int(hi) << 64) | int(lo))
                # odometer over the constant tuple
                pos = m - 1
                while pos >= 0:
                    combo[pos] += 1
                    if combo[pos] < n:
                        break
                    combo[pos] = 0
                    pos -= 1
                if pos < 0:
                    break
    return sorted(masks)
