"""Compiled inner loops.

Both kernels release the GIL so callers can fan shards out over a thread
pool. They work on plain int64 bit masks; k stays below 63 and the semigroup
tree arrays are sized by the caller.
"""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def type_profile_shard(k, start_pair, a_mask, s_mask, a_size, out):
    """Add the (|A|, |(A+A)∩[0,k]|) counts of every completion to ``out``.

    Pairs {x, k-x} for x < start_pair are already decided and summarised by
    ``a_mask``/``s_mask``/``a_size``; pairs start_pair..(k-1)//2 each take one
    of three choices: neither, x, or k-x.
    """
    npairs = (k - 1) // 2
    depth = npairs + 2
    am = np.empty(depth, np.int64)
    sm = np.empty(depth, np.int64)
    sz = np.empty(depth, np.int64)
    ch = np.empty(depth, np.int64)
    d = start_pair
    am[d] = a_mask
    sm[d] = s_mask
    sz[d] = a_size
    ch[d] = 0
    while d >= start_pair:
        if d > npairs:
            out[sz[d], _popcount(sm[d])] += 1
            d -= 1
            continue
        c = ch[d]
        if c == 3:
            d -= 1
            continue
        ch[d] = c + 1
        a = am[d]
        s = sm[d]
        n = sz[d]
        if c > 0:
            y = d if c == 1 else k - d
            a |= np.int64(1) << y
            # keep only the sums that land in [0, k]
            s |= (a & ((np.int64(1) << (k + 1 - y)) - 1)) << y
            n += 1
        am[d + 1] = a
        sm[d + 1] = s
        sz[d + 1] = n
        ch[d + 1] = 0
        d += 1


@njit(cache=True, nogil=True)
def tree_walk(dec0, g0, m0, f0, g_max, n_out, t_out, lt2_out):
    """Depth-first walk of the semigroup tree below one node.

    ``dec0[y]`` is the number of pairs a <= b in the semigroup with a + b = y,
    so y is a member iff dec0[y] > 0 and a minimal generator iff dec0[y] == 1.
    Counts of every proper descendant with genus <= g_max are accumulated
    into ``n_out`` (all), ``t_out`` (f < 3m) and ``lt2_out`` (f < 2m).
    """
    size = dec0.shape[0]
    if g0 >= g_max:
        return
    levels = g_max - g0 + 1
    dec = np.empty((levels, size), np.int32)
    gs = np.empty(levels, np.int64)
    ms = np.empty(levels, np.int64)
    fs = np.empty(levels, np.int64)
    pos = np.empty(levels, np.int64)
    dec[0, :] = dec0
    gs[0] = g0
    ms[0] = m0
    fs[0] = f0
    pos[0] = max(f0 + 1, 1)
    d = 0
    while d >= 0:
        g = gs[d]
        m = ms[d]
        f = fs[d]
        lim = f + m if f >= 0 else 1
        if g + 1 == g_max:
            # children are leaves: count them without materialising
            for x in range(pos[d], lim + 1):
                if dec[d, x] == 1:
                    mm = m + 1 if x == m else m
                    n_out[g + 1] += 1
                    if x < 3 * mm:
                        t_out[g + 1] += 1
                        if x < 2 * mm:
                            lt2_out[g + 1] += 1
            d -= 1
            continue
        x = pos[d]
        while x <= lim and dec[d, x] != 1:
            x += 1
        if x > lim:
            d -= 1
            continue
        pos[d] = x + 1
        c = d + 1
        for y in range(x):
            dec[c, y] = dec[d, y]
        for y in range(x, size):
            v = dec[d, y]
            if dec[d, y - x] > 0:
                v -= 1
            dec[c, y] = v
        mm = m + 1 if x == m else m
        gs[c] = g + 1
        ms[c] = mm
        fs[c] = x
        pos[c] = x + 1
        n_out[g + 1] += 1
        if x < 3 * mm:
            t_out[g + 1] += 1
            if x < 2 * mm:
                lt2_out[g + 1] += 1
        d = c
