"""Pure-Python twins of the compiled kernels (same signatures, same results)."""

from __future__ import annotations


def rank(masks, offsets, x):
    return min(r + (x & ~f).bit_count() for f, r in zip(masks, offsets))


def rank_table(n, masks, offsets):
    pairs = list(zip(masks, offsets))
    return bytes(min(r + (x & ~f).bit_count() for f, r in pairs) for x in range(1 << n))


def cyclic_flats_by_subsets(n, masks, offsets):
    t = rank_table(n, masks, offsets)
    found = []
    for x in range(1 << n):
        k = t[x]
        ok = True
        for e in range(n):
            bit = 1 << e
            if x & bit:
                if t[x ^ bit] != k:
                    ok = False
                    break
            elif t[x | bit] == k:
                ok = False
                break
        if ok:
            found.append((x, k))
    return found


def cyclic_flats_by_flats(n, masks, offsets, max_flats=20_000_000):
    if n > 64:
        raise ValueError("ground set limited to 64 elements")
    pairs = list(zip(masks, offsets))

    def r(x):
        return min(off + (x & ~f).bit_count() for f, off in pairs)

    full = (1 << n) - 1
    loops = 0
    for e in range(n):
        if r(1 << e) == 0:
            loops |= 1 << e
    level = [loops]
    out = []
    n_flats = 0
    while level:
        nxt = []
        seen = set()
        for f in level:
            n_flats += 1
            k = r(f)
            scan = f
            cyclic = True
            while scan:
                bit = scan & -scan
                scan ^= bit
                if r(f ^ bit) != k:
                    cyclic = False
                    break
            if cyclic:
                out.append((f, k))
            rest = full & ~f
            while rest:
                bit = rest & -rest
                g = f | bit
                cl = g
                scan = rest ^ bit
                while scan:
                    b = scan & -scan
                    scan ^= b
                    if r(g | b) == k + 1:
                        cl |= b
                rest &= ~cl
                if cl not in seen:
                    seen.add(cl)
                    nxt.append(cl)
        level = nxt
        if n_flats + len(level) > max_flats:
            raise OverflowError(f"more than {max_flats} flats")
    return out, n_flats
