# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of ``_kernels_py``; same interface, C inner loops."""

import itertools


cdef void _stab_rec(int t, int n, int* e, int* sigma, int* s, int* used, list out):
    cdef int cand, i, st
    cdef bint ok
    if t == n:
        out.append(
            (tuple([sigma[i] for i in range(n)]), tuple([s[i] for i in range(n)]))
        )
        return
    for cand in range(n):
        if used[cand]:
            continue
        if t > 0:
            st = e[t] ^ e[sigma[0] * n + cand]
            ok = True
            for i in range(1, t):
                if (s[i] ^ st ^ e[sigma[i] * n + cand]) != e[i * n + t]:
                    ok = False
                    break
            if not ok:
                continue
            s[t] = st
        sigma[t] = cand
        used[cand] = True
        _stab_rec(t + 1, n, e, sigma, s, used, out)
        used[cand] = False


def signed_stabilizer(masks):
    """See gerbe._kernels_py.signed_stabilizer."""
    cdef int n = len(masks)
    if n > 16:
        raise ValueError("kernel supports n <= 16")
    cdef int[256] e
    cdef int[16] sigma
    cdef int[16] s
    cdef int[16] used
    cdef int i, j
    cdef long long mi
    for i in range(n):
        mi = masks[i]
        for j in range(n):
            e[i * n + j] = (mi >> j) & 1
        used[i] = 0
        s[i] = 0
        sigma[i] = 0
    out = []
    _stab_rec(0, n, e, sigma, s, used, out)
    return out


def naive_signed_elements(masks):
    """See gerbe._kernels_py.naive_signed_elements."""
    cdef int n = len(masks)
    if n > 16:
        raise ValueError("kernel supports n <= 16")
    cdef int[256] e
    cdef int[16] sig
    cdef int i, j, bits, si
    cdef bint ok
    cdef long long mi
    for i in range(n):
        mi = masks[i]
        for j in range(n):
            e[i * n + j] = (mi >> j) & 1
    out = []
    for sigma in itertools.permutations(range(n)):
        for i in range(n):
            sig[i] = sigma[i]
        for bits in range(1 << n):
            ok = True
            for i in range(n - 1):
                si = (bits >> i) & 1
                for j in range(i + 1, n):
                    if (si ^ ((bits >> j) & 1) ^ e[sig[i] * n + sig[j]]) != e[i * n + j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append((sigma, tuple([(bits >> i) & 1 for i in range(n)])))
    return out


cdef int _block_status(long long a, long long b, long long* masks, int n):
    # 2 = all, 0 = none, -1 = mixed, 3 = no pairs
    cdef bint seen_all = False, seen_none = False
    cdef long long bb, v
    cdef int i
    for i in range(n):
        if not (a >> i) & 1:
            continue
        bb = b & ~(<long long>1 << i)
        if bb == 0:
            continue
        v = masks[i] & bb
        if v == bb:
            seen_all = True
        elif v == 0:
            seen_none = True
        else:
            return -1
    if seen_all and seen_none:
        return -1
    if seen_all:
        return 2
    if seen_none:
        return 0
    return 3


cdef bint _linking_check_c(long long* masks, int n, int cbit):
    cdef long long full = (1 << n) - 1
    cdef int[16] pi
    cdef int[16] sbits
    cdef int[16] reps
    cdef int nreps = 0
    cdef int i, j, r, sb, m, a, b, st
    cdef long long rest, diff
    cdef bint assigned
    for i in range(n):
        assigned = False
        for j in range(nreps):
            r = reps[j]
            sb = ((masks[r] >> i) & 1) ^ cbit
            rest = full & ~(<long long>1 << r) & ~(<long long>1 << i)
            diff = (masks[r] ^ masks[i]) & rest
            if (sb == 0 and diff == 0) or (sb == 1 and diff == rest):
                pi[i] = j
                sbits[i] = sb
                assigned = True
                break
        if not assigned:
            pi[i] = nreps
            sbits[i] = 0
            reps[nreps] = i
            nreps += 1
    m = nreps
    cdef long long[32] blocks
    for a in range(2 * m):
        blocks[a] = 0
    for i in range(n):
        blocks[2 * pi[i] + sbits[i]] |= <long long>1 << i
    cdef int[32 * 32] stat
    for a in range(2 * m):
        for b in range(a, 2 * m):
            if blocks[a] == 0 or blocks[b] == 0:
                st = 3
            else:
                st = _block_status(blocks[a], blocks[b], masks, n)
                if st == -1:
                    return False
            stat[a * 2 * m + b] = st
            stat[b * 2 * m + a] = st
    cdef int ndef, ntrue, sa, want
    cdef int wants[4]
    cdef int sas[4]
    cdef int sbs[4]
    wants[0] = 2; sas[0] = 0; sbs[0] = 0
    wants[1] = 0; sas[1] = 0; sbs[1] = 1
    wants[2] = 0; sas[2] = 1; sbs[2] = 0
    wants[3] = 2; sas[3] = 1; sbs[3] = 1
    for i in range(m):
        for j in range(i + 1, m):
            ndef = 0
            ntrue = 0
            for a in range(4):
                st = stat[(2 * i + sas[a]) * 2 * m + (2 * j + sbs[a])]
                if st != 3:
                    ndef += 1
                    if st == wants[a]:
                        ntrue += 1
            if ntrue != 0 and ntrue != ndef:
                return False
    cdef int same = 0 if cbit == 0 else 2
    cdef int opposite = 2 if cbit == 0 else 0
    for j in range(m):
        for sa in range(2):
            st = stat[(2 * j + sa) * 2 * m + (2 * j + sa)]
            if st != 3 and st != same:
                return False
        st = stat[(2 * j) * 2 * m + (2 * j + 1)]
        if st != 3 and st != opposite:
            return False
    return True


def linking_check(masks, n, c):
    """See gerbe._kernels_py.linking_check."""
    cdef long long[16] cm
    cdef int i
    for i in range(n):
        cm[i] = masks[i]
    return bool(_linking_check_c(cm, n, 0 if c == 1 else 1))


def linking_sweep(n, c):
    """See gerbe._kernels_py.linking_sweep."""
    cdef int nn = n
    cdef int cbit = 0 if c == 1 else 1
    cdef int npairs = nn * (nn - 1) // 2
    cdef int[128] pi_
    cdef int[128] pj_
    cdef int b = 0
    cdef int i, j
    for i in range(nn):
        for j in range(i + 1, nn):
            pi_[b] = i
            pj_[b] = j
            b += 1
    cdef long long total = <long long>1 << npairs
    cdef long long em, failures = 0
    cdef long long[16] masks
    for em in range(total):
        for i in range(nn):
            masks[i] = 0
        for b in range(npairs):
            if (em >> b) & 1:
                masks[pi_[b]] |= <long long>1 << pj_[b]
                masks[pj_[b]] |= <long long>1 << pi_[b]
        if not _linking_check_c(masks, nn, cbit):
            failures += 1
    return int(total), int(failures)
