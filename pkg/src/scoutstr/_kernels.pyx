# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled timed kernels: uninstrumented first-occurrence searches.

Same surface as ``_kernels_py``; each function takes two contiguous
uint32 buffers of code points and returns the first-occurrence index
or -1.
"""

from libc.stdlib cimport free, malloc

ENGINE = "compiled"

cdef unsigned long long KR_BASE = 256
cdef long long KR_MOD = 2147483629


def brute_force(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t a, j
    if m == 0:
        return 0
    if m > n:
        return -1
    for a in range(n - m + 1):
        j = 0
        while j < m and p[j] == t[a + j]:
            j += 1
        if j == m:
            return a
    return -1


def scout(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t len_diff, target_pos, scout_pos, pattern_pos, tmp_pos
    cdef Py_ssize_t march_bound, march_origin, pending, a, d
    cdef long long scout_char = -1
    cdef bint mismatched
    if m == 0:
        return 0
    if m > n:
        return -1
    len_diff = n - m
    target_pos = -1
    scout_pos = -1
    march_origin = n
    while True:
        target_pos += 1
        if target_pos > len_diff:
            return -1
        mismatched = False
        pending = target_pos
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
            tmp_pos = scout_pos - pattern_pos - 1
            if target_pos < tmp_pos and p[pattern_pos] == scout_char:
                a = target_pos + 1
                while a <= tmp_pos:
                    if a + pattern_pos >= march_origin:
                        a += 1
                        continue
                    d = scout_pos - a
                    if d < m and p[d] != scout_char:
                        a += 1
                        continue
                    break
                if a - 1 > pending:
                    pending = a - 1
        if not mismatched:
            return target_pos
        if pending > target_pos:
            target_pos = pending
            continue
        march_bound = len_diff + pattern_pos
        scout_char = p[pattern_pos]
        scout_pos = target_pos + pattern_pos
        march_origin = scout_pos
        while True:
            scout_pos += 1
            if scout_pos > march_bound:
                return -1
            if scout_char == t[scout_pos]:
                break
        target_pos = scout_pos - pattern_pos - 1


def scout_variant(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t len_diff, target_pos, scout_pos, pattern_pos, tmp_pos
    cdef Py_ssize_t march_bound, march_origin, pending, a, d
    cdef long long scout_char = -1
    cdef bint mismatched
    if m == 0:
        return 0
    if m > n:
        return -1
    len_diff = n - m
    target_pos = -1
    scout_pos = -1
    march_origin = n
    while True:
        target_pos += 1
        if target_pos > len_diff:
            return -1
        mismatched = False
        pending = target_pos
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            tmp_pos = scout_pos - pattern_pos - 1
            if target_pos < tmp_pos and p[pattern_pos] == scout_char:
                a = target_pos + 1
                while a <= tmp_pos:
                    if a + pattern_pos >= march_origin:
                        a += 1
                        continue
                    d = scout_pos - a
                    if d < m and p[d] != scout_char:
                        a += 1
                        continue
                    break
                if a - 1 > pending:
                    pending = a - 1
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
        if not mismatched:
            return target_pos
        if pending > target_pos:
            target_pos = pending
            continue
        march_bound = len_diff + pattern_pos
        scout_char = p[pattern_pos]
        scout_pos = target_pos + pattern_pos
        march_origin = scout_pos
        while True:
            scout_pos += 1
            if scout_pos > march_bound:
                return -1
            if scout_char == t[scout_pos]:
                break
        target_pos = scout_pos - pattern_pos - 1


def scout_twin(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t len_diff, target_pos, scout_pos, pattern_pos, tmp_pos
    cdef Py_ssize_t march_bound, march_origin, pending, a, d, k, w, twin_w
    cdef long long scout_char = -1
    cdef bint mismatched
    cdef Py_ssize_t *first
    if m == 0:
        return 0
    if m > n:
        return -1
    first = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    if first is NULL:
        raise MemoryError()
    try:
        for k in range(m):
            first[k] = -1
        for k in range(1, m):
            for w in range(k):
                if p[w] == p[k]:
                    first[k] = w
                    break
        len_diff = n - m
        target_pos = -1
        scout_pos = -1
        march_origin = n
        twin_w = -1
        while True:
            target_pos += 1
            if target_pos > len_diff:
                return -1
            mismatched = False
            pending = target_pos
            pattern_pos = -1
            while True:
                pattern_pos += 1
                if pattern_pos >= m:
                    break
                if p[pattern_pos] != t[target_pos + pattern_pos]:
                    mismatched = True
                    break
                if pattern_pos == twin_w:
                    tmp_pos = scout_pos - pattern_pos - 1
                    if target_pos < tmp_pos:
                        a = target_pos + 1
                        while a <= tmp_pos:
                            if a + pattern_pos >= march_origin:
                                a += 1
                                continue
                            d = scout_pos - a
                            if d < m and first[d] != twin_w:
                                a += 1
                                continue
                            break
                        if a - 1 > pending:
                            pending = a - 1
            if not mismatched:
                return target_pos
            if pending > target_pos:
                target_pos = pending
                continue
            march_bound = len_diff + pattern_pos
            scout_char = p[pattern_pos]
            twin_w = first[pattern_pos]
            scout_pos = target_pos + pattern_pos
            march_origin = scout_pos
            while True:
                scout_pos += 1
                if scout_pos > march_bound:
                    return -1
                if scout_char == t[scout_pos]:
                    break
            target_pos = scout_pos - pattern_pos - 1
    finally:
        free(first)


def scout_simple(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t len_diff, target_pos, scout_pos, pattern_pos
    cdef unsigned int scout_char
    cdef bint mismatched
    if m == 0:
        return 0
    if m > n:
        return -1
    len_diff = n - m
    target_pos = -1
    while True:
        target_pos += 1
        if target_pos > len_diff:
            return -1
        mismatched = False
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
        if not mismatched:
            return target_pos
        scout_char = p[m - 1]
        scout_pos = target_pos + m - 1
        while True:
            scout_pos += 1
            if scout_pos > n - 1:
                return -1
            if scout_char == t[scout_pos]:
                break
        target_pos = scout_pos - m


def scout_sunday(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t len_diff, target_pos, scout_pos, pattern_pos, candidate, j
    cdef unsigned int scout_char
    cdef bint mismatched
    cdef int shift[256]
    if m == 0:
        return 0
    if m > n:
        return -1
    for j in range(256):
        shift[j] = m + 1
    for j in range(m):
        shift[p[j]] = m - j
    len_diff = n - m
    target_pos = -1
    while True:
        target_pos += 1
        if target_pos > len_diff:
            return -1
        mismatched = False
        pattern_pos = -1
        while True:
            pattern_pos += 1
            if pattern_pos >= m:
                break
            if p[pattern_pos] != t[target_pos + pattern_pos]:
                mismatched = True
                break
        if not mismatched:
            return target_pos
        if target_pos + m >= n:
            return -1
        candidate = target_pos + shift[t[target_pos + m]]
        if candidate > len_diff:
            return -1
        scout_char = p[m - 1]
        scout_pos = candidate + m - 2
        while True:
            scout_pos += 1
            if scout_pos > n - 1:
                return -1
            if scout_char == t[scout_pos]:
                break
        target_pos = scout_pos - m


def rolling_sum(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t i, j
    cdef unsigned long long psig = 0, tsig = 0
    if m == 0:
        return 0
    if m > n:
        return -1
    for i in range(m):
        psig += p[i]
        tsig += t[i]
    for i in range(n - m + 1):
        if psig == tsig:
            j = 0
            while j < m and p[j] == t[i + j]:
                j += 1
            if j == m:
                return i
        if i < n - m:
            tsig -= t[i]
            tsig += t[i + m]
    return -1


def rolling_xor(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t i, j
    cdef unsigned long long psig = 0, tsig = 0
    if m == 0:
        return 0
    if m > n:
        return -1
    for i in range(m):
        psig ^= p[i]
        tsig ^= t[i]
    for i in range(n - m + 1):
        if psig == tsig:
            j = 0
            while j < m and p[j] == t[i + j]:
                j += 1
            if j == m:
                return i
        if i < n - m:
            tsig ^= t[i]
            tsig ^= t[i + m]
    return -1


def karp_rabin(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t i, j
    cdef long long hp = 0, ht = 0, high = 1
    if m == 0:
        return 0
    if m > n:
        return -1
    for i in range(m):
        hp = (hp * <long long> KR_BASE + p[i]) % KR_MOD
        ht = (ht * <long long> KR_BASE + t[i]) % KR_MOD
    for i in range(m - 1):
        high = (high * <long long> KR_BASE) % KR_MOD
    for i in range(n - m + 1):
        if hp == ht:
            j = 0
            while j < m and p[j] == t[i + j]:
                j += 1
            if j == m:
                return i
        if i < n - m:
            ht = ((ht - t[i] * high) * <long long> KR_BASE + t[i + m]) % KR_MOD
            if ht < 0:
                ht += KR_MOD
    return -1


def kmp(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t i, j
    cdef Py_ssize_t *nxt
    if m == 0:
        return 0
    if m > n:
        return -1
    nxt = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    if nxt is NULL:
        raise MemoryError()
    try:
        nxt[0] = -1
        i = 0
        j = -1
        while i < m - 1:
            while j > -1 and p[i] != p[j]:
                j = nxt[j]
            i += 1
            j += 1
            if p[i] == p[j]:
                nxt[i] = nxt[j]
            else:
                nxt[i] = j
        i = 0
        j = 0
        while j < n:
            while i > -1 and p[i] != t[j]:
                i = nxt[i]
            i += 1
            j += 1
            if i >= m:
                return j - m
        return -1
    finally:
        free(nxt)


def boyer_moore(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t a, i, j, g, f, shift
    cdef int bc[256]
    cdef Py_ssize_t *suff
    cdef Py_ssize_t *gs
    if m == 0:
        return 0
    if m > n:
        return -1
    for i in range(256):
        bc[i] = m
    for j in range(m - 1):
        bc[p[j]] = m - 1 - j

    suff = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    gs = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    if suff is NULL or gs is NULL:
        free(suff)
        free(gs)
        raise MemoryError()
    try:
        suff[m - 1] = m
        g = m - 1
        f = 0
        for i in range(m - 2, -1, -1):
            if i > g and suff[i + m - 1 - f] < i - g:
                suff[i] = suff[i + m - 1 - f]
                continue
            if i < g:
                g = i
            f = i
            while g >= 0 and p[g] == p[g + m - 1 - f]:
                g -= 1
            suff[i] = f - g
        for i in range(m):
            gs[i] = m
        j = 0
        for i in range(m - 1, -1, -1):
            if suff[i] == i + 1:
                while j < m - 1 - i:
                    if gs[j] == m:
                        gs[j] = m - 1 - i
                    j += 1
        for i in range(m - 1):
            gs[m - 1 - suff[i]] = m - 1 - i

        a = 0
        while a <= n - m:
            j = m - 1
            while j >= 0 and p[j] == t[a + j]:
                j -= 1
            if j < 0:
                return a
            shift = bc[t[a + j]] - m + 1 + j
            if gs[j] > shift:
                shift = gs[j]
            a += shift
        return -1
    finally:
        free(suff)
        free(gs)


def horspool(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t a, j
    cdef unsigned int last
    cdef int shift[256]
    if m == 0:
        return 0
    if m > n:
        return -1
    for j in range(256):
        shift[j] = m
    for j in range(m - 1):
        shift[p[j]] = m - 1 - j
    a = 0
    while a <= n - m:
        last = t[a + m - 1]
        if p[m - 1] == last:
            j = 0
            while j < m - 1 and p[j] == t[a + j]:
                j += 1
            if j == m - 1:
                return a
        a += shift[last]
    return -1


def sunday_quick(const unsigned int[::1] t, const unsigned int[::1] p):
    cdef Py_ssize_t n = t.shape[0], m = p.shape[0]
    cdef Py_ssize_t a, j
    cdef int shift[256]
    if m == 0:
        return 0
    if m > n:
        return -1
    for j in range(256):
        shift[j] = m + 1
    for j in range(m):
        shift[p[j]] = m - j
    a = 0
    while a <= n - m:
        j = 0
        while j < m and p[j] == t[a + j]:
            j += 1
        if j == m:
            return a
        if a + m >= n:
            return -1
        a += shift[t[a + m]]
    return -1
