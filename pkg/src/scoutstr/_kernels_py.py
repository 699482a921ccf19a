"""Pure-Python timed kernels: uninstrumented first-occurrence searches.

These mirror the counted implementations in ``scoutstr.algorithms`` with
all counters stripped, for wall-clock measurement.  Every function takes
two indexable code-point sequences and returns the first-occurrence index
or -1.  The compiled extension in ``_kernels.pyx`` provides the same
surface; ``scoutstr.kernels`` picks whichever is importable.
"""

from __future__ import annotations

ENGINE = "python"

_MASK64 = (1 << 64) - 1
_KR_BASE = 256
_KR_MOD = 2_147_483_629


def brute_force(t, p) -> int:
    n, m = len(t), len(p)
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


def scout(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    len_diff = n - m
    target_pos = -1
    scout_char = -1
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


def scout_variant(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    len_diff = n - m
    target_pos = -1
    scout_char = -1
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


def scout_twin(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    first = [-1] * m
    for k in range(1, m):
        for w in range(k):
            if p[w] == p[k]:
                first[k] = w
                break
    len_diff = n - m
    target_pos = -1
    scout_char = -1
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


def scout_simple(t, p) -> int:
    n, m = len(t), len(p)
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


def scout_sunday(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    shift = [m + 1] * 256
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


def rolling_sum(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    psig = tsig = 0
    for i in range(m):
        psig = (psig + p[i]) & _MASK64
        tsig = (tsig + t[i]) & _MASK64
    for i in range(n - m + 1):
        if psig == tsig:
            j = 0
            while j < m and p[j] == t[i + j]:
                j += 1
            if j == m:
                return i
        if i < n - m:
            tsig = (tsig - t[i] + t[i + m]) & _MASK64
    return -1


def rolling_xor(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    psig = tsig = 0
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
            tsig ^= t[i] ^ t[i + m]
    return -1


def karp_rabin(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    b, q = _KR_BASE, _KR_MOD
    hp = ht = 0
    for i in range(m):
        hp = (hp * b + p[i]) % q
        ht = (ht * b + t[i]) % q
    high = 1
    for _ in range(m - 1):
        high = (high * b) % q
    for i in range(n - m + 1):
        if hp == ht:
            j = 0
            while j < m and p[j] == t[i + j]:
                j += 1
            if j == m:
                return i
        if i < n - m:
            ht = ((ht - t[i] * high) * b + t[i + m]) % q
    return -1


def kmp(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    nxt = [0] * m
    nxt[0] = -1
    i, j = 0, -1
    while i < m - 1:
        while j > -1 and p[i] != p[j]:
            j = nxt[j]
        i += 1
        j += 1
        if p[i] == p[j]:
            nxt[i] = nxt[j]
        else:
            nxt[i] = j
    i, j = 0, 0
    while j < n:
        while i > -1 and p[i] != t[j]:
            i = nxt[i]
        i += 1
        j += 1
        if i >= m:
            return j - m
    return -1


def boyer_moore(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    bc = [m] * 256
    for j in range(m - 1):
        bc[p[j]] = m - 1 - j

    suff = [0] * m
    suff[m - 1] = m
    g, f = m - 1, 0
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
    gs = [m] * m
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
        a += max(gs[j], bc[t[a + j]] - m + 1 + j)
    return -1


def horspool(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    shift = [m] * 256
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


def sunday_quick(t, p) -> int:
    n, m = len(t), len(p)
    if m == 0:
        return 0
    if m > n:
        return -1
    shift = [m + 1] * 256
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
