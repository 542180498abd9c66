# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled partition kernels; same contract as ``_pykern``.

Partitions are length-n bytes in restricted-growth form, multiplication
tables row-major bytes of length n*n, n <= 255.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef inline int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(int* parent, int a, int b) nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    if ra == rb:
        return
    if ra < rb:
        parent[rb] = ra
    else:
        parent[ra] = rb


cdef bytes _canonical_from_ints(int* labels, int n):
    cdef bytearray out = bytearray(n)
    cdef int relabel[256]
    cdef int nxt = 0
    cdef int i, lab
    memset(relabel, -1, sizeof(relabel))
    for i in range(n):
        lab = labels[i]
        if relabel[lab] < 0:
            relabel[lab] = nxt
            nxt += 1
        out[i] = relabel[lab]
    return bytes(out)


def canonical_labels(labels) -> bytes:
    """Relabel an arbitrary label sequence into restricted-growth form."""
    # labels may carry arbitrary hashable values; keep the generic path
    relabel = {}
    out = bytearray(len(labels))
    cdef int i = 0
    for lab in labels:
        if lab in relabel:
            out[i] = relabel[lab]
        else:
            out[i] = relabel[lab] = len(relabel)
        i += 1
    return bytes(out)


def join_labels(bytes p, bytes q) -> bytes:
    """Smallest common coarsening of two partitions."""
    cdef int n = len(p)
    cdef const unsigned char* pp = p
    cdef const unsigned char* qq = q
    cdef int* parent = <int*> malloc(n * sizeof(int))
    cdef int* first = <int*> malloc(256 * sizeof(int))
    cdef int* labels = <int*> malloc(n * sizeof(int))
    cdef int i, lab
    if parent == NULL or first == NULL or labels == NULL:
        free(parent); free(first); free(labels)
        raise MemoryError()
    try:
        for i in range(n):
            parent[i] = i
        memset(first, -1, 256 * sizeof(int))
        for i in range(n):
            lab = pp[i]
            if first[lab] < 0:
                first[lab] = i
            else:
                _union(parent, first[lab], i)
        memset(first, -1, 256 * sizeof(int))
        for i in range(n):
            lab = qq[i]
            if first[lab] < 0:
                first[lab] = i
            else:
                _union(parent, first[lab], i)
        for i in range(n):
            labels[i] = _find(parent, i)
        return _canonical_from_ints(labels, n)
    finally:
        free(parent); free(first); free(labels)


def meet_labels(bytes p, bytes q) -> bytes:
    """Common refinement of two partitions."""
    cdef int n = len(p)
    cdef const unsigned char* pp = p
    cdef const unsigned char* qq = q
    cdef bytearray out = bytearray(n)
    # at most n distinct pair codes; a linear scan beats any table at this size
    cdef int codes[256]
    cdef int ncodes = 0
    cdef int i, j, code, lab
    for i in range(n):
        code = ((<int> pp[i]) << 8) | qq[i]
        lab = -1
        for j in range(ncodes):
            if codes[j] == code:
                lab = j
                break
        if lab < 0:
            codes[ncodes] = code
            lab = ncodes
            ncodes += 1
        out[i] = lab
    return bytes(out)


def principal_labels(bytes mult, int n, int x, int y) -> bytes:
    """Least congruence containing (x, y): closure of all pairs (a*x*b, a*y*b)."""
    cdef const unsigned char* m = mult
    cdef int* parent = <int*> malloc(n * sizeof(int))
    cdef int* labels = <int*> malloc(n * sizeof(int))
    cdef int a, b, ax, ay, u, v, i
    if parent == NULL or labels == NULL:
        free(parent); free(labels)
        raise MemoryError()
    try:
        for i in range(n):
            parent[i] = i
        for a in range(n + 1):
            if a == n:
                ax = x; ay = y
            else:
                ax = m[a * n + x]; ay = m[a * n + y]
            for b in range(n + 1):
                if b == n:
                    u = ax; v = ay
                else:
                    u = m[ax * n + b]; v = m[ay * n + b]
                _union(parent, u, v)
        for i in range(n):
            labels[i] = _find(parent, i)
        return _canonical_from_ints(labels, n)
    finally:
        free(parent); free(labels)


cdef bint _is_congruence(const unsigned char* p, const unsigned char* m, int n) nogil:
    cdef int x, y, a, xn, yn, an
    for x in range(n):
        for y in range(x + 1, n):
            if p[y] != p[x]:
                continue
            xn = x * n; yn = y * n
            for a in range(n):
                an = a * n
                if p[m[an + x]] != p[m[an + y]]:
                    return 0
                if p[m[xn + a]] != p[m[yn + a]]:
                    return 0
    return 1


def is_congruence_labels(p, bytes mult, int n) -> bool:
    """Left/right compatibility of a partition with the multiplication table."""
    cdef bytes pb = bytes(p)
    cdef const unsigned char* pp = pb
    cdef const unsigned char* m = mult
    return bool(_is_congruence(pp, m, n))


def congruences_bruteforce(bytes mult, int n) -> list:
    """All congruence partitions, by filtering every set partition of range(n)."""
    cdef const unsigned char* m = mult
    cdef unsigned char a[256]
    cdef unsigned char b[256]
    cdef int j, k, mx
    cdef list results = []
    if n == 0:
        return [b""]
    memset(a, 0, sizeof(a))
    memset(b, 0, sizeof(b))
    for j in range(1, n):
        b[j] = 1
    while True:
        if _is_congruence(a, m, n):
            results.append((<char*> a)[:n])
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            break
        a[j] += 1
        mx = b[j] if b[j] > a[j] else a[j] + 1
        for k in range(j + 1, n):
            a[k] = 0
            b[k] = mx
    return results
