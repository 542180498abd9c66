"""Pure-Python partition kernels.

Partitions of range(n) travel as length-n ``bytes`` whose entries are
block labels in restricted-growth form: element 0 carries label 0 and
each new label is one more than the running maximum.  Multiplication
tables travel as row-major ``bytes`` of length n*n, which limits these
kernels to semigroups with at most 255 elements (far beyond the
enumeration caps that call them).

The compiled backend in ``_ckern`` implements the same functions; see
``pathcong._kernels`` for the dispatch.
"""

from __future__ import annotations


def canonical_labels(labels) -> bytes:
    """Relabel an arbitrary label sequence into restricted-growth form."""
    relabel: dict = {}
    out = bytearray(len(labels))
    for i, lab in enumerate(labels):
        if lab in relabel:
            out[i] = relabel[lab]
        else:
            out[i] = relabel[lab] = len(relabel)
    return bytes(out)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def join_labels(p: bytes, q: bytes) -> bytes:
    """Smallest common coarsening of two partitions (transitive closure of the union)."""
    n = len(p)
    parent = list(range(n))
    for labels in (p, q):
        first: dict[int, int] = {}
        for i in range(n):
            lab = labels[i]
            if lab in first:
                ri, rj = _find(parent, first[lab]), _find(parent, i)
                if ri != rj:
                    parent[rj] = ri
            else:
                first[lab] = i
    return canonical_labels([_find(parent, i) for i in range(n)])


def meet_labels(p: bytes, q: bytes) -> bytes:
    """Common refinement of two partitions (pairwise block intersections)."""
    return canonical_labels(list(zip(p, q)))


def principal_labels(mult: bytes, n: int, x: int, y: int) -> bytes:
    """Least congruence containing (x, y): closure of all pairs (a*x*b, a*y*b).

    The factors a and b range over the semigroup plus a formal identity,
    so products with either factor absent are included.
    """
    parent = list(range(n))
    for a in range(n + 1):
        ax = x if a == n else mult[a * n + x]
        ay = y if a == n else mult[a * n + y]
        for b in range(n + 1):
            u = ax if b == n else mult[ax * n + b]
            v = ay if b == n else mult[ay * n + b]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    return canonical_labels([_find(parent, i) for i in range(n)])


def is_congruence_labels(p, mult: bytes, n: int) -> bool:
    """Left/right compatibility of a partition with the multiplication table."""
    for x in range(n):
        px = p[x]
        for y in range(x + 1, n):
            if p[y] != px:
                continue
            xn, yn = x * n, y * n
            for a in range(n):
                an = a * n
                if p[mult[an + x]] != p[mult[an + y]]:
                    return False
                if p[mult[xn + a]] != p[mult[yn + a]]:
                    return False
    return True


def congruences_bruteforce(mult: bytes, n: int) -> list[bytes]:
    """All congruence partitions, by filtering every set partition of range(n).

    Iterates restricted-growth strings, so the caller must keep n small
    (Bell-number growth).
    """
    if n == 0:
        return [b""]
    results = []
    a = bytearray(n)
    b = bytearray(n)
    for j in range(1, n):
        b[j] = 1
    while True:
        if is_congruence_labels(a, mult, n):
            results.append(bytes(a))
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            break
        a[j] += 1
        m = b[j] if b[j] > a[j] else a[j] + 1
        for k in range(j + 1, n):
            a[k] = 0
            b[k] = m
    return results
