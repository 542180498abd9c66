"""Finite lattices as explicit tables, with the structural predicates.

A lattice is built from its element list plus order/join/meet, which are
materialized into numpy tables and fully verified at construction: order
axioms, least-upper/greatest-lower bound laws, absorption, and bounds.
The cover relation is the transitive reduction of the strict order.

Predicates run exhaustive law scans over the tables and return witnesses
on failure; pentagon and diamond searches are complete scans independent
of the law verdicts, so the two routes cross-check each other.
"""

from __future__ import annotations

import numpy as np


class LatticeError(ValueError):
    """Construction-time violation of a lattice axiom, with a witness."""


class FiniteLattice:
    """Explicit element list with order, join/meet tables, and covers."""

    __slots__ = ("elements", "labels", "leq", "join", "meet", "covers", "bottom", "top")

    def __init__(self, elements, labels, leq, join, meet, covers, bottom, top):
        self.elements = elements
        self.labels = labels
        self.leq = leq
        self.join = join
        self.meet = meet
        self.covers = covers
        self.bottom = bottom
        self.top = top

    @property
    def n(self) -> int:
        return len(self.elements)

    def index_pairs_leq(self):
        return np.argwhere(self.leq)

    def __repr__(self):
        return f"FiniteLattice({self.n} elements, {len(self.covers)} covers)"


def _as_bool_matrix(n, leq, elements):
    if callable(leq):
        mat = np.empty((n, n), dtype=bool)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                mat[i, j] = bool(leq(a, b))
        return mat
    mat = np.asarray(leq, dtype=bool)
    if mat.shape != (n, n):
        raise LatticeError(f"order table has shape {mat.shape}, expected {(n, n)}")
    return mat


def _as_index_table(n, fn, elements, index_of):
    if fn is None:
        return None
    if callable(fn):
        table = np.empty((n, n), dtype=np.intp)
        for i, a in enumerate(elements):
            table[i, i] = i
            for j in range(i + 1, n):
                k = index_of[fn(a, elements[j])]
                table[i, j] = table[j, i] = k
        return table
    table = np.asarray(fn, dtype=np.intp)
    if table.shape != (n, n):
        raise LatticeError(f"table has shape {table.shape}, expected {(n, n)}")
    return table


def _table_from_order(leq: np.ndarray, upper: bool) -> np.ndarray:
    """Join (upper=True) or meet table derived from the order alone.

    Scans a linear extension: the least common upper bound is the first
    common upper bound met when elements are ordered bottom-up.
    """
    n = leq.shape[0]
    if upper:
        above = leq  # row a = elements >= a
        counts = above.sum(axis=1)
    else:
        above = leq.T  # row a = elements <= a
        counts = above.sum(axis=1)
    order = np.argsort(-counts, kind="stable")
    sorted_rows = above[:, order]
    table = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        common = sorted_rows[a][None, :] & sorted_rows
        table[a] = order[np.argmax(common, axis=1)]
    return table


def build_lattice(elements, leq, join_fn=None, meet_fn=None, labels=None) -> FiniteLattice:
    """Materialize and verify a finite lattice.

    ``leq`` is a predicate on element pairs or a precomputed boolean
    matrix; ``join_fn``/``meet_fn`` are binary operations on elements,
    precomputed index tables, or None to derive the tables from the
    order.  Construction fails loudly, with a witness, if any lattice
    axiom does not hold.
    """
    elements = tuple(elements)
    n = len(elements)
    if n == 0:
        raise LatticeError("a lattice needs at least one element")
    if labels is None:
        labels = tuple(str(e) for e in elements)
    else:
        labels = tuple(labels)

    L = _as_bool_matrix(n, leq, elements)
    if not L.diagonal().all():
        i = int(np.flatnonzero(~L.diagonal())[0])
        raise LatticeError(f"order not reflexive at {labels[i]!r}")
    sym = L & L.T
    np.fill_diagonal(sym, False)
    if sym.any():
        i, j = map(int, np.argwhere(sym)[0])
        raise LatticeError(f"order not antisymmetric: {labels[i]!r} and {labels[j]!r}")
    Lf = L.astype(np.float32)
    reach2 = (Lf @ Lf) > 0
    bad = reach2 & ~L
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise LatticeError(f"order not transitive: {labels[i]!r} .. {labels[j]!r}")

    index_of = {e: i for i, e in enumerate(elements)}
    J = _as_index_table(n, join_fn, elements, index_of)
    M = _as_index_table(n, meet_fn, elements, index_of)
    if J is None:
        J = _table_from_order(L, upper=True)
    if M is None:
        M = _table_from_order(L, upper=False)

    ar = np.arange(n)
    _verify_bound_table(L, J, labels, upper=True)
    _verify_bound_table(L, M, labels, upper=False)
    if not (M[ar[:, None], J] == ar[:, None]).all() or not (J[ar[:, None], M] == ar[:, None]).all():
        raise LatticeError("absorption fails")

    bottoms = np.flatnonzero(L.all(axis=1))
    tops = np.flatnonzero(L.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        raise LatticeError("lattice must have a unique bottom and top")

    strict = L.copy()
    np.fill_diagonal(strict, False)
    sf = strict.astype(np.float32)
    skips = (sf @ sf) > 0
    cover_mat = strict & ~skips
    covers = tuple(sorted((int(i), int(j)) for i, j in np.argwhere(cover_mat)))

    L.flags.writeable = False
    J.flags.writeable = False
    M.flags.writeable = False
    return FiniteLattice(elements, labels, L, J, M, covers, int(bottoms[0]), int(tops[0]))


def _verify_bound_table(L: np.ndarray, T: np.ndarray, labels, upper: bool) -> None:
    """Check T[a,b] is the least upper (greatest lower) bound for every pair."""
    n = L.shape[0]
    ar = np.arange(n)
    kind = "join" if upper else "meet"
    rel = L if upper else L.T  # rel[a, x]: x bounds a on the required side
    ok_a = rel[ar[:, None], T]
    ok_b = rel[ar[None, :], T]
    if not (ok_a & ok_b).all():
        a, b = map(int, np.argwhere(~(ok_a & ok_b))[0])
        raise LatticeError(f"{kind}({labels[a]!r}, {labels[b]!r}) is not a common bound")
    for c in range(n):
        inside = np.flatnonzero(rel[:, c])
        sub = T[np.ix_(inside, inside)]
        good = rel[sub.ravel(), c]
        if not good.all():
            flat = int(np.flatnonzero(~good)[0])
            a = int(inside[flat // len(inside)])
            b = int(inside[flat % len(inside)])
            raise LatticeError(
                f"{kind}({labels[a]!r}, {labels[b]!r}) is not extremal against {labels[c]!r}"
            )


def _cover_matrix(lat: FiniteLattice) -> np.ndarray:
    mat = np.zeros((lat.n, lat.n), dtype=bool)
    for i, j in lat.covers:
        mat[i, j] = True
    return mat


def _first_true(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(map(int, hits[0])) if len(hits) else None


def is_distributive(lat: FiniteLattice):
    """Exhaustive check of (a v b) ^ c == (a ^ c) v (b ^ c); witness on failure."""
    J, M = lat.join, lat.meet
    for a in range(lat.n):
        lhs = M[J[a]]
        rhs = J[M[a][None, :], M]
        hit = _first_true(lhs != rhs)
        if hit:
            return False, (a, hit[0], hit[1])
    return True, None


def is_modular(lat: FiniteLattice):
    """Exhaustive check of a <= c implying (a v b) ^ c == a v (b ^ c)."""
    J, M, L = lat.join, lat.meet, lat.leq
    for a in range(lat.n):
        lhs = M[J[a]]
        rhs = J[a, M]
        hit = _first_true((lhs != rhs) & L[a][None, :])
        if hit:
            return False, (a, hit[0], hit[1])
    return True, None


def _semimodularity_parts(lat: FiniteLattice):
    C = _cover_matrix(lat)
    J, M = lat.join, lat.meet
    ar = np.arange(lat.n)
    meet_under_a = C[M, ar[:, None]]  # a covers a ^ b
    meet_under_b = C[M, ar[None, :]]  # b covers a ^ b
    join_over_a = C[ar[:, None], J]  # a v b covers a
    join_over_b = C[ar[None, :], J]  # a v b covers b
    return meet_under_a, meet_under_b, join_over_a, join_over_b


def is_strong_upper_semimodular(lat: FiniteLattice):
    ma, _, _, jb = _semimodularity_parts(lat)
    hit = _first_true(ma & ~jb)
    return (False, hit) if hit else (True, None)


def is_strong_lower_semimodular(lat: FiniteLattice):
    _, mb, ja, _ = _semimodularity_parts(lat)
    hit = _first_true(ja & ~mb)
    return (False, hit) if hit else (True, None)


def is_upper_semimodular(lat: FiniteLattice):
    ma, mb, ja, jb = _semimodularity_parts(lat)
    hit = _first_true((ma & mb) & ~(ja & jb))
    return (False, hit) if hit else (True, None)


def is_lower_semimodular(lat: FiniteLattice):
    ma, mb, ja, jb = _semimodularity_parts(lat)
    hit = _first_true((ja & jb) & ~(ma & mb))
    return (False, hit) if hit else (True, None)


def is_pentagon_sublattice(lat: FiniteLattice, elems) -> bool:
    """True iff the 5-tuple (bottom, lower, upper, side, top) induces an N5."""
    o, p, q, b, i = elems
    if len({o, p, q, b, i}) != 5:
        return False
    L, J, M = lat.leq, lat.join, lat.meet
    chain = L[o, p] and L[p, q] and L[q, i]
    side = L[o, b] and L[b, i]
    incomparable = not (L[b, p] or L[p, b] or L[b, q] or L[q, b])
    return bool(
        chain
        and side
        and incomparable
        and M[b, p] == o
        and M[b, q] == o
        and J[b, p] == i
        and J[b, q] == i
    )


def is_diamond_sublattice(lat: FiniteLattice, elems) -> bool:
    """True iff the 5-tuple (bottom, x, y, z, top) induces an M3."""
    d, x, y, z, u = elems
    if len({d, x, y, z, u}) != 5:
        return False
    J, M = lat.join, lat.meet
    return bool(
        M[x, y] == d and M[x, z] == d and M[y, z] == d
        and J[x, y] == u and J[x, z] == u and J[y, z] == u
    )


def find_pentagon(lat: FiniteLattice):
    """A 5-tuple (bottom, lower, upper, side, top) forming an N5, or None.

    Complete scan over (side, lower, upper) triples; independent of the
    modularity law check.
    """
    L, J, M = lat.leq, lat.join, lat.meet
    n = lat.n
    ar = np.arange(n)
    lt = L.copy()
    np.fill_diagonal(lt, False)
    for b in range(n):
        Mb, Jb = M[b], J[b]
        cond = (
            lt
            & (Mb[:, None] == Mb[None, :])
            & (Jb[:, None] == Jb[None, :])
            & (Mb != ar)[:, None]
            & (Jb != ar)[None, :]
        )
        hit = _first_true(cond)
        if hit:
            p, q = hit
            witness = (int(Mb[p]), p, q, b, int(Jb[p]))
            if is_pentagon_sublattice(lat, witness):
                return witness
            raise RuntimeError("pentagon scan produced a non-pentagon")
    return None


def find_diamond(lat: FiniteLattice):
    """A 5-tuple (bottom, x, y, z, top) forming an M3, or None.

    Complete scan over pairs with a third-element sweep; independent of
    the distributivity law check.
    """
    L, J, M = lat.leq, lat.join, lat.meet
    n = lat.n
    ar = np.arange(n)
    for x in range(n):
        d, u = M[x], J[x]
        incomparable = ~L[x] & ~L[:, x]
        cond = (
            (d[None, :] == d[:, None])
            & (M == d[:, None])
            & (u[None, :] == u[:, None])
            & (J == u[:, None])
            & incomparable[:, None]
            & (ar[:, None] > x)
        )
        hit = _first_true(cond)
        if hit:
            y, z = hit
            witness = (int(d[y]), x, y, z, int(u[y]))
            if is_diamond_sublattice(lat, witness):
                return witness
            raise RuntimeError("diamond scan produced a non-diamond")
    return None


PROPERTY_NAMES = (
    "distributive",
    "modular",
    "strong_upper_semimodular",
    "strong_lower_semimodular",
    "upper_semimodular",
    "lower_semimodular",
)


def lattice_properties(lat: FiniteLattice) -> dict[str, bool]:
    """All six structural predicates, witnesses dropped."""
    return {
        "distributive": is_distributive(lat)[0],
        "modular": is_modular(lat)[0],
        "strong_upper_semimodular": is_strong_upper_semimodular(lat)[0],
        "strong_lower_semimodular": is_strong_lower_semimodular(lat)[0],
        "upper_semimodular": is_upper_semimodular(lat)[0],
        "lower_semimodular": is_lower_semimodular(lat)[0],
    }


def lattice_to_dot(lat: FiniteLattice) -> str:
    """DOT digraph, one node per element and one edge per cover (lower -> upper)."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i, label in enumerate(lat.labels):
        escaped = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{escaped}"];')
    for lo, hi in lat.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_json_dict(lat: FiniteLattice, properties: dict | None = None) -> dict:
    return {
        "elements": list(lat.labels),
        "covers": [[lo, hi] for lo, hi in lat.covers],
        "properties": lattice_properties(lat) if properties is None else properties,
    }
