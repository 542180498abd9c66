"""The path semigroup of an acyclic quiver and the congruences on it."""

from __future__ import annotations

from . import _kernels
from .quiver import Quiver, enumerate_paths


class CapExceeded(Exception):
    """An enumeration was asked to run past its configured size cap."""


class _Zero:
    """The absorbing zero element; a process-wide singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"


ZERO = _Zero()


class PathSemigroup:
    """All paths of an acyclic quiver plus an absorbing zero, with its table.

    Element 0 is the zero; element i >= 1 is ``paths[i-1]`` in path
    enumeration order.  ``table[i][j]`` is the index of the product:
    concatenation when the endpoints meet, zero otherwise.
    """

    __slots__ = ("quiver", "paths", "table", "n", "_table_bytes", "_name_to_index")

    def __init__(self, quiver: Quiver, paths, table):
        self.quiver = quiver
        self.paths = tuple(paths)
        self.table = table
        self.n = len(self.paths) + 1
        self._table_bytes = None
        self._name_to_index = {"0": 0}
        for i, p in enumerate(self.paths, start=1):
            self._name_to_index[p.name] = i

    @property
    def elements(self):
        return (ZERO,) + self.paths

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_name(self, i: int) -> str:
        return "0" if i == 0 else self.paths[i - 1].name

    def index_by_name(self, name: str) -> int:
        return self._name_to_index[name]

    @property
    def table_bytes(self) -> bytes:
        """Row-major table encoding for the kernels (needs n <= 255)."""
        if self._table_bytes is None:
            if self.n > 255:
                raise CapExceeded(
                    f"semigroup with {self.n} elements exceeds the kernel table limit of 255"
                )
            self._table_bytes = bytes(v for row in self.table for v in row)
        return self._table_bytes

    def idempotents(self) -> list[int]:
        return [i for i in range(self.n) if self.table[i][i] == i]

    def __repr__(self):
        return f"PathSemigroup({self.n} elements)"


def build_semigroup(q: Quiver) -> PathSemigroup:
    """Construct the path semigroup with its full multiplication table.

    Rejects cyclic quivers (the path set would be infinite).
    """
    paths = tuple(enumerate_paths(q))
    index: dict = {}
    for i, p in enumerate(paths, start=1):
        index[p.base if p.is_trivial else p.arrows] = i
    n = len(paths) + 1
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(paths, start=1):
        row = table[i]
        for j, r in enumerate(paths, start=1):
            if p.target != r.source:
                continue
            arrows = p.arrows + r.arrows
            row[j] = index[arrows if arrows else p.base]
    return PathSemigroup(q, paths, tuple(tuple(row) for row in table))


class Congruence:
    """A partition of the semigroup's elements compatible with multiplication.

    ``labels`` holds the canonical restricted-growth form: block k's least
    element grows with k, so the ``blocks`` view is automatically sorted
    by least element with each block ascending.
    """

    __slots__ = ("semigroup", "labels", "_blocks")

    def __init__(self, semigroup: PathSemigroup, labels: bytes):
        self.semigroup = semigroup
        self.labels = labels
        self._blocks = None

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        if self._blocks is None:
            groups = [[] for _ in range(max(self.labels) + 1)]
            for i, lab in enumerate(self.labels):
                groups[lab].append(i)
            self._blocks = tuple(tuple(b) for b in groups)
        return self._blocks

    @property
    def num_blocks(self) -> int:
        return max(self.labels) + 1

    @property
    def zero_block(self) -> tuple[int, ...]:
        """The block of the zero element (always block 0 in canonical form)."""
        return self.blocks[0]

    def same_block(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    @property
    def is_identity(self) -> bool:
        return self.num_blocks == self.semigroup.n

    @property
    def is_universal(self) -> bool:
        return self.num_blocks == 1

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of self lies inside one block of other."""
        image: dict[int, int] = {}
        for a, b in zip(self.labels, other.labels):
            if a in image:
                if image[a] != b:
                    return False
            else:
                image[a] = b
        return True

    def validate(self) -> None:
        """Raise if the partition is not compatible with multiplication."""
        s = self.semigroup
        if not _kernels.is_congruence_labels(self.labels, s.table_bytes, s.n):
            raise ValueError("partition is not compatible with multiplication")

    def to_json_dict(self) -> dict:
        name = self.semigroup.element_name
        return {"blocks": [[name(i) for i in block] for block in self.blocks]}

    def __eq__(self, other):
        return (
            isinstance(other, Congruence)
            and self.semigroup is other.semigroup
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        name = self.semigroup.element_name
        body = " ".join(
            "{" + ",".join(name(i) for i in block) + "}" for block in self.blocks
        )
        return f"Congruence({body})"


def _require_same_semigroup(a: Congruence, b: Congruence) -> PathSemigroup:
    if a.semigroup is not b.semigroup:
        raise ValueError("congruences live on different semigroups")
    return a.semigroup


def identity_congruence(s: PathSemigroup) -> Congruence:
    return Congruence(s, bytes(range(s.n)))


def universal_congruence(s: PathSemigroup) -> Congruence:
    return Congruence(s, bytes(s.n))


def congruence_from_blocks(s: PathSemigroup, blocks) -> Congruence:
    """Build a congruence from element-index blocks, validating everything."""
    labels = [-1] * s.n
    for k, block in enumerate(blocks):
        for i in block:
            if not 0 <= i < s.n or labels[i] != -1:
                raise ValueError("blocks do not form a partition of the elements")
            labels[i] = k
    if -1 in labels:
        raise ValueError("blocks do not cover every element")
    c = Congruence(s, _kernels.canonical_labels(labels))
    c.validate()
    return c


def congruence_from_json(s: PathSemigroup, obj: dict) -> Congruence:
    blocks = [[s.index_by_name(name) for name in block] for block in obj["blocks"]]
    return congruence_from_blocks(s, blocks)


def principal_congruence(s: PathSemigroup, x: int, y: int) -> Congruence:
    """The least congruence identifying x and y."""
    if not (0 <= x < s.n and 0 <= y < s.n):
        raise ValueError(f"element index out of range: {x}, {y}")
    return Congruence(s, _kernels.principal_labels(s.table_bytes, s.n, x, y))


def _compatibility_closure(labels: bytes, s: PathSemigroup) -> bytes:
    """Close a partition under left/right multiplication by brute iteration."""
    n = s.n
    table = s.table
    current = labels
    while True:
        changed = False
        merged = list(current)
        for x in range(n):
            for y in range(x + 1, n):
                if merged[x] != merged[y]:
                    continue
                for a in range(n):
                    for u, v in ((table[a][x], table[a][y]), (table[x][a], table[y][a])):
                        if merged[u] != merged[v]:
                            lo, hi = sorted((merged[u], merged[v]))
                            merged = [lo if lab == hi else lab for lab in merged]
                            changed = True
        current = _kernels.canonical_labels(merged)
        if not changed:
            return current


def join_congruences(a: Congruence, b: Congruence) -> Congruence:
    """Least congruence containing both (transitive closure of the union)."""
    s = _require_same_semigroup(a, b)
    labels = _kernels.join_labels(a.labels, b.labels)
    # The closure of a union of congruences is already compatible; re-close
    # defensively if that check ever fails.
    if not _kernels.is_congruence_labels(labels, s.table_bytes, s.n):
        labels = _compatibility_closure(labels, s)
    return Congruence(s, labels)


def meet_congruences(a: Congruence, b: Congruence) -> Congruence:
    """Common refinement (intersection of the relations); always a congruence."""
    s = _require_same_semigroup(a, b)
    return Congruence(s, _kernels.meet_labels(a.labels, b.labels))


def _sorted_congruences(s: PathSemigroup, label_set) -> list[Congruence]:
    # finest partitions first, ties in label order: identity lands at index 0,
    # the universal congruence last
    ordered = sorted(label_set, key=lambda lab: (s.n - (max(lab) + 1), lab))
    return [Congruence(s, lab) for lab in ordered]


def enumerate_congruences(s: PathSemigroup, max_elements: int = 20) -> list[Congruence]:
    """Every congruence on s, by join-closure over principal congruences.

    Seeds with the identity and repeatedly joins with principal
    congruences of all pairs until nothing new appears; complete because
    every congruence is the join of the principal congruences it
    contains.  Refuses semigroups above ``max_elements``.
    """
    if s.n > max_elements:
        raise CapExceeded(
            f"semigroup has {s.n} elements; enumeration cap is {max_elements}"
        )
    mult = s.table_bytes
    n = s.n
    identity = bytes(range(n))
    atoms: list[bytes] = []
    seen_atoms = set()
    for x in range(n):
        for y in range(x + 1, n):
            lab = _kernels.principal_labels(mult, n, x, y)
            if lab not in seen_atoms:
                seen_atoms.add(lab)
                atoms.append(lab)
    seen = {identity}
    frontier = [identity]
    join = _kernels.join_labels
    while frontier:
        fresh = []
        for cur in frontier:
            for atom in atoms:
                j = join(cur, atom)
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
        frontier = fresh
    return _sorted_congruences(s, seen)


def enumerate_congruences_bruteforce(s: PathSemigroup, max_elements: int = 10) -> list[Congruence]:
    """Every congruence on s, by filtering all set partitions.

    Independent of :func:`enumerate_congruences`; Bell-number growth caps
    it at small semigroups.
    """
    if s.n > max_elements:
        raise CapExceeded(
            f"semigroup has {s.n} elements; brute-force cap is {max_elements}"
        )
    labels = _kernels.congruences_bruteforce(s.table_bytes, s.n)
    return _sorted_congruences(s, labels)


def is_rees(c: Congruence) -> bool:
    """True iff c collapses a semigroup ideal and nothing else.

    Equivalently: every block other than the zero block is a singleton.
    """
    return all(len(block) == 1 for block in c.blocks[1:])
