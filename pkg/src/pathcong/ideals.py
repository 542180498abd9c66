"""Relations, relation-generated ideals of the path algebra, and their
correspondence with congruences of the path semigroup.

Relations are monomials (single paths) and differences of two distinct
parallel paths.  A special ideal is the zero ideal or one generated by
relations; it is carried with the exact RREF basis of its underlying
vector space, and that basis is its identity (generating sets are not
unique).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .linalg import PathVector, Subspace, path_vector_to_json, row_reduce, subspace_intersection, subspace_sum
from .quiver import Quiver
from .semigroup import CapExceeded, Congruence, PathSemigroup, build_semigroup


@lru_cache(maxsize=None)
def _semigroup_for(q: Quiver) -> PathSemigroup:
    return build_semigroup(q)


@dataclass(frozen=True)
class Relation:
    """A monomial (``second is None``) or commutative relation on path indices.

    Commutative relations keep the lesser path (in global path order)
    first and vectorize as first - second.
    """

    first: int
    second: int | None = None

    @property
    def is_monomial(self) -> bool:
        return self.second is None

    def vectorize(self) -> PathVector:
        if self.second is None:
            return PathVector({self.first: 1})
        return PathVector({self.first: 1, self.second: -1})

    def display(self, paths) -> str:
        if self.second is None:
            return paths[self.first].name
        return f"{paths[self.first].name} - {paths[self.second].name}"

    def sort_key(self):
        return (0, self.first, -1) if self.second is None else (1, self.first, self.second)


def monomial_relation(i: int) -> Relation:
    return Relation(i)


def commutative_relation(i: int, j: int) -> Relation:
    if i == j:
        raise ValueError("commutative relation needs two distinct paths")
    return Relation(min(i, j), max(i, j))


def _validate_relation(r: Relation, s: PathSemigroup) -> None:
    npaths = len(s.paths)
    if not 0 <= r.first < npaths:
        raise ValueError(f"invalid relation: path index {r.first} out of range")
    if r.second is not None:
        if not 0 <= r.second < npaths or r.second <= r.first:
            raise ValueError("invalid relation: bad second path index")
        a, b = s.paths[r.first], s.paths[r.second]
        if a.source != b.source or a.target != b.target:
            raise ValueError("invalid relation: paths are not parallel")


@lru_cache(maxsize=None)
def all_relations(q: Quiver) -> tuple[Relation, ...]:
    """Every relation: one monomial per path plus one commutative relation
    per unordered pair of distinct parallel paths."""
    s = _semigroup_for(q)
    rels = [Relation(i) for i in range(len(s.paths))]
    by_endpoints: dict[tuple[str, str], list[int]] = {}
    for i, p in enumerate(s.paths):
        by_endpoints.setdefault((p.source, p.target), []).append(i)
    for group in by_endpoints.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                rels.append(Relation(group[a], group[b]))
    return tuple(rels)


class SpecialIdeal:
    """An ideal generated by relations, with its vector space in RREF form.

    Two ideals are equal exactly when their spaces are; the recorded
    generating set is one of possibly many.
    """

    __slots__ = ("quiver", "generators", "space")

    def __init__(self, quiver: Quiver, generators: frozenset[Relation], space: Subspace):
        self.quiver = quiver
        self.generators = generators
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains_vector(self, v: PathVector) -> bool:
        return self.space.contains(v)

    def contains_relation(self, r: Relation) -> bool:
        return self.space.contains(r.vectorize())

    def subset_of(self, other: "SpecialIdeal") -> bool:
        return other.space.contains_subspace(self.space)

    def to_json_dict(self) -> dict:
        paths = _semigroup_for(self.quiver).paths
        names = [p.name for p in paths]
        gens = sorted(self.generators, key=Relation.sort_key)
        return {
            "generators": [g.display(paths) for g in gens],
            "basis": [path_vector_to_json(v, names) for v in self.space.basis],
        }

    def __eq__(self, other):
        return (
            isinstance(other, SpecialIdeal)
            and self.quiver == other.quiver
            and self.space == other.space
        )

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"SpecialIdeal(dim {self.dim})"


def generate_ideal(q: Quiver, gens) -> SpecialIdeal:
    """The ideal generated by the given relations.

    Its space is the span of every nonzero product u*g*v with u, v paths
    (trivial ones included), which closes the span multiplicatively.
    """
    s = _semigroup_for(q)
    gens = frozenset(gens)
    for r in gens:
        _validate_relation(r, s)
    by_target: dict[str, list[int]] = {}
    by_source: dict[str, list[int]] = {}
    for i, p in enumerate(s.paths):
        by_target.setdefault(p.target, []).append(i)
        by_source.setdefault(p.source, []).append(i)
    table = s.table
    vectors = []
    for g in gens:
        head = s.paths[g.first]
        for u in by_target.get(head.source, ()):
            left_first = table[u + 1][g.first + 1]
            left_second = None if g.second is None else table[u + 1][g.second + 1]
            for v in by_source.get(head.target, ()):
                w1 = table[left_first][v + 1] - 1
                if g.second is None:
                    vectors.append(PathVector({w1: 1}))
                else:
                    w2 = table[left_second][v + 1] - 1
                    vectors.append(PathVector({w1: 1, w2: -1}))
    return SpecialIdeal(q, gens, row_reduce(vectors, len(s.paths)))


def zero_ideal(q: Quiver) -> SpecialIdeal:
    return generate_ideal(q, ())


def _require_same_quiver(a: SpecialIdeal, b: SpecialIdeal) -> Quiver:
    if a.quiver != b.quiver:
        raise ValueError("ideals live over different quivers")
    return a.quiver


def ideal_join(a: SpecialIdeal, b: SpecialIdeal) -> SpecialIdeal:
    """Join = sum of the underlying spaces, generated by the union of generators."""
    q = _require_same_quiver(a, b)
    return SpecialIdeal(q, a.generators | b.generators, subspace_sum(a.space, b.space))


def ideal_meet(a: SpecialIdeal, b: SpecialIdeal) -> SpecialIdeal:
    """Meet = ideal generated by the relations inside the space intersection.

    The intersection itself need not be generated by relations, so the
    meet can be strictly smaller than the vector-space intersection.
    """
    q = _require_same_quiver(a, b)
    inter = subspace_intersection(a.space, b.space)
    rels = [r for r in all_relations(q) if inter.contains(r.vectorize())]
    return generate_ideal(q, rels)


def enumerate_special_ideals(q: Quiver, max_elements: int = 20) -> list[SpecialIdeal]:
    """Every special ideal, by join-closure over single-relation ideals.

    Deduplicated by RREF space; ordered by (dimension, basis), so the
    zero ideal comes first and the whole path algebra last.
    """
    s = _semigroup_for(q)
    if s.n > max_elements:
        raise CapExceeded(
            f"semigroup has {s.n} elements; enumeration cap is {max_elements}"
        )
    atoms = []
    seen_atom_keys = set()
    for r in all_relations(q):
        ideal = generate_ideal(q, (r,))
        k = ideal.space.key()
        if k not in seen_atom_keys:
            seen_atom_keys.add(k)
            atoms.append(ideal)
    zero = zero_ideal(q)
    found = {zero.space.key(): zero}
    frontier = [zero]
    while frontier:
        fresh = []
        for cur in frontier:
            for atom in atoms:
                joined = ideal_join(cur, atom)
                k = joined.space.key()
                if k not in found:
                    found[k] = joined
                    fresh.append(joined)
        frontier = fresh
    return sorted(found.values(), key=lambda i: (i.dim, i.space.key()))


def congruence_to_ideal(s: PathSemigroup, c: Congruence) -> SpecialIdeal:
    """The special ideal a congruence determines.

    Nonzero elements of the zero block contribute monomial generators;
    every pair inside any other block contributes a commutative relation.
    """
    if c.semigroup is not s:
        raise ValueError("congruence does not live on this semigroup")
    gens: list[Relation] = []
    for e in c.zero_block:
        if e != 0:
            gens.append(Relation(e - 1))
    for block in c.blocks[1:]:
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                gens.append(commutative_relation(block[i] - 1, block[j] - 1))
    return generate_ideal(s.quiver, gens)


def ideal_to_congruence(s: PathSemigroup, ideal: SpecialIdeal) -> Congruence:
    """The congruence an ideal determines: x ~ y iff their difference lies in it.

    The zero element vectorizes as the zero vector.  Elements are grouped
    by their residues against the ideal's basis (equal residues mean the
    difference reduces to zero).
    """
    if s.quiver != ideal.quiver:
        raise ValueError("ideal lives over a different quiver")
    space = ideal.space
    residues = []
    for e in range(s.n):
        vec = PathVector() if e == 0 else PathVector({e - 1: 1})
        residues.append(tuple((i, c.numerator, c.denominator) for i, c in space.reduce(vec).items()))
    labels = _kernels.canonical_labels(residues)
    if not _kernels.is_congruence_labels(labels, s.table_bytes, s.n):
        raise RuntimeError("residue partition is not a congruence; ideal is not special")
    return Congruence(s, labels)
