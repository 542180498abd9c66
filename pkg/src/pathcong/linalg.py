"""Exact rational linear algebra over the path basis, sparse throughout.

Vectors are sparse mappings from basis index to ``fractions.Fraction``;
no approximation ever enters.  Subspaces carry their reduced row-echelon
basis, which is canonical: two subspaces are equal exactly when their
bases are identical.
"""

from __future__ import annotations

from fractions import Fraction

_ONE = Fraction(1)


class PathVector:
    """Sparse vector with exact rational coefficients; zeros are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        data = {}
        for i, c in items:
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                data[int(i)] = c
        self.coeffs = data

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs.get(i, Fraction(0))

    def __iter__(self):
        return iter(sorted(self.coeffs))

    def items(self):
        return sorted(self.coeffs.items())

    @property
    def support(self) -> frozenset:
        return frozenset(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_index(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def __add__(self, other: "PathVector") -> "PathVector":
        data = dict(self.coeffs)
        for i, c in other.coeffs.items():
            v = data.get(i, 0) + c
            if v:
                data[i] = v
            else:
                data.pop(i, None)
        return _wrap(data)

    def __sub__(self, other: "PathVector") -> "PathVector":
        data = dict(self.coeffs)
        for i, c in other.coeffs.items():
            v = data.get(i, 0) - c
            if v:
                data[i] = v
            else:
                data.pop(i, None)
        return _wrap(data)

    def __mul__(self, scalar) -> "PathVector":
        scalar = scalar if isinstance(scalar, Fraction) else Fraction(scalar)
        if not scalar:
            return _wrap({})
        return _wrap({i: c * scalar for i, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "PathVector":
        return _wrap({i: -c for i, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, PathVector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "PathVector(0)"
        terms = " + ".join(f"{c}*[{i}]" for i, c in self.items())
        return f"PathVector({terms})"


def _wrap(data: dict) -> PathVector:
    v = PathVector.__new__(PathVector)
    v.coeffs = data
    return v


def _eliminate(work: dict, rows: dict[int, dict]) -> None:
    """Subtract pivot rows from ``work`` in place until no pivot index remains."""
    for p, row in rows.items():
        c = work.get(p)
        if not c:
            continue
        for i, rc in row.items():
            v = work.get(i, 0) - c * rc
            if v:
                work[i] = v
            else:
                work.pop(i, None)


class Subspace:
    """A subspace of the ambient coordinate space, held as an RREF basis.

    Pivot columns strictly increase, pivots equal 1, and pivot columns
    vanish in every other basis row, so equal spans have identical bases.
    """

    __slots__ = ("dim_ambient", "basis", "_rows", "_key")

    def __init__(self, dim_ambient: int, basis: tuple[PathVector, ...]):
        self.dim_ambient = dim_ambient
        self.basis = basis
        self._rows = {v.leading_index(): v.coeffs for v in basis}
        self._key = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(v.leading_index() for v in self.basis)

    def reduce(self, v: PathVector) -> PathVector:
        """Residual of v after eliminating every pivot; zero iff v lies in the span."""
        work = dict(v.coeffs)
        _eliminate(work, self._rows)
        return _wrap(work)

    def contains(self, v: PathVector) -> bool:
        work = dict(v.coeffs)
        _eliminate(work, self._rows)
        return not work

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.dim > self.dim:
            return False
        return all(self.contains(v) for v in other.basis)

    def coordinates_of(self, v: PathVector):
        """Coefficients of v in the basis (tuple of Fractions), or None."""
        work = dict(v.coeffs)
        coords = []
        for row in self.basis:
            c = work.get(row.leading_index(), Fraction(0))
            coords.append(c)
            if c:
                for i, rc in row.coeffs.items():
                    nv = work.get(i, 0) - c * rc
                    if nv:
                        work[i] = nv
                    else:
                        work.pop(i, None)
        return None if work else tuple(coords)

    def key(self):
        """Canonical hashable form of the basis."""
        if self._key is None:
            self._key = tuple(
                tuple((i, c.numerator, c.denominator) for i, c in v.items())
                for v in self.basis
            )
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.dim_ambient == other.dim_ambient
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash((self.dim_ambient, self.key()))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.dim_ambient})"


def row_reduce(vectors, dim: int) -> Subspace:
    """RREF basis of the span of the given vectors, exactly.

    Idempotent and order-independent: any spanning set of the same space
    produces the identical basis.
    """
    rows: dict[int, dict] = {}
    for v in vectors:
        coeffs = v.coeffs if isinstance(v, PathVector) else dict(v)
        if coeffs and (min(coeffs) < 0 or max(coeffs) >= dim):
            raise ValueError("vector index out of range for ambient dimension")
        work = dict(coeffs)
        _eliminate(work, rows)
        if not work:
            continue
        p = min(work)
        inv = _ONE / work[p]
        new_row = {i: c * inv for i, c in work.items()}
        for row in rows.values():
            c = row.get(p)
            if not c:
                continue
            for i, rc in new_row.items():
                nv = row.get(i, 0) - c * rc
                if nv:
                    row[i] = nv
                else:
                    row.pop(i, None)
        rows[p] = new_row
    basis = tuple(_wrap(dict(rows[p])) for p in sorted(rows))
    return Subspace(dim, basis)


def membership(s: Subspace, v: PathVector) -> bool:
    """True iff v reduces to zero against the basis of s."""
    return s.contains(v)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.dim_ambient != b.dim_ambient:
        raise ValueError("ambient dimensions differ")
    return row_reduce(a.basis + b.basis, a.dim_ambient)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection by the kernel (Zassenhaus) method.

    Row-reduce the block rows (u|u) for u in a and (w|0) for w in b; the
    reduced rows supported entirely in the right block span a ∩ b.
    """
    if a.dim_ambient != b.dim_ambient:
        raise ValueError("ambient dimensions differ")
    d = a.dim_ambient
    rows = []
    for u in a.basis:
        data = dict(u.coeffs)
        data.update({i + d: c for i, c in u.coeffs.items()})
        rows.append(_wrap(data))
    rows.extend(b.basis)
    big = row_reduce(rows, 2 * d)
    inter = [
        _wrap({i - d: c for i, c in v.coeffs.items()})
        for v in big.basis
        if v.leading_index() >= d
    ]
    return row_reduce(inter, d)


def format_path_vector(v: PathVector, names) -> str:
    """Human-readable form like ``alpha - beta + 3/2*gamma``."""
    if v.is_zero:
        return "0"
    parts = []
    for i, c in v.items():
        name = names[i]
        if c == 1:
            term = name
        elif c == -1:
            term = f"-{name}"
        else:
            term = f"{c}*{name}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


def path_vector_to_json(v: PathVector, names) -> dict:
    """JSON form {"path-name": "num/den", ...}; fractions in lowest terms."""
    return {names[i]: str(c) for i, c in v.items()}


def path_vector_from_json(obj: dict, index_by_name) -> PathVector:
    return PathVector({index_by_name[name]: Fraction(val) for name, val in obj.items()})
