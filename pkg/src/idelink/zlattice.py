"""Exact integer matrices and sublattice arithmetic.

Everything downstream (linking matrices, idele coordinates, pushforward
maps, quotient invariants) is phrased over a free ambient group Z^r, so
this module supplies the substrate: immutable arbitrary-precision
integer matrices, sublattices with a canonical Hermite form, and the
handful of subgroup operations the verifiers need.  No floating point
enters anywhere.

Sublattices are generated by matrix *columns*.  Two sublattices of the
same ambient group are equal exactly when their canonical forms are
equal, which makes ``lattice_equal`` a syntactic comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernel


def _check_int(x):
    if type(x) is not int:
        raise TypeError(f"matrix entries must be plain ints, got {type(x).__name__}")
    return x


class IntMatrix:
    """Immutable integer matrix; entries are row-major tuples of ints."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], *, cols: int | None = None):
        rows = tuple(tuple(_check_int(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
        else:
            width = 0 if cols is None else cols
        if width < 0:
            raise ValueError("negative column count")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(
            (tuple(1 if c == r else 0 for c in range(n)) for r in range(n)), cols=n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], *, rows: int | None = None) -> "IntMatrix":
        columns = [tuple(c) for c in columns]
        if columns:
            height = len(columns[0])
            if any(len(c) != height for c in columns):
                raise ValueError("ragged columns")
            if rows is not None and rows != height:
                raise ValueError("rows does not match column height")
        else:
            height = 0 if rows is None else rows
        return cls(
            (tuple(col[r] for col in columns) for r in range(height)),
            cols=len(columns),
        )

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(list(self.entries), rows=self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = []
        for row in self.entries:
            out.append(
                tuple(
                    sum(row[t] * other.entries[t][j] for t in range(self.cols))
                    for j in range(other.cols)
                )
            )
        return IntMatrix(out, cols=other.cols)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(row[t] * vec[t] for t in range(self.cols)) for row in self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def det(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = pivot
        return sign * m[n - 1][n - 1]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]!r}, cols={self.cols})"


@dataclass(frozen=True)
class AbelianInvariants:
    """Isomorphism class of a finitely generated abelian group."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion invariants must be >= 2")
            if prev is not None and d % prev:
                raise ValueError("torsion invariants must form a divisibility chain")
            prev = d

    @property
    def order(self) -> int:
        """Group order, or 0 when the group is infinite."""
        if self.free_rank:
            return 0
        n = 1
        for d in self.torsion:
            n *= d
        return n


@dataclass(frozen=True)
class SubLattice:
    """Subgroup of Z^ambient_rank generated by the columns of ``generators``.

    ``canonical_form`` is the column Hermite normal form, unique for the
    generated subgroup; construct through ``from_matrix``/``from_columns``
    so it is always consistent.
    """

    ambient_rank: int
    generators: IntMatrix
    canonical_form: IntMatrix

    @classmethod
    def from_matrix(cls, generators: IntMatrix) -> "SubLattice":
        canon = hnf(generators)
        return cls(generators.rows, generators, canon)

    @classmethod
    def from_columns(cls, ambient_rank: int, columns: Sequence[Sequence[int]]) -> "SubLattice":
        return cls.from_matrix(IntMatrix.from_columns(columns, rows=ambient_rank))

    @classmethod
    def zero(cls, ambient_rank: int) -> "SubLattice":
        return cls.from_matrix(IntMatrix.zero(ambient_rank, 0))

    @classmethod
    def full(cls, ambient_rank: int) -> "SubLattice":
        return cls.from_matrix(IntMatrix.identity(ambient_rank))

    @property
    def rank(self) -> int:
        return self.canonical_form.cols

    def __eq__(self, other):
        return (
            isinstance(other, SubLattice)
            and self.ambient_rank == other.ambient_rank
            and self.canonical_form == other.canonical_form
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.canonical_form))


def hnf(m: IntMatrix) -> IntMatrix:
    """Canonical column Hermite normal form spanning the same column lattice."""
    cols = kernel.col_hnf(m.rows, [list(c) for c in m.columns()])
    return IntMatrix.from_columns(cols, rows=m.rows)


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: (u, d, v) with u @ m @ v == d.

    u and v are unimodular; d is diagonal, nonnegative, with each
    diagonal entry dividing the next.
    """
    u, d, v = kernel.smith(m.rows, m.cols, [list(r) for r in m.entries])
    return (
        IntMatrix(u, cols=m.rows),
        IntMatrix(d, cols=m.cols),
        IntMatrix(v, cols=m.cols),
    )


def _require_same_ambient(a: SubLattice, b: SubLattice):
    if a.ambient_rank != b.ambient_rank:
        raise ValueError(
            f"ambient rank mismatch: {a.ambient_rank} vs {b.ambient_rank}"
        )


def lattice_sum(a: SubLattice, b: SubLattice) -> SubLattice:
    """Sublattice generated by both generator sets."""
    _require_same_ambient(a, b)
    return SubLattice.from_columns(
        a.ambient_rank, a.canonical_form.columns() + b.canonical_form.columns()
    )


def kernel_lattice(m: IntMatrix) -> SubLattice:
    """Integer kernel {x in Z^cols : m @ x == 0} as a sublattice of Z^cols."""
    _, ker = kernel.col_hnf_with_kernel(m.rows, [list(c) for c in m.columns()])
    return SubLattice.from_columns(m.cols, ker)


def lattice_intersect(a: SubLattice, b: SubLattice) -> SubLattice:
    """Intersection, via the kernel of the juxtaposed generator block."""
    _require_same_ambient(a, b)
    ca = a.canonical_form
    cb = b.canonical_form
    stacked = IntMatrix.from_columns(
        ca.columns() + cb.columns(), rows=a.ambient_rank
    )
    ker = kernel_lattice(stacked)
    na = ca.cols
    vectors = [ca.apply(col[:na]) for col in ker.canonical_form.columns()]
    return SubLattice.from_columns(a.ambient_rank, vectors)


def preimage_lattice(m: IntMatrix, target: SubLattice) -> SubLattice:
    """{x in Z^cols : m @ x lies in target}, a sublattice of Z^cols."""
    if m.rows != target.ambient_rank:
        raise ValueError("matrix rows must match target ambient rank")
    ct = target.canonical_form
    stacked = IntMatrix.from_columns(m.columns() + ct.columns(), rows=m.rows)
    ker = kernel_lattice(stacked)
    vectors = [col[: m.cols] for col in ker.canonical_form.columns()]
    return SubLattice.from_columns(m.cols, vectors)


def _pivot_rows(canon: IntMatrix) -> list[int]:
    pivots = []
    for j in range(canon.cols):
        for i in range(canon.rows):
            if canon.entries[i][j]:
                pivots.append(i)
                break
    return pivots


def _solve_in_hnf(canon: IntMatrix, v: Sequence[int]) -> list[int] | None:
    """Coefficients expressing v over the canonical columns, or None."""
    pivots = _pivot_rows(canon)
    residue = list(v)
    coeffs = [0] * canon.cols
    j = 0
    for i in range(canon.rows):
        if j < len(pivots) and pivots[j] == i:
            p = canon.entries[i][j]
            q, rem = divmod(residue[i], p)
            if rem:
                return None
            if q:
                for t in range(i, canon.rows):
                    residue[t] -= q * canon.entries[t][j]
            coeffs[j] = q
            j += 1
        elif residue[i]:
            return None
    return coeffs


def lattice_member(v: Sequence[int], a: SubLattice) -> bool:
    """True iff v is an integer combination of the generators."""
    if len(v) != a.ambient_rank:
        raise ValueError(f"vector length {len(v)} != ambient rank {a.ambient_rank}")
    for x in v:
        _check_int(x)
    return _solve_in_hnf(a.canonical_form, v) is not None


def lattice_equal(a: SubLattice, b: SubLattice) -> bool:
    """True iff both generate the same subgroup (canonical forms coincide)."""
    _require_same_ambient(a, b)
    return a.canonical_form == b.canonical_form


def quotient_invariants(ambient_rank: int, relations: SubLattice) -> AbelianInvariants:
    """Invariant factors of Z^ambient_rank modulo the relation lattice."""
    if relations.ambient_rank != ambient_rank:
        raise ValueError("relations do not lie in the ambient group")
    canon = relations.canonical_form
    _, d, _ = kernel.smith(
        canon.rows, canon.cols, [list(r) for r in canon.entries]
    )
    diag = [d[i][i] for i in range(min(canon.rows, canon.cols))]
    nonzero = [x for x in diag if x]
    return AbelianInvariants(
        free_rank=ambient_rank - len(nonzero),
        torsion=tuple(x for x in nonzero if x > 1),
    )


def relative_quotient_invariants(outer: SubLattice, inner: SubLattice) -> AbelianInvariants:
    """Invariant factors of outer/inner for nested sublattices."""
    _require_same_ambient(outer, inner)
    coords = []
    for col in inner.canonical_form.columns():
        sol = _solve_in_hnf(outer.canonical_form, col)
        if sol is None:
            raise ValueError("inner lattice is not contained in outer lattice")
        coords.append(sol)
    rank = outer.rank
    return quotient_invariants(rank, SubLattice.from_columns(rank, coords))
