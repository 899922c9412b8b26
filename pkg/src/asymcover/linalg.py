"""Exact linear algebra over the rationals and prime fields.

Scalars are plain Python objects: :class:`fractions.Fraction` for the
rational field and ``int`` residues in ``range(p)`` for GF(p).  All
matrices use the row-vector convention; a subspace is always stored by
its reduced row-echelon basis, so two subspaces are equal exactly when
their bases are equal row by row.

Elimination works on sparse rows (``dict`` column -> value); most of the
matrices met downstream (structure constants of path algebras, action
matrices, intertwining systems) are very sparse.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rational field (``characteristic == 0``) or GF(p)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")
        if c >= 2**31:
            raise ValueError("only word-sized primes are supported")

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, or a ``"num/den"`` string) into the field."""
        p = self.characteristic
        if isinstance(x, str):
            x = Fraction(x.strip())
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def elements(self):
        if self.characteristic == 0:
            raise ValueError("the rational field is infinite")
        return range(self.characteristic)

    def fmt(self, x) -> str:
        if self.characteristic == 0:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x))

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# sparse elimination engine


class Echelon:
    """Incrementally maintained reduced row-echelon form of a row span.

    Rows are sparse dicts with pivot coefficient 1; every pivot column is
    zero in all other rows, so the sorted rows are the unique RREF.
    """

    __slots__ = ("p", "ncols", "rows")

    def __init__(self, field: Field, ncols: int):
        self.p = field.characteristic
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        """Return ``v`` minus its component in the current span (zero at all pivots)."""
        p = self.p
        v = dict(v)
        rows = self.rows
        for c in [c for c in v if c in rows]:
            f = v.get(c)
            if not f:
                continue
            for k, x in rows[c].items():
                y = v.get(k, 0) - f * x
                if p:
                    y %= p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, v: dict) -> bool:
        """Insert ``v``; returns True when the span grew."""
        v = self.reduce(v)
        if not v:
            return False
        p = self.p
        c = min(v)
        lead = v[c]
        if p:
            inv = pow(lead, -1, p)
            v = {k: x * inv % p for k, x in v.items()}
        elif lead != 1:
            v = {k: x / lead for k, x in v.items()}
        for r in self.rows.values():
            f = r.get(c)
            if not f:
                continue
            for k, x in v.items():
                y = r.get(k, 0) - f * x
                if p:
                    y %= p
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
        self.rows[c] = v
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def dense_rows(self, field: Field) -> tuple:
        z = field.zero
        out = []
        for c in sorted(self.rows):
            row = [z] * self.ncols
            for k, x in self.rows[c].items():
                row[k] = x
            out.append(tuple(row))
        return tuple(out)


def _sparse(row: Sequence) -> dict:
    return {i: x for i, x in enumerate(row) if x}


# ---------------------------------------------------------------------------
# dense matrices


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix over ``field``; ``rows`` is a tuple of tuples."""

    field: Field
    nrows: int
    ncols: int
    rows: tuple
    _sp: object = dc_field(default=None, compare=False, repr=False)

    def sparse_rows(self) -> tuple:
        """Per row, the tuple of nonzero ``(column, value)`` pairs (cached)."""
        sp = self._sp
        if sp is None:
            sp = tuple(tuple((j, y) for j, y in enumerate(r) if y) for r in self.rows)
            object.__setattr__(self, "_sp", sp)
        return sp

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable], ncols: int | None = None) -> "Mat":
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def _raw(cls, field, rows, ncols) -> "Mat":
        # rows already coerced to field scalars
        return cls(field, len(rows), ncols, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int) -> "Mat":
        z = field.zero
        return cls(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Mat":
        if self.nrows == 0:
            return Mat.zero(self.field, self.ncols, 0)
        return Mat(self.field, self.ncols, self.nrows, tuple(zip(*self.rows)))

    T = property(transpose)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.field.characteristic
        z = self.field.zero
        n = other.ncols
        osp = other.sparse_rows()
        out = []
        for r in self.sparse_rows():
            acc = [z] * n
            for k, x in r:
                for j, y in osp[k]:
                    acc[j] += x * y
            if p:
                acc = [a % p for a in acc]
            out.append(tuple(acc))
        return Mat(self.field, self.nrows, n, tuple(out))

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        p = self.field.characteristic
        rows = tuple(
            tuple(((a + b) % p if p else a + b) for a, b in zip(r, s))
            for r, s in zip(self.rows, other.rows)
        )
        return Mat(self.field, self.nrows, self.ncols, rows)

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        c = self.field(c)
        p = self.field.characteristic
        rows = tuple(tuple(((c * a) % p if p else c * a) for a in r) for r in self.rows)
        return Mat(self.field, self.nrows, self.ncols, rows)

    def vecmul(self, v: Sequence) -> tuple:
        """Row vector times matrix."""
        p = self.field.characteristic
        acc = [self.field.zero] * self.ncols
        sp = self.sparse_rows()
        for k, x in enumerate(v):
            if not x:
                continue
            for j, y in sp[k]:
                acc[j] += x * y
        if p:
            return tuple(a % p for a in acc)
        return tuple(acc)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def hstack(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise DimensionError("row counts differ")
        return Mat(self.field, self.nrows, self.ncols + other.ncols,
                   tuple(a + b for a, b in zip(self.rows, other.rows)))

    def vstack(self, other: "Mat") -> "Mat":
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return Mat(self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def rank(self) -> int:
        return rref(self)[1]

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in r) for r in self.rows)
        return f"Mat[{self.field}]({self.nrows}x{self.ncols}: {body})"


def rref(m: Mat):
    """Reduced row-echelon form: returns ``(R, rank, pivot_columns)``; R has the shape of m."""
    ech = Echelon(m.field, m.ncols)
    for r in m.rows:
        if any(r):
            ech.add(_sparse(r))
    rows = ech.dense_rows(m.field)
    rank = len(rows)
    z = m.field.zero
    rows = rows + tuple((z,) * m.ncols for _ in range(m.nrows - rank))
    return Mat(m.field, m.nrows, m.ncols, rows), rank, ech.pivots()


def _kernel_from_echelon(field: Field, ech: Echelon, ncols: int) -> list[tuple]:
    piv = ech.rows
    free = [c for c in range(ncols) if c not in piv]
    p = field.characteristic
    z, o = field.zero, field.one
    out = []
    for fcol in free:
        x = [z] * ncols
        x[fcol] = o
        for c, row in piv.items():
            v = row.get(fcol)
            if v:
                x[c] = (-v) % p if p else -v
        out.append(tuple(x))
    return out


def kernel_basis(m: Mat) -> "Subspace":
    """Right null space ``{x : m x = 0}`` as a canonical subspace of ``field^cols``."""
    ech = Echelon(m.field, m.ncols)
    for r in m.rows:
        if any(r):
            ech.add(_sparse(r))
    return Subspace.span(m.field, m.ncols, _kernel_from_echelon(m.field, ech, m.ncols))


def left_kernel(m: Mat) -> "Subspace":
    """``{x : x m = 0}``."""
    return kernel_basis(m.transpose())


def solve(m: Mat, rhs: Mat):
    """Some ``x`` with ``m @ x == rhs``, or ``None`` when the system is inconsistent."""
    if m.nrows != rhs.nrows:
        raise DimensionError(f"row counts differ: {m.nrows} vs {rhs.nrows}")
    n, k = m.ncols, rhs.ncols
    ech = Echelon(m.field, n + k)
    for a, b in zip(m.rows, rhs.rows):
        row = a + b
        if any(row):
            ech.add(_sparse(row))
    if any(c >= n for c in ech.rows):
        return None
    z = m.field.zero
    x = [[z] * k for _ in range(n)]
    for c, row in ech.rows.items():
        for j in range(k):
            v = row.get(n + j)
            if v:
                x[c][j] = v
    return Mat(m.field, n, k, tuple(tuple(r) for r in x))


def solve_left(m: Mat, rhs: Mat):
    """Some ``x`` with ``x @ m == rhs`` (row-vector form), or ``None``."""
    x = solve(m.transpose(), rhs.transpose())
    return None if x is None else x.transpose()


def determinant(m: Mat):
    if m.nrows != m.ncols:
        raise DimensionError("determinant of a non-square matrix")
    f = m.field
    p = f.characteristic
    a = [list(r) for r in m.rows]
    n = m.nrows
    det = f.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return f.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = f.inv(a[c][c])
        for r in range(c + 1, n):
            g = a[r][c]
            if g:
                g = g * inv
                a[r] = [x - g * y for x, y in zip(a[r], a[c])]
                if p:
                    a[r] = [x % p for x in a[r]]
    return det % p if p else det


def inverse(m: Mat):
    """Inverse of a square matrix or ``None`` if singular."""
    x = solve(m, Mat.identity(m.field, m.nrows))
    if x is None or m.rank() != m.nrows:
        return None
    return x


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` stored by its canonical RREF basis."""

    field: Field
    ambient_dim: int
    basis: tuple  # tuple of row tuples in RREF, no zero rows
    pivots: tuple
    _ech: object = dc_field(default=None, compare=False, repr=False)

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        ech = Echelon(field, ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dim {ambient_dim}")
            if any(v):
                ech.add(_sparse(v))
        return cls(field, ambient_dim, ech.dense_rows(field), tuple(ech.pivots()))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, Mat.identity(field, n).rows, tuple(range(n)))

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of standard basis vectors ``e_i`` for ``i`` in ``indices``."""
        z, o = field.zero, field.one
        idx = sorted(set(indices))
        rows = tuple(tuple(o if j == i else z for j in range(n)) for i in idx)
        return cls(field, n, rows, tuple(idx))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def matrix(self) -> Mat:
        return Mat(self.field, len(self.basis), self.ambient_dim, self.basis)

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionError("subspaces live in different ambient spaces")

    def _echelon(self) -> Echelon:
        # built once and never mutated afterwards (reduce copies its input)
        ech = self._ech
        if ech is None:
            ech = Echelon(self.field, self.ambient_dim)
            for c, row in zip(self.pivots, self.basis):
                ech.rows[c] = _sparse(row)
            object.__setattr__(self, "_ech", ech)
        return ech

    def reduce(self, v: Sequence) -> tuple:
        """Canonical representative of ``v`` modulo this subspace (zero at pivot columns)."""
        r = self._echelon().reduce(_sparse(v))
        z = self.field.zero
        out = [z] * self.ambient_dim
        for k, x in r.items():
            out[k] = x
        return tuple(out)

    def contains_vector(self, v: Sequence) -> bool:
        return not self._echelon().reduce(_sparse(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the RREF basis; raises if ``v`` is not in the span."""
        if not self.contains_vector(v):
            raise ValueError("vector not in subspace")
        return tuple(v[c] for c in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def annihilator(self) -> "Subspace":
        """``{x : b . x = 0 for every basis row b}`` (dual-space complement)."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient_dim)
        return kernel_basis(self.matrix())

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        ech = self._echelon()
        return all(not ech.reduce(_sparse(v)) for v in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def complement_indices(self) -> tuple:
        """Non-pivot columns; the corresponding unit vectors span a complement."""
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def image(self, m: Mat) -> "Subspace":
        """Image of this subspace under ``v -> v m``."""
        return Subspace.span(self.field, m.ncols, (m.vecmul(b) for b in self.basis))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True when ``b`` is contained in ``a``."""
    return a.contains(b)


def nullspace_of_sparse_rows(field: Field, ncols: int, rows: Iterable[dict]) -> Subspace:
    """Right null space of the matrix given by sparse rows (dict column -> value)."""
    ech = Echelon(field, ncols)
    for r in rows:
        if r:
            ech.add(r)
    return Subspace.span(field, ncols, _kernel_from_echelon(field, ech, ncols))
