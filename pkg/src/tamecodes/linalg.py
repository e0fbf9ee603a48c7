"""Exact dense linear algebra over a :class:`FieldSpec`.

Matrices are immutable row-major tuples. Subspaces are stored through a
canonical basis: the columns form a reduced column-echelon matrix (each
basis vector has a leading 1 at its pivot coordinate and every other basis
vector vanishes there), so equal subspaces compare equal.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .field import FieldSpec, Scalar

Vector = tuple


def _rref_rows(rows: list[list], ncols: int, field: FieldSpec) -> tuple[list[list], list[int]]:
    """Row-reduce in place; return the nonzero rows and their pivot columns."""
    p = field.p
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if p is None:
            prow = [x * inv for x in rows[r]]
        else:
            prow = [x * inv % p for x in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    if p is None:
                        rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
                    else:
                        rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


@dataclass(frozen=True)
class MatrixF:
    field: FieldSpec
    rows: int
    cols: int
    data: tuple[tuple, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows or any(len(row) != self.cols for row in self.data):
            raise ValueError(f"matrix data does not have shape {self.rows}x{self.cols}")

    # construction

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable], cols: int | None = None) -> MatrixF:
        data = tuple(tuple(field(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(field, len(data), cols, data)

    @classmethod
    def from_flat(cls, field: FieldSpec, rows: int, cols: int, entries: Sequence) -> MatrixF:
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}")
        return cls.from_rows(field, (entries[i * cols:(i + 1) * cols] for i in range(rows)), cols)

    @classmethod
    def from_columns(cls, field: FieldSpec, rows: int, columns: Sequence[Sequence]) -> MatrixF:
        data = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(field, rows, len(columns), data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixF:
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixF:
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def flat(self) -> list:
        return [x for row in self.data for x in row]

    def to_json(self) -> list:
        return [[self.field.to_json(x) for x in row] for row in self.data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"MatrixF<{self.field.name} {self.rows}x{self.cols}>({body})"

    # arithmetic

    def _check(self, other: MatrixF) -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    @property
    def T(self) -> MatrixF:
        return MatrixF(self.field, self.cols, self.rows,
                       tuple(tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def __matmul__(self, other: MatrixF) -> MatrixF:
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.field.p
        ocols = other.columns()
        if p is None:
            data = tuple(tuple(sum((a * b for a, b in zip(row, col)), self.field.zero) for col in ocols)
                         for row in self.data)
        else:
            data = tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in ocols) for row in self.data)
        return MatrixF(self.field, self.rows, other.cols, data)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not match {self.cols} columns")
        p = self.field.p
        if p is None:
            return tuple(sum((a * b for a, b in zip(row, v)), self.field.zero) for row in self.data)
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.data)

    def _zip(self, other: MatrixF, op) -> MatrixF:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        norm = self.field.norm
        data = tuple(tuple(norm(op(a, b)) for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data))
        return MatrixF(self.field, self.rows, self.cols, data)

    def __add__(self, other: MatrixF) -> MatrixF:
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: MatrixF) -> MatrixF:
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> MatrixF:
        return self.scale(-1)

    def scale(self, c) -> MatrixF:
        c = self.field(c)
        norm = self.field.norm
        return MatrixF(self.field, self.rows, self.cols,
                       tuple(tuple(norm(c * x) for x in row) for row in self.data))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> MatrixF:
        return MatrixF(self.field, len(rows), len(cols),
                       tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def select_rows(self, rows: Sequence[int]) -> MatrixF:
        return MatrixF(self.field, len(rows), self.cols, tuple(self.data[i] for i in rows))

    @staticmethod
    def hstack(field: FieldSpec, rows: int, blocks: Sequence[MatrixF]) -> MatrixF:
        for b in blocks:
            if b.rows != rows:
                raise ValueError("hstack blocks need equal row counts")
        data = tuple(sum((b.data[i] for b in blocks), ()) for i in range(rows))
        return MatrixF(field, rows, sum(b.cols for b in blocks), data)

    @staticmethod
    def vstack(field: FieldSpec, cols: int, blocks: Sequence[MatrixF]) -> MatrixF:
        for b in blocks:
            if b.cols != cols:
                raise ValueError("vstack blocks need equal column counts")
        data = tuple(row for b in blocks for row in b.data)
        return MatrixF(field, len(data), cols, data)

    @staticmethod
    def block(field: FieldSpec, row_dims: Sequence[int], col_dims: Sequence[int],
              blocks: dict[tuple[int, int], MatrixF]) -> MatrixF:
        """Assemble a block matrix; missing blocks are zero."""
        z = field.zero
        row_off = [sum(row_dims[:i]) for i in range(len(row_dims))]
        col_off = [sum(col_dims[:j]) for j in range(len(col_dims))]
        nr, nc = sum(row_dims), sum(col_dims)
        grid = [[z] * nc for _ in range(nr)]
        for (bi, bj), blk in blocks.items():
            if blk.shape != (row_dims[bi], col_dims[bj]):
                raise ValueError(f"block {(bi, bj)} has shape {blk.shape}, expected {(row_dims[bi], col_dims[bj])}")
            for i, row in enumerate(blk.data):
                target = grid[row_off[bi] + i]
                for j, x in enumerate(row):
                    if x != 0:
                        target[col_off[bj] + j] = field.norm(target[col_off[bj] + j] + x)
        return MatrixF(field, nr, nc, tuple(tuple(r) for r in grid))

    @staticmethod
    def block_diag(field: FieldSpec, blocks: Sequence[MatrixF]) -> MatrixF:
        return MatrixF.block(field, [b.rows for b in blocks], [b.cols for b in blocks],
                             {(k, k): b for k, b in enumerate(blocks)})


def rref(m: MatrixF) -> tuple[MatrixF, tuple[int, ...]]:
    """Reduced row-echelon form (nonzero rows only) and pivot columns."""
    rows, piv = _rref_rows([list(r) for r in m.data], m.cols, m.field)
    return MatrixF(m.field, len(rows), m.cols, tuple(tuple(r) for r in rows)), tuple(piv)


def rank(m: MatrixF) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    basis: MatrixF
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, piv = _rref_rows(rows, ambient_dim, field)
        basis = MatrixF(field, ambient_dim, len(red),
                        tuple(tuple(r[i] for r in red) for i in range(ambient_dim)))
        return cls(field, ambient_dim, basis, tuple(piv))

    @classmethod
    def column_space(cls, m: MatrixF) -> Subspace:
        return cls.span(m.field, m.rows, m.columns())

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Subspace:
        return cls.span(field, n, [])

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> Subspace:
        return cls.span(field, n, MatrixF.identity(field, n).data)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = MatrixF.hstack(self.field, self.ambient_dim, [self.basis, -other.basis])
        null = nullspace(stacked)
        head = self.basis
        return Subspace.span(self.field, self.ambient_dim,
                             [head.apply(v[: self.dim]) for v in null.vectors()])

    def _check(self, other: Subspace) -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.residue(v))

    def issubset(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.vectors())

    def residue(self, v: Sequence) -> Vector:
        """v minus its projection along the canonical complement."""
        norm = self.field.norm
        out = list(v)
        for k, pc in enumerate(self.pivots):
            c = out[pc]
            if c != 0:
                col = self.basis.column(k)
                out = [norm(a - c * b) for a, b in zip(out, col)]
        return tuple(out)

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of a member vector in the canonical basis."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def complement_coords(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def __repr__(self) -> str:
        return f"Subspace<{self.field.name}, dim {self.dim} in {self.ambient_dim}>{self.vectors()}"


def nullspace(m: MatrixF) -> Subspace:
    red, piv = rref(m)
    field = m.field
    free = [j for j in range(m.cols) if j not in set(piv)]
    vecs = []
    for fj in free:
        v = [field.zero] * m.cols
        v[fj] = field.one
        for r, pc in enumerate(piv):
            v[pc] = field.neg(red.data[r][fj])
        vecs.append(v)
    return Subspace.span(field, m.cols, vecs)


def image(m: MatrixF, u: Subspace | None = None) -> Subspace:
    """Image of ``u`` (the whole domain when omitted) under ``m``."""
    if u is None:
        return Subspace.column_space(m)
    if u.ambient_dim != m.cols:
        raise ValueError("subspace does not live in the domain")
    return Subspace.span(m.field, m.rows, [m.apply(v) for v in u.vectors()])


def kernel(m: MatrixF) -> Subspace:
    return nullspace(m)


def solve(m: MatrixF, b: Sequence) -> Vector | None:
    """Some x with m x = b, or None if the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    field = m.field
    aug = [list(row) + [field(x)] for row, x in zip(m.data, b)]
    red, piv = _rref_rows(aug, m.cols + 1, field)
    if piv and piv[-1] == m.cols:
        return None
    x = [field.zero] * m.cols
    for r, pc in enumerate(piv):
        x[pc] = red[r][m.cols]
    return tuple(x)


def quotient(ambient_dim: int, u: Subspace) -> MatrixF:
    """Projection onto the non-pivot coordinates with kernel exactly ``u``."""
    field = u.field
    comp = u.complement_coords()
    pos = {c: a for a, c in enumerate(comp)}
    grid = [[field.zero] * ambient_dim for _ in comp]
    for c, a in pos.items():
        grid[a][c] = field.one
    for k, pc in enumerate(u.pivots):
        col = u.basis.column(k)
        for c, a in pos.items():
            grid[a][pc] = field.neg(col[c])
    return MatrixF(field, len(comp), ambient_dim, tuple(tuple(r) for r in grid))


def section(ambient_dim: int, u: Subspace) -> MatrixF:
    """Right inverse of :func:`quotient`: embed the non-pivot coordinates."""
    field = u.field
    comp = u.complement_coords()
    grid = [[field.zero] * len(comp) for _ in range(ambient_dim)]
    for a, c in enumerate(comp):
        grid[c][a] = field.one
    return MatrixF(field, ambient_dim, len(comp), tuple(tuple(r) for r in grid))


def preimage(m: MatrixF, u: Subspace) -> Subspace:
    """{v : m v in u}."""
    if u.ambient_dim != m.rows:
        raise ValueError("subspace does not live in the codomain")
    if u.dim == m.rows:
        return Subspace.full(m.field, m.cols)
    return nullspace(quotient(m.rows, u) @ m)


def inverse(m: MatrixF) -> MatrixF:
    if not m.is_square():
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = [list(row) + list(e) for row, e in zip(m.data, MatrixF.identity(m.field, n).data)]
    red, piv = _rref_rows(aug, 2 * n, m.field)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return MatrixF(m.field, n, n, tuple(tuple(r[n:]) for r in red))


def is_invertible(m: MatrixF) -> bool:
    return m.is_square() and rank(m) == m.rows
