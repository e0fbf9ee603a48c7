"""Simplicial homology with field coefficients and induced maps."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .field import FieldSpec
from .linalg import MatrixF, Subspace, nullspace, solve


class SimplicialError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices ``0..vertex_count-1`` plus face-closed simplices stored as sorted tuples."""

    vertex_count: int
    simplices: tuple[tuple[int, ...], ...]

    @classmethod
    def from_simplices(cls, vertex_count: int, simplices: Iterable[Sequence[int]]) -> SimplicialComplex:
        if vertex_count < 0:
            raise SimplicialError("vertex count must be nonnegative")
        found = {(v,) for v in range(vertex_count)}
        for s in simplices:
            s = tuple(sorted(set(s)))
            if not s:
                continue
            if any(isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < vertex_count for v in s):
                raise SimplicialError(f"simplex {list(s)} uses a vertex outside 0..{vertex_count - 1}")
            for k in range(1, len(s) + 1):
                found.update(combinations(s, k))
        return cls(vertex_count, tuple(sorted(found, key=lambda t: (len(t), t))))

    @cached_property
    def _by_dim(self) -> dict[int, tuple[tuple[int, ...], ...]]:
        out: dict[int, list] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: tuple(v) for d, v in out.items()}

    @cached_property
    def _positions(self) -> dict[tuple[int, ...], int]:
        return {s: k for d in self._by_dim.values() for k, s in enumerate(d)}

    @property
    def dimension(self) -> int:
        return max(self._by_dim, default=-1)

    def of_dim(self, r: int) -> tuple[tuple[int, ...], ...]:
        return self._by_dim.get(r, ())

    def position(self, simplex: tuple[int, ...]) -> int:
        return self._positions[simplex]

    def __contains__(self, simplex: tuple[int, ...]) -> bool:
        return simplex in self._positions

    def to_json(self) -> dict:
        top = [list(s) for s in self.simplices if len(s) > 1]
        return {"vertices": self.vertex_count, "simplices": top}


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertex_map) != self.source.vertex_count:
            raise SimplicialError(
                f"vertex map has {len(self.vertex_map)} entries for {self.source.vertex_count} vertices")
        for v in self.vertex_map:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.target.vertex_count:
                raise SimplicialError(f"vertex map sends a vertex to {v!r}, outside the target")
        for s in self.source.simplices:
            img = tuple(sorted({self.vertex_map[v] for v in s}))
            if img not in self.target:
                raise SimplicialError(f"simplex {list(s)} maps to {list(img)}, which is not a target simplex")

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def then(self, other: SimplicialMap) -> SimplicialMap:
        """``other`` after ``self``."""
        if other.source != self.target:
            raise SimplicialError("maps are not composable")
        return SimplicialMap(self.source, other.target, tuple(other.vertex_map[v] for v in self.vertex_map))

    @classmethod
    def identity(cls, k: SimplicialComplex) -> SimplicialMap:
        return cls(k, k, tuple(range(k.vertex_count)))


def boundary_matrix(k: SimplicialComplex, r: int, fld: FieldSpec) -> MatrixF:
    """Matrix of d_r: C_r -> C_{r-1}; [v0..vr] goes to sum of (-1)^j [.. v_j omitted ..]."""
    cols = k.of_dim(r)
    rows = k.of_dim(r - 1) if r >= 1 else ()
    grid = [[fld.zero] * len(cols) for _ in rows]
    if r >= 1:
        for c, s in enumerate(cols):
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                grid[k.position(face)][c] = fld(1 if j % 2 == 0 else -1)
    return MatrixF(fld, len(rows), len(cols), tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class HomologyBasis:
    degree: int
    representatives: MatrixF
    boundaries: MatrixF

    @property
    def dim(self) -> int:
        return self.representatives.cols

    def coordinates(self, cycle: Sequence) -> tuple:
        """Coordinates of the class of a cycle in this basis."""
        fld = self.representatives.field
        system = MatrixF.hstack(fld, self.representatives.rows, [self.boundaries, self.representatives])
        x = solve(system, tuple(cycle))
        if x is None:
            raise SimplicialError("chain is not a cycle")
        return x[self.boundaries.cols:]


@lru_cache(maxsize=512)
def homology_basis(k: SimplicialComplex, r: int, fld: FieldSpec) -> HomologyBasis:
    """Echelon cycle basis reduced against the boundaries, in a fixed order."""
    n = len(k.of_dim(r))
    cycles = nullspace(boundary_matrix(k, r, fld))
    bd = boundary_matrix(k, r + 1, fld)
    span = Subspace.column_space(bd)
    reps = []
    for z in cycles.vectors():
        if not span.contains(z):
            reps.append(z)
            span = span + Subspace.span(fld, n, [z])
    return HomologyBasis(r, MatrixF.from_columns(fld, n, reps), bd)


def betti(k: SimplicialComplex, r: int, fld: FieldSpec) -> int:
    return homology_basis(k, r, fld).dim


def chain_map(f: SimplicialMap, r: int, fld: FieldSpec) -> MatrixF:
    src, tgt = f.source.of_dim(r), f.target.of_dim(r)
    grid = [[fld.zero] * len(src) for _ in tgt]
    for c, s in enumerate(src):
        img = [f.vertex_map[v] for v in s]
        if len(set(img)) < len(img):
            continue
        inversions = sum(1 for a in range(len(img)) for b in range(a + 1, len(img)) if img[a] > img[b])
        grid[f.target.position(tuple(sorted(img)))][c] = fld(-1 if inversions % 2 else 1)
    return MatrixF(fld, len(tgt), len(src), tuple(tuple(row) for row in grid))


def induced_map(f: SimplicialMap, r: int, fld: FieldSpec) -> MatrixF:
    """H_r(f) in the canonical homology bases of source and target."""
    hs = homology_basis(f.source, r, fld)
    ht = homology_basis(f.target, r, fld)
    cm = chain_map(f, r, fld)
    cols = [ht.coordinates(cm.apply(z)) for z in hs.representatives.columns()]
    return MatrixF.from_columns(fld, ht.dim, cols)
