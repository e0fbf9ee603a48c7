"""Small simplicial spaces and maps used to assemble example diagrams.

A bouquet has a base vertex 0 and loops ``0 -> a -> a+1 -> ... -> 0`` built
from fresh vertices. Its canonical first-homology basis is the list of loops
in construction order, each oriented away from the base vertex, so a map that
runs source loop j along a word in the target loops induces the integer
matrix whose column j counts the letters of that word.
"""
from __future__ import annotations

from collections.abc import Sequence

from .homology import SimplicialComplex, SimplicialMap

Letter = tuple[int, int]  # (target loop index, +1 or -1)


def point() -> SimplicialComplex:
    return SimplicialComplex.from_simplices(1, [])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    return SimplicialComplex.from_simplices(n, [(i, (i + 1) % n) for i in range(n)])


def _loop_vertices(lengths: Sequence[int]) -> list[list[int]]:
    out, nxt = [], 1
    for length in lengths:
        if length < 3:
            raise ValueError("each loop needs at least 3 edges")
        out.append([0] + list(range(nxt, nxt + length - 1)))
        nxt += length - 1
    return out


def bouquet(lengths: Sequence[int]) -> SimplicialComplex:
    """Wedge of circles at vertex 0; loop j has ``lengths[j]`` edges."""
    loops = _loop_vertices(lengths)
    count = 1 + sum(len(lp) - 1 for lp in loops)
    edges = [(lp[t], lp[(t + 1) % len(lp)]) for lp in loops for t in range(len(lp))]
    return SimplicialComplex.from_simplices(count, edges)


def disjoint_union(parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    simplices, offset = [], 0
    for k in parts:
        simplices.extend(tuple(v + offset for v in s) for s in k.simplices)
        offset += k.vertex_count
    return SimplicialComplex.from_simplices(offset, simplices)


def word_map(source_lengths: Sequence[int], target_lengths: Sequence[int],
             words: Sequence[Sequence[Letter]]) -> SimplicialMap:
    """Bouquet map running source loop j once along ``words[j]``.

    The source loop must have at least as many edges as the walk; leftover
    vertices collapse onto the base point.
    """
    if len(words) != len(source_lengths):
        raise ValueError("need one word per source loop")
    src_loops = _loop_vertices(source_lengths)
    tgt_loops = _loop_vertices(target_lengths)
    vmap = [0] * (1 + sum(len(lp) - 1 for lp in src_loops))
    for lp, word in zip(src_loops, words):
        walk = [0]
        for k, sign in word:
            body = tgt_loops[k][1:]
            walk.extend((body if sign > 0 else body[::-1]) + [0])
        if len(walk) - 1 > len(lp):
            raise ValueError(f"loop of {len(lp)} edges cannot carry a walk of {len(walk) - 1} edges")
        for t, v in enumerate(lp):
            vmap[v] = walk[t] if t < len(walk) else 0
    return SimplicialMap(bouquet(source_lengths), bouquet(target_lengths), tuple(vmap))


def words_from_matrix(matrix: Sequence[Sequence[int]]) -> list[list[Letter]]:
    """One word per column: |c| copies of loop k, with the sign of c, for each row k."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    words = []
    for j in range(cols):
        word = []
        for k in range(rows):
            c = matrix[k][j]
            word.extend([(k, 1 if c > 0 else -1)] * abs(c))
        words.append(word)
    return words


def matrix_map(source_lengths: Sequence[int], target_lengths: Sequence[int],
               matrix: Sequence[Sequence[int]]) -> SimplicialMap:
    """Bouquet map inducing the given integer matrix on first homology."""
    if len(matrix) != len(target_lengths):
        raise ValueError("matrix rows must match the target loops")
    if matrix and len(matrix[0]) != len(source_lengths):
        raise ValueError("matrix columns must match the source loops")
    if not matrix:
        return word_map(source_lengths, target_lengths, [[] for _ in source_lengths])
    return word_map(source_lengths, target_lengths, words_from_matrix(matrix))


def rotation(n: int, shift: int) -> SimplicialMap:
    k = cycle(n)
    return SimplicialMap(k, k, tuple((v + shift) % n for v in range(n)))


def reflection(n: int) -> SimplicialMap:
    k = cycle(n)
    return SimplicialMap(k, k, tuple((n - v) % n for v in range(n)))


def wrap(n: int, degree: int) -> SimplicialMap:
    """The circle on n*degree vertices wrapped ``degree`` times onto the n-cycle."""
    return SimplicialMap(cycle(n * degree), cycle(n), tuple(v % n for v in range(n * degree)))


def constant(source: SimplicialComplex, target: SimplicialComplex, v: int = 0) -> SimplicialMap:
    return SimplicialMap(source, target, (v,) * source.vertex_count)
