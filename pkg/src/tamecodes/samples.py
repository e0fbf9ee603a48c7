"""Ready-made diagrams: mapping tori, a torus height function and a seven-angle bouquet example."""
from __future__ import annotations

import math
import random
from collections.abc import Sequence

from . import builders as bld
from .diagram import TameDiagram
from .field import QQ, FieldSpec
from .homology import SimplicialComplex, SimplicialMap

TAU = 2 * math.pi

# bouquet edge counts: targets carry short loops, sources long enough for any word we use
TARGET_LOOP = 3
SOURCE_LOOP = 9


def mapping_torus(fiber: SimplicialComplex, glue: SimplicialMap, fld: FieldSpec = QQ) -> TameDiagram:
    """One critical angle at π whose fiber is ``fiber``; going once around applies ``glue``."""
    ident = SimplicialMap.identity(fiber)
    return TameDiagram("circle", fld, (math.pi,), (2.5 * math.pi,), (fiber,), (fiber,), (glue,), (ident,))


def torus(fld: FieldSpec = QQ) -> TameDiagram:
    return mapping_torus(bld.cycle(6), SimplicialMap.identity(bld.cycle(6)), fld)


def klein_bottle(fld: FieldSpec = QQ) -> TameDiagram:
    return mapping_torus(bld.cycle(6), bld.reflection(6), fld)


def point_circle(fld: FieldSpec = QQ) -> TameDiagram:
    return mapping_torus(bld.point(), SimplicialMap.identity(bld.point()), fld)


def torus_height(fld: FieldSpec = QQ) -> TameDiagram:
    """Height on an upright torus: minimum, two saddles, maximum."""
    pt = bld.point()
    eight = bld.bouquet([3, 3])
    low = bld.bouquet([SOURCE_LOOP])
    two = bld.disjoint_union([bld.cycle(3), bld.cycle(3)])
    high = bld.bouquet([SOURCE_LOOP])
    pinch = bld.matrix_map([SOURCE_LOOP], [3, 3], [[1], [1]])
    split = SimplicialMap(two, eight, (0, 1, 2, 0, 3, 4))
    return TameDiagram(
        "real", fld, (1.0, 2.0, 3.0, 4.0), (1.5, 2.5, 3.5),
        (pt, eight, eight, pt), (low, two, high),
        (pinch, split, bld.constant(high, pt)),
        (bld.constant(low, pt), split, pinch),
    )


WORKED_DIMS_EVEN = (3, 3, 3, 2, 2, 2, 3)
WORKED_DIMS_ODD = (3, 2, 3, 2, 3, 2, 3)
_A = [[0, 0], [1, 0], [0, 1]]
_B = [[0, 1, 0], [0, 0, 1]]
_I2 = [[1, 0], [0, 1]]
_I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
WORKED_ALPHA = (_I3, _A, _I3, _I2, _B, _I2, [[3, 0, 0], [0, 2, -1], [0, 0, 2]])
WORKED_BETA = (_A, _I3, _A, _B, _I2, _B, _I3)


def bouquet_diagram(even_dims: Sequence[int], odd_dims: Sequence[int], alpha: Sequence, beta: Sequence,
                    fld: FieldSpec = QQ) -> TameDiagram:
    """Circle diagram whose fibers are bouquets and whose maps realize the given integer matrices on H_1.

    ``odd_dims[i]`` is the loop count of the regular fiber just before critical angle i+1,
    ``alpha[i]`` and ``beta[i]`` are the matrices of a_{i+1} and b_{i+1}.
    """
    m = len(even_dims)
    xs = tuple(bld.bouquet([TARGET_LOOP] * d) for d in even_dims)
    rdims = [odd_dims[(j + 1) % m] for j in range(m)]
    rs = tuple(bld.bouquet([SOURCE_LOOP] * d) for d in rdims)
    maps_a = tuple(bld.matrix_map([SOURCE_LOOP] * odd_dims[i], [TARGET_LOOP] * even_dims[i], alpha[i])
                   for i in range(m))
    maps_b = tuple(bld.matrix_map([SOURCE_LOOP] * rdims[i], [TARGET_LOOP] * even_dims[i], beta[i])
                   for i in range(m))
    theta = tuple(TAU * (i + 1) / m for i in range(m))
    ts = tuple(t + math.pi / m for t in theta)
    return TameDiagram("circle", fld, theta, ts, xs, rs, maps_a, maps_b)


def worked_example(fld: FieldSpec = QQ) -> TameDiagram:
    return bouquet_diagram(WORKED_DIMS_EVEN, WORKED_DIMS_ODD, WORKED_ALPHA, WORKED_BETA, fld)


def random_bouquet_diagram(rng: random.Random, fld: FieldSpec, max_m: int = 3, max_loops: int = 2,
                           max_entry: int = 1) -> TameDiagram:
    """Random circle diagram of bouquets with small integer maps on H_1."""
    m = rng.randint(1, max_m)
    even = [rng.randint(0, max_loops) for _ in range(m)]
    odd = [rng.randint(0, max_loops) for _ in range(m)]

    def mat(rows: int, cols: int) -> list[list[int]]:
        return [[rng.randint(-max_entry, max_entry) for _ in range(cols)] for _ in range(rows)]

    alpha = [mat(even[i], odd[i]) for i in range(m)]
    beta = [mat(even[i], odd[(i + 1) % m]) for i in range(m)]
    return bouquet_diagram(even, odd, alpha, beta, fld)


ALL = {
    "torus": torus,
    "klein": klein_bottle,
    "point_circle": point_circle,
    "torus_height": torus_height,
    "worked_diagram": worked_example,
}
