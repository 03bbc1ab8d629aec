"""The diagrammatic Foulkes module: generator matrices, depth filtration, orbits.

The module is spanned by refining pairs of set-partitions.  A diagram acts on
a pair through two copies of the one-row concatenation action, one per
coordinate; the closed-component counts become exponents of d1 and d2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import (
    Partition,
    check_partition,
    generalized_plethysm,
    partitions,
    partitions_no_ones,
)
from .errors import InternalConsistencyError, MalformedPartitionError, ResourceCapError
from .diagrams import PartitionDiagram, TwoParamScalar, act_on_set_partition
from .setpartitions import FoulkesPair, SetPartition, foulkes_pairs

MATRIX_CAP = 6


def act(pair: FoulkesPair, d: PartitionDiagram) -> tuple[int, int, FoulkesPair]:
    """Image of a basis pair under a diagram: exponents of d1, d2 and the pair."""
    t1, inner = act_on_set_partition(pair.inner, d)
    t2, outer = act_on_set_partition(pair.outer, d)
    try:
        image = FoulkesPair(inner, outer)
    except MalformedPartitionError as exc:  # pragma: no cover - structural guarantee
        raise InternalConsistencyError(
            f"action of {d} on {pair} broke refinement"
        ) from exc
    return t1, t2, image


@dataclass(frozen=True)
class ActionMatrix:
    """Square matrix over TwoParamScalar; column j is the image of basis j."""

    basis: tuple[FoulkesPair, ...]
    entries: tuple[tuple[int, int, TwoParamScalar], ...]  # (row, col, value)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def entry(self, row: int, col: int) -> TwoParamScalar:
        for i, j, v in self.entries:
            if i == row and j == col:
                return v
        return TwoParamScalar.zero()

    def dense(self) -> list[list[TwoParamScalar]]:
        out = [[TwoParamScalar.zero()] * self.dim for _ in range(self.dim)]
        for i, j, v in self.entries:
            out[i][j] = out[i][j] + v
        return out

    def evaluated(self, d1: int, d2: int) -> list[list[int]]:
        out = [[0] * self.dim for _ in range(self.dim)]
        for i, j, v in self.entries:
            out[i][j] += v.evaluate(d1, d2)
        return out

    def coordinate_dump(self) -> list[tuple[int, int, str]]:
        return [(i, j, str(v)) for i, j, v in sorted(self.entries)]


@lru_cache(maxsize=None)
def _basis_index(r: int) -> dict[FoulkesPair, int]:
    return {p: i for i, p in enumerate(foulkes_pairs(r))}


def action_matrix(d: PartitionDiagram, r: int, cap: int = MATRIX_CAP) -> ActionMatrix:
    """Matrix of a single diagram on the full pair basis."""
    if r > cap:
        raise ResourceCapError(f"r={r} exceeds the matrix cap {cap}")
    basis = foulkes_pairs(r)
    index = _basis_index(r)
    entries = []
    for j, pair in enumerate(basis):
        t1, t2, image = act(pair, d)
        entries.append((index[image], j, TwoParamScalar.monomial(t1, t2)))
    return ActionMatrix(basis, tuple(entries))


def layer_matrix(
    d: PartitionDiagram, r: int, k: int, swap_params: bool = False, cap: int = MATRIX_CAP
) -> ActionMatrix:
    """Action on the depth-k subquotient of the filtration.

    Basis elements of depth below k map to zero; only images that stay at
    depth k survive.  With ``swap_params`` the roles of d1 and d2 are
    exchanged, which is how the parameter-swapped module is realised.
    """
    if not 0 <= k <= max(r - 1, 0):
        raise ResourceCapError(f"layer index {k} out of range 0..{r - 1}")
    if r > cap:
        raise ResourceCapError(f"r={r} exceeds the matrix cap {cap}")
    layer = tuple(p for p in foulkes_pairs(r) if p.depth == k)
    index = {p: i for i, p in enumerate(layer)}
    entries = []
    for j, pair in enumerate(layer):
        t1, t2, image = act(pair, d)
        if image.depth == k:
            value = TwoParamScalar.monomial(t1, t2)
            if swap_params:
                value = value.swapped()
            entries.append((index[image], j, value))
    return ActionMatrix(layer, tuple(entries))


def in_depth_radical(pair: FoulkesPair) -> bool:
    """Radical membership: a non-singleton inner block or a singleton outer block."""
    if any(len(b) > 1 for b in pair.inner.blocks):
        return True
    return any(len(b) == 1 for b in pair.outer.blocks)


def depth_radical_basis(r: int) -> tuple[FoulkesPair, ...]:
    return tuple(p for p in foulkes_pairs(r) if in_depth_radical(p))


def depth_quotient_basis(r: int) -> tuple[FoulkesPair, ...]:
    """Pairs (all singletons; outer with no singleton block), in basis order."""
    return tuple(p for p in foulkes_pairs(r) if not in_depth_radical(p))


def block_filling(mu: Partition) -> SetPartition:
    """The set-partition with consecutive blocks of sizes mu: {1..mu1 | ...}."""
    blocks = []
    start = 1
    for part in mu:
        blocks.append(range(start, start + part))
        start += part
    return SetPartition.from_blocks(blocks, sum(mu))


@dataclass(frozen=True)
class DepthOrbit:
    """A symmetric-group orbit on the depth quotient basis."""

    shape: Partition
    representative: FoulkesPair
    size: int


def orbit_decomposition(r: int) -> tuple[DepthOrbit, ...]:
    """Depth-quotient basis split into orbits, one per no-ones partition of r."""
    remaining = {p.outer: p for p in depth_quotient_basis(r)}
    orbits = []
    for mu in partitions_no_ones(r):
        members = [sp for sp in remaining if sorted(map(len, sp.blocks), reverse=True) == list(mu)]
        rep = FoulkesPair(SetPartition.singletons(r), block_filling(mu))
        orbits.append(DepthOrbit(mu, rep, len(members)))
    if sum(o.size for o in orbits) != len(remaining):
        raise InternalConsistencyError("orbit sizes do not cover the quotient basis")
    return tuple(orbits)


def module_multiplicities(r: int) -> dict[Partition, int]:
    """Composition multiplicities of the rank-r module, for every label of size <= r.

    In the semisimple regime the size-k labels are governed by the depth
    quotient at rank k, so each multiplicity is a sum of generalized plethysm
    coefficients over no-ones partitions.
    """
    out: dict[Partition, int] = {}
    for k in range(r + 1):
        for lam in partitions(k):
            lam = check_partition(lam)
            out[lam] = sum(generalized_plethysm(mu, lam) for mu in partitions_no_ones(k))
    return out
