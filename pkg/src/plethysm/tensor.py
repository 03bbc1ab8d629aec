"""Exact Schur-Weyl checks on small tensor powers of C^(mn).

Basis vectors of the r-th tensor power are flat integers in base mn, most
significant digit first.  Digit c encodes the pair (i, j) with
c = (j-1)*m + (i-1), matching the subscript/superscript bookkeeping used for
value-types.  Everything here is exact integer arithmetic; ranks are computed
by fraction-free elimination so injectivity never hinges on a float.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .diagrams import PartitionDiagram, generator
from .errors import MalformedPartitionError, ResourceCapError, SizeMismatchError
from .foulkes import act
from .setpartitions import FoulkesPair, SetPartition, foulkes_pairs

VECTOR_CAP = 10**5
MATRIX_CAP = 4096


def _check_dim(dim: int, cap: int) -> None:
    if dim > cap:
        raise ResourceCapError(f"tensor dimension {dim} exceeds cap {cap}")


def pair_to_digit(i: int, j: int, m: int) -> int:
    return (j - 1) * m + (i - 1)


def digit_to_pair(c: int, m: int) -> tuple[int, int]:
    return c % m + 1, c // m + 1


def flat_index(digits: Sequence[int], mn: int) -> int:
    out = 0
    for c in digits:
        out = out * mn + c
    return out


def index_digits(flat: int, mn: int, r: int) -> tuple[int, ...]:
    digits = []
    for _ in range(r):
        digits.append(flat % mn)
        flat //= mn
    return tuple(reversed(digits))


def diagram_tensor_matrix(d: PartitionDiagram, m: int, n: int) -> np.ndarray:
    """0/1 matrix of a diagram acting on the r-th tensor power of C^(mn).

    Entry (row I, column J) is 1 exactly when the indices are constant on
    every block of the diagram (rows feed the northern points, columns the
    southern ones).  One free value per block, so the support is enumerated
    blockwise instead of scanning the full square matrix.
    """
    r = d.size
    mn = m * n
    dim = mn**r
    _check_dim(dim, MATRIX_CAP)
    blocks = d.partition.blocks
    north_weight = []
    south_weight = []
    for block in blocks:
        nw = sum(mn ** (r - p) for p in block if p <= r)
        sw = sum(mn ** (2 * r - p) for p in block if p > r)
        north_weight.append(nw)
        south_weight.append(sw)
    rows = np.zeros(1, dtype=np.int64)
    cols = np.zeros(1, dtype=np.int64)
    values = np.arange(mn, dtype=np.int64)
    for nw, sw in zip(north_weight, south_weight):
        rows = (rows[:, None] + values[None, :] * nw).ravel()
        cols = (cols[:, None] + values[None, :] * sw).ravel()
    matrix = np.zeros((dim, dim), dtype=np.int64)
    matrix[rows, cols] = 1
    return matrix


def _check_permutation(perm: Sequence[int], k: int) -> None:
    if sorted(perm) != list(range(1, k + 1)):
        raise MalformedPartitionError(f"not a permutation of 1..{k}: {perm}")


def wreath_embed(sigmas: Sequence[Sequence[int]], pi: Sequence[int]) -> tuple[int, ...]:
    """Embed (sigma_1..sigma_n; pi) into the permutations of {1..mn}.

    ``sigmas`` holds n one-line permutations of {1..m} and ``pi`` one of
    {1..n}; the image sends (j-1)m + i to (pi(j)-1)m + sigma_{pi(j)}(i).
    """
    n = len(pi)
    if len(sigmas) != n:
        raise SizeMismatchError(f"{len(sigmas)} inner permutations for n={n}")
    m = len(sigmas[0]) if sigmas else 0
    for sigma in sigmas:
        _check_permutation(sigma, m)
    _check_permutation(pi, n)
    out = [0] * (m * n)
    for j in range(1, n + 1):
        target = pi[j - 1]
        for i in range(1, m + 1):
            out[(j - 1) * m + i - 1] = (target - 1) * m + sigmas[target - 1][i - 1]
    return tuple(out)


def value_type(pairs: Sequence[tuple[int, int]]) -> FoulkesPair:
    """Equality pattern of a basis vector: inner by (i, j), outer by j alone."""
    r = len(pairs)
    outer_blocks: dict[int, list[int]] = {}
    inner_blocks: dict[tuple[int, int], list[int]] = {}
    for pos, (i, j) in enumerate(pairs, start=1):
        outer_blocks.setdefault(j, []).append(pos)
        inner_blocks.setdefault((i, j), []).append(pos)
    return FoulkesPair(
        SetPartition.from_blocks(inner_blocks.values(), r),
        SetPartition.from_blocks(outer_blocks.values(), r),
    )


def block_constant_support(pair: FoulkesPair, m: int, n: int) -> np.ndarray:
    """Flat indices of the basis vectors with subscripts constant on inner
    blocks and superscripts constant on outer blocks, no distinctness imposed.

    One free subscript per inner block and one free superscript per outer
    block, so the support has m**inner_blocks * n**outer_blocks entries even
    when the ambient dimension is far larger.
    """
    r = pair.size
    mn = m * n
    support = m**pair.inner.block_count * n**pair.outer.block_count
    _check_dim(support, VECTOR_CAP)
    if mn**r >= 2**62:
        raise ResourceCapError(f"flat indices overflow 64 bits at (mn)^r = {mn}^{r}")
    inner_weight = [
        sum(mn ** (r - p) for p in block) for block in pair.inner.blocks
    ]
    outer_weight = [
        sum(mn ** (r - p) for p in block) for block in pair.outer.blocks
    ]
    flats = np.zeros(1, dtype=np.int64)
    for w in inner_weight:
        flats = (flats[:, None] + np.arange(m, dtype=np.int64)[None, :] * w).ravel()
    for w in outer_weight:
        flats = (flats[:, None] + (np.arange(n, dtype=np.int64) * m)[None, :] * w).ravel()
    return flats


def block_constant_vector(pair: FoulkesPair, m: int, n: int) -> np.ndarray:
    """Dense 0/1 vector supported on ``block_constant_support``."""
    dim = (m * n) ** pair.size
    _check_dim(dim, VECTOR_CAP)
    vec = np.zeros(dim, dtype=np.int64)
    vec[block_constant_support(pair, m, n)] = 1
    return vec


def value_type_orbit_vector(pair: FoulkesPair, m: int, n: int) -> np.ndarray:
    """Sum of the basis vectors whose value-type is exactly the given pair."""
    r = pair.size
    mn = m * n
    _check_dim(mn**r, VECTOR_CAP)
    vec = np.zeros(mn**r, dtype=np.int64)
    for flat in range(mn**r):
        pairs = [digit_to_pair(c, m) for c in index_digits(flat, mn, r)]
        if value_type(pairs) == pair:
            vec[flat] = 1
    return vec


def integer_matrix_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, by exact elimination."""
    work = [[int(v) for v in row] for row in rows]
    work = [row for row in work if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for i in range(rank + 1, len(work)):
            vi = work[i][col]
            if not vi:
                continue
            row = [pv * a - vi * b for a, b in zip(work[i], work[rank])]
            g = 0
            for v in row:
                g = gcd(g, v)
            work[i] = [v // g for v in row] if g > 1 else row
        rank += 1
        if rank == len(work):
            break
    return rank


def foulkes_image_rank(r: int, m: int, n: int) -> int:
    """Rank of the map sending every refining pair to its tensor vector.

    Equals the full pair count exactly when m, n >= r.  For smaller
    parameters the observed value is the size of the truncated poset; that
    identity is checked empirically here, not quoted from anywhere.
    """
    vectors = [block_constant_vector(p, m, n) for p in foulkes_pairs(r)]
    return integer_matrix_rank([v.tolist() for v in vectors])


def tensor_action_consistent(r: int, m: int, n: int, word: Sequence[str]) -> bool:
    """Does the pair action match the tensor action along a generator word?

    Tracks, for every basis pair, the scaled pair on one side and the vector
    image on the other; compares after every letter.
    """
    matrices = {name: diagram_tensor_matrix(generator(name, r), m, n) for name in set(word)}
    diagrams = {name: generator(name, r) for name in set(word)}
    for start in foulkes_pairs(r):
        vec = block_constant_vector(start, m, n)
        pair = start
        scale = 1
        for name in word:
            vec = vec @ matrices[name]
            t1, t2, pair = act(pair, diagrams[name])
            scale *= m**t1 * n**t2
            expected = scale * block_constant_vector(pair, m, n)
            if not np.array_equal(vec, expected):
                return False
    return True


def wreath_group_generators(m: int, n: int) -> list[tuple[int, ...]]:
    """Embedded generators of the wreath subgroup: adjacent swaps inside each
    inner factor plus adjacent swaps of the factors."""
    identity_m = tuple(range(1, m + 1))
    identity_n = tuple(range(1, n + 1))

    def swap(k: int, i: int) -> tuple[int, ...]:
        out = list(range(1, k + 1))
        out[i - 1], out[i] = out[i], out[i - 1]
        return tuple(out)

    gens = []
    for j in range(n):
        for i in range(1, m):
            sigmas = [identity_m] * n
            sigmas[j] = swap(m, i)
            gens.append(wreath_embed(sigmas, identity_n))
    for i in range(1, n):
        gens.append(wreath_embed([identity_m] * n, swap(n, i)))
    return gens


def tensor_basis_orbits(r: int, m: int, n: int) -> set[frozenset[int]]:
    """Orbits of the wreath subgroup on the flat tensor basis (by BFS)."""
    mn = m * n
    dim = mn**r
    _check_dim(dim, VECTOR_CAP)
    gens = wreath_group_generators(m, n)
    gen_digit_maps = [tuple(w[c] - 1 for c in range(mn)) for w in gens]
    seen = [False] * dim
    orbits = set()
    for start in range(dim):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        seen[start] = True
        while queue:
            cur = queue.pop()
            digits = index_digits(cur, mn, r)
            for dmap in gen_digit_maps:
                nxt = flat_index([dmap[c] for c in digits], mn)
                if not seen[nxt]:
                    seen[nxt] = True
                    orbit.add(nxt)
                    queue.append(nxt)
        orbits.add(frozenset(orbit))
    return orbits


def value_type_fibers(r: int, m: int, n: int) -> set[frozenset[int]]:
    """Partition of the flat tensor basis by value-type."""
    mn = m * n
    _check_dim(mn**r, VECTOR_CAP)
    fibers: dict[FoulkesPair, set[int]] = {}
    for flat in range(mn**r):
        pairs = [digit_to_pair(c, m) for c in index_digits(flat, mn, r)]
        fibers.setdefault(value_type(pairs), set()).add(flat)
    return {frozenset(v) for v in fibers.values()}
