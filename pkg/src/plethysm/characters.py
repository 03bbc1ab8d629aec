"""Symmetric-group character machinery and the symmetric-function plethysm oracle.

Integer partitions are plain tuples of weakly decreasing positive ints; the
empty partition is ``()``.  Irreducible characters come from the border-strip
recursion on beta-sets; permutation characters of set-partition stabilisers
come from brute-force fixed-point counting, vectorised with numpy but exact.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    InternalConsistencyError,
    MalformedPartitionError,
    ResourceCapError,
    SizeMismatchError,
)
from .setpartitions import SetPartition

Partition = tuple[int, ...]

ORACLE_CAP = 16


def check_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise MalformedPartitionError(f"not a partition: {parts}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts; '-' or '' denotes the empty partition."""
    cleaned = text.strip()
    if cleaned in ("", "-"):
        return ()
    try:
        parts = tuple(int(t) for t in cleaned.split(","))
    except ValueError as exc:
        raise MalformedPartitionError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in descending lexicographic order, (n) first."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    bound = n if max_part is None else min(max_part, n)
    for first in range(bound, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_no_ones(n: int) -> tuple[Partition, ...]:
    """Partitions of n with every part at least 2 (the empty one for n=0)."""
    if n < 0:
        return ()
    return tuple(lam for lam in partitions(n) if not lam or lam[-1] >= 2)


def pad_partition(lam: Partition, total: int) -> Partition:
    """Prepend a first row so the result is a partition of ``total``."""
    head = total - sum(lam)
    if lam and head < lam[0]:
        raise MalformedPartitionError(
            f"{total}-{sum(lam)}={head} is smaller than the first part {lam[0]}"
        )
    if head < 0:
        raise MalformedPartitionError(f"partition {lam} too large for total {total}")
    if head == 0:
        return lam
    return (head,) + lam


def cycle_type_centralizer(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    out = 1
    for k, grp in itertools.groupby(rho):
        mult = len(list(grp))
        out *= k**mult * factorial(mult)
    return out


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // cycle_type_centralizer(rho)


@lru_cache(maxsize=None)
def character_value(lam: Partition, rho: Partition) -> int:
    """Irreducible character of the symmetric group by border-strip removal."""
    if sum(lam) != sum(rho):
        raise SizeMismatchError(f"|{lam}| != |{rho}|")
    if not lam:
        return 1
    k, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        crossings = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_lam = tuple(c - (ell - 1 - i) for i, c in enumerate(new_beta))
        while new_lam and new_lam[-1] == 0:
            new_lam = new_lam[:-1]
        total += (-1) ** crossings * character_value(new_lam, rest)
    return total


def dimension(lam: Partition) -> int:
    """Hook-length count of standard tableaux."""
    if not lam:
        return 1
    cols = [0] * lam[0]
    for row in lam:
        for j in range(row):
            cols[j] += 1
    out = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            out //= row - j + cols[j] - i - 1
    return out


def set_partitions_of_shape(mu: Partition) -> list[SetPartition]:
    """All set-partitions of {1..|mu|} whose block sizes are exactly mu."""
    r = sum(mu)
    results: list[SetPartition] = []

    def rec(remaining: tuple[int, ...], sizes: tuple[int, ...], acc: list[tuple[int, ...]]):
        if not remaining:
            results.append(SetPartition.from_blocks(acc, r))
            return
        first, rest = remaining[0], remaining[1:]
        for size in sorted(set(sizes), reverse=True):
            left = list(sizes)
            left.remove(size)
            for companions in itertools.combinations(rest, size - 1):
                taken = set(companions)
                acc.append((first,) + companions)
                rec(tuple(x for x in rest if x not in taken), tuple(left), acc)
                acc.pop()

    rec(tuple(range(1, r + 1)), mu, [])
    return results


def _canonical_permutation(rho: Partition) -> np.ndarray:
    """0-based image array of the permutation with cycles (1..k1)(k1+1..k1+k2)..."""
    r = sum(rho)
    sigma = np.arange(r)
    start = 0
    for k in rho:
        for off in range(k):
            sigma[start + off] = start + (off + 1) % k
        start += k
    return sigma


@lru_cache(maxsize=None)
def _fixed_counts(mu: Partition) -> dict[Partition, int]:
    """For each cycle type rho: number of shape-mu set-partitions fixed by it."""
    r = sum(mu)
    if r == 0:
        return {(): 1}
    rows = np.array([sp.labels for sp in set_partitions_of_shape(mu)], dtype=np.int16)
    ii, jj = np.triu_indices(r, k=1)
    base_pattern = rows[:, ii] == rows[:, jj]
    counts: dict[Partition, int] = {}
    for rho in partitions(r):
        sigma = _canonical_permutation(rho)
        inverse = np.argsort(sigma)
        moved = rows[:, inverse]
        pattern = moved[:, ii] == moved[:, jj]
        counts[rho] = int((pattern == base_pattern).all(axis=1).sum())
    return counts


def stab_permutation_character(mu: Partition, rho: Partition) -> int:
    """Fixed shape-mu set-partitions under a permutation of cycle type rho.

    This is the permutation character of the symmetric group acting on
    set-partitions with block sizes mu (cosets of a product of wreath
    products), evaluated by direct counting.
    """
    if sum(mu) != sum(rho):
        raise SizeMismatchError(f"|{mu}| != |{rho}|")
    return _fixed_counts(check_partition(mu))[check_partition(rho)]


def generalized_plethysm(mu: Partition, lam: Partition) -> int:
    """Multiplicity of the lam-irreducible in the shape-mu permutation module."""
    mu, lam = check_partition(mu), check_partition(lam)
    r = sum(mu)
    if sum(lam) != r:
        raise SizeMismatchError(f"|{mu}| != |{lam}|")
    if r == 0:
        return 1
    fixed = _fixed_counts(mu)
    total = sum(
        class_size(rho) * fixed[rho] * character_value(lam, rho) for rho in partitions(r)
    )
    value, rem = divmod(total, factorial(r))
    if rem or value < 0:
        raise InternalConsistencyError(
            f"inner product for mu={mu}, lam={lam} is not a nonnegative integer"
        )
    return value


def _power_sum_homogeneous(m: int) -> dict[Partition, Fraction]:
    """h_m expanded in power sums: coefficient 1/z_rho on each p_rho."""
    return {rho: Fraction(1, cycle_type_centralizer(rho)) for rho in partitions(m)}


def homogeneous_plethysm(m: int, n: int, alpha: Partition, cap: int = ORACLE_CAP) -> int:
    """Coefficient of the alpha-Schur function in h_n composed with h_m.

    Computed entirely inside symmetric functions: expand in power sums, use
    p_k[p_l] = p_{kl}, pair against the character of alpha.  Serves as the
    independent oracle for every coefficient with mn inside the cap.
    """
    if m < 1 or n < 1:
        raise MalformedPartitionError("m and n must be positive")
    if m * n > cap:
        raise ResourceCapError(f"mn={m * n} exceeds oracle cap {cap}")
    alpha = check_partition(alpha)
    if sum(alpha) != m * n:
        raise SizeMismatchError(f"|alpha|={sum(alpha)} but mn={m * n}")
    inner = _power_sum_homogeneous(m)
    expansion: dict[Partition, Fraction] = defaultdict(Fraction)
    for tau in partitions(n):
        acc: dict[Partition, Fraction] = {(): Fraction(1)}
        for k in tau:
            nxt: dict[Partition, Fraction] = defaultdict(Fraction)
            for gamma, c in acc.items():
                for rho, c_rho in inner.items():
                    scaled = tuple(sorted(gamma + tuple(k * x for x in rho), reverse=True))
                    nxt[scaled] += c * c_rho
            acc = nxt
        outer_coeff = Fraction(1, cycle_type_centralizer(tau))
        for gamma, c in acc.items():
            expansion[gamma] += outer_coeff * c
    value = sum(
        (c * character_value(alpha, gamma) for gamma, c in expansion.items()),
        start=Fraction(0),
    )
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(
            f"plethysm inner product for ({m},{n},{alpha}) is {value}"
        )
    return int(value)


@lru_cache(maxsize=None)
def partitions_in_box_count(k: int, rows: int, cols: int) -> int:
    """Number of partitions of k fitting in a rows x cols rectangle."""
    if k == 0:
        return 1
    if k < 0 or rows <= 0 or cols <= 0:
        return 0
    # fewer than `rows` parts, or exactly `rows` parts with one column stripped
    return partitions_in_box_count(k, rows - 1, cols) + partitions_in_box_count(
        k - rows, rows, cols - 1
    )


def cayley_sylvester(m: int, n: int, r: int) -> int:
    """Two-row plethysm coefficient as a difference of box-partition counts."""
    if r > m * n:
        raise MalformedPartitionError(f"r={r} exceeds mn={m * n}")
    return partitions_in_box_count(r, m, n) - partitions_in_box_count(r - 1, m, n)
