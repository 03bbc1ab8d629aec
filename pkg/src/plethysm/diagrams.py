"""The two-parameter partition algebra: diagrams, products, and the one-row action.

A diagram on r strands is a set-partition of the 2r points 1..r (northern)
and 1'..r' (southern); point k' is encoded as the integer r+k, following the
total order 1 < ... < r < 1' < ... < r'.  Multiplying two diagrams stacks the
first above the second and replaces each closed middle component by one factor
of d1*d2, tracked exactly in a two-variable integer polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import MalformedPartitionError, SizeMismatchError
from .setpartitions import SetPartition


class TwoParamScalar:
    """Integer polynomial in the parameters d1, d2, keyed by exponent pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("negative exponents are not representable")
            if c:
                clean[(a, b)] = int(c)
        self._terms = clean

    @classmethod
    def zero(cls) -> "TwoParamScalar":
        return cls()

    @classmethod
    def one(cls) -> "TwoParamScalar":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> "TwoParamScalar":
        return cls({(a, b): coeff})

    def items(self):
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoParamScalar) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "TwoParamScalar") -> "TwoParamScalar":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TwoParamScalar(out)

    def __mul__(self, other: "TwoParamScalar") -> "TwoParamScalar":
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return TwoParamScalar(out)

    def scaled(self, factor: int) -> "TwoParamScalar":
        return TwoParamScalar({k: factor * c for k, c in self._terms.items()})

    def swapped(self) -> "TwoParamScalar":
        """The same polynomial with the roles of d1 and d2 exchanged."""
        return TwoParamScalar({(b, a): c for (a, b), c in self._terms.items()})

    def evaluate(self, d1: int, d2: int) -> int:
        return sum(c * d1**a * d2**b for (a, b), c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*d1^{a}*d2^{b}" for (a, b), c in self.items())

    def __repr__(self) -> str:
        return f"TwoParamScalar({self._terms!r})"


@dataclass(frozen=True)
class PartitionDiagram:
    """A basis diagram of the partition algebra on ``size`` strands."""

    size: int
    partition: SetPartition

    def __post_init__(self):
        if self.partition.size != 2 * self.size:
            raise MalformedPartitionError(
                f"diagram on {self.size} strands needs a partition of {2 * self.size} points"
            )

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], size: int) -> "PartitionDiagram":
        return cls(size, SetPartition.from_blocks(blocks, 2 * size))

    @classmethod
    def from_string(cls, text: str, size: int) -> "PartitionDiagram":
        """Parse the textual form, e.g. ``{1,2,1',2'|3,3'}``."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise MalformedPartitionError(f"bad diagram syntax: {text!r}")
        blocks = []
        for chunk in body[1:-1].split("|"):
            block = []
            for tok in chunk.split(","):
                tok = tok.strip()
                m = re.fullmatch(r"(\d+)(')?", tok)
                if not m:
                    raise MalformedPartitionError(f"bad diagram token: {tok!r}")
                k = int(m.group(1))
                block.append(k + size if m.group(2) else k)
            blocks.append(block)
        return cls.from_blocks(blocks, size)

    def _point(self, p: int) -> str:
        return str(p) if p <= self.size else f"{p - self.size}'"

    def __str__(self) -> str:
        return "{" + "|".join(
            ",".join(self._point(p) for p in b) for b in self.partition.blocks
        ) + "}"

    @cached_property
    def propagating_count(self) -> int:
        """Number of blocks meeting both the northern and the southern row."""
        count = 0
        for block in self.partition.blocks:
            if block[0] <= self.size < block[-1]:
                count += 1
        return count


class _DisjointSet:
    """Union-find with path halving; tracks nothing but connectivity."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def identity_diagram(r: int) -> PartitionDiagram:
    return PartitionDiagram.from_blocks([[i, r + i] for i in range(1, r + 1)], r)


def p_diagram(r: int, i: int = 1) -> PartitionDiagram:
    """Strand i cut into two singletons; every other strand passes through."""
    if not 1 <= i <= r:
        raise MalformedPartitionError(f"strand {i} out of range 1..{r}")
    blocks = [[i], [r + i]]
    blocks += [[j, r + j] for j in range(1, r + 1) if j != i]
    return PartitionDiagram.from_blocks(blocks, r)


def p12_diagram(r: int) -> PartitionDiagram:
    """Strands 1 and 2 merged into a single four-point block."""
    if r < 2:
        raise MalformedPartitionError("needs at least 2 strands")
    blocks = [[1, 2, r + 1, r + 2]]
    blocks += [[j, r + j] for j in range(3, r + 1)]
    return PartitionDiagram.from_blocks(blocks, r)


def swap_diagram(r: int, i: int) -> PartitionDiagram:
    """The transposition of strands i and i+1."""
    if not 1 <= i < r:
        raise MalformedPartitionError(f"swap index {i} out of range 1..{r - 1}")
    blocks = [[i, r + i + 1], [i + 1, r + i]]
    blocks += [[j, r + j] for j in range(1, r + 1) if j not in (i, i + 1)]
    return PartitionDiagram.from_blocks(blocks, r)


def generator(name: str, r: int) -> PartitionDiagram:
    """Named generator: ``p1``, ``p12``, or ``s<i>`` for 1 <= i < r."""
    if name == "p1":
        return p_diagram(r, 1)
    if name == "p12":
        return p12_diagram(r)
    m = re.fullmatch(r"s(\d+)", name)
    if m:
        return swap_diagram(r, int(m.group(1)))
    raise MalformedPartitionError(f"unknown generator {name!r}")


def generator_names(r: int) -> tuple[str, ...]:
    names = ["p1"]
    if r >= 2:
        names.append("p12")
    names += [f"s{i}" for i in range(1, r)]
    return tuple(names)


def multiply_diagrams(x: PartitionDiagram, y: PartitionDiagram) -> tuple[int, PartitionDiagram]:
    """Stack x above y; return (closed middle components, resulting diagram)."""
    if x.size != y.size:
        raise SizeMismatchError(f"strand counts differ: {x.size} vs {y.size}")
    r = x.size
    # nodes: 0..r-1 top (x north), r..2r-1 middle (x south = y north), 2r.. bottom
    ds = _DisjointSet(3 * r)
    for block in x.partition.blocks:
        first = block[0] - 1  # northern point k -> node k-1; southern k' -> r+k-1
        for p in block[1:]:
            ds.union(first, p - 1)
    for block in y.partition.blocks:
        first = block[0] - 1 + r  # y's points shifted down one level
        for p in block[1:]:
            ds.union(first, p - 1 + r)
    touched_outer: set[int] = set()
    classes: dict[int, list[int]] = {}
    for node in range(3 * r):
        root = ds.find(node)
        classes.setdefault(root, []).append(node)
        if node < r or node >= 2 * r:
            touched_outer.add(root)
    closed = 0
    blocks = []
    for root, members in classes.items():
        if root not in touched_outer:
            closed += 1
            continue
        block = [m + 1 for m in members if m < r]
        block += [m - r + 1 for m in members if m >= 2 * r]
        if block:
            blocks.append(block)
    return closed, PartitionDiagram.from_blocks(blocks, r)


def act_on_set_partition(sp: SetPartition, d: PartitionDiagram) -> tuple[int, SetPartition]:
    """Stack a one-row partition on top of a diagram.

    Returns (closed components avoiding the southern row, induced southern
    partition); the module value is delta**closed times that partition.
    """
    if sp.size != d.size:
        raise SizeMismatchError(f"sizes differ: {sp.size} vs {d.size}")
    r = sp.size
    # nodes: 0..r-1 middle (sp's points = d north), r..2r-1 southern
    ds = _DisjointSet(2 * r)
    for block in sp.blocks:
        first = block[0] - 1
        for p in block[1:]:
            ds.union(first, p - 1)
    for block in d.partition.blocks:
        first = block[0] - 1
        for p in block[1:]:
            ds.union(first, p - 1)
    southern_root: dict[int, list[int]] = {}
    roots = set()
    for node in range(2 * r):
        root = ds.find(node)
        roots.add(root)
        if node >= r:
            southern_root.setdefault(root, []).append(node - r + 1)
    closed = len(roots) - len(southern_root)
    result = SetPartition.from_blocks(southern_root.values(), r)
    return closed, result


class AlgebraElement:
    """Finitely supported map from diagrams to two-parameter scalars."""

    __slots__ = ("size", "_terms")

    def __init__(self, size: int, terms: Mapping[PartitionDiagram, TwoParamScalar] | None = None):
        self.size = size
        clean = {}
        for diag, coeff in (terms or {}).items():
            if diag.size != size:
                raise SizeMismatchError("mixed strand counts in one element")
            if coeff:
                clean[diag] = coeff
        self._terms = clean

    @classmethod
    def from_diagram(cls, d: PartitionDiagram) -> "AlgebraElement":
        return cls(d.size, {d: TwoParamScalar.one()})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].partition.labels)

    def coefficient(self, d: PartitionDiagram) -> TwoParamScalar:
        return self._terms.get(d, TwoParamScalar.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.size == other.size
            and self._terms == other._terms
        )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.size != other.size:
            raise SizeMismatchError("cannot add elements of different sizes")
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, TwoParamScalar.zero()) + c
        return AlgebraElement(self.size, out)

    def scaled(self, scalar: TwoParamScalar) -> "AlgebraElement":
        return AlgebraElement(self.size, {d: scalar * c for d, c in self._terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.size != other.size:
            raise SizeMismatchError("cannot multiply elements of different sizes")
        out: dict[PartitionDiagram, TwoParamScalar] = {}
        for dx, cx in self._terms.items():
            for dy, cy in other._terms.items():
                t, z = multiply_diagrams(dx, dy)
                contrib = (cx * cy) * TwoParamScalar.monomial(t, t)
                out[z] = out.get(z, TwoParamScalar.zero()) + contrib
        return AlgebraElement(self.size, out)

    def __repr__(self) -> str:
        if not self._terms:
            return "AlgebraElement(0)"
        return " + ".join(f"({c})*{d}" for d, c in self.items())
