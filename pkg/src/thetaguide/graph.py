"""Weighted undirected graphs: DIMACS I/O, complement, random instances, exact oracle.

Vertices are 0-indexed everywhere in memory; the DIMACS convention of
1-indexed vertices applies only at the parse/serialize boundary.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

__all__ = [
    "Graph",
    "StableSet",
    "DimacsWarning",
    "DimacsError",
    "parse_dimacs",
    "write_dimacs",
    "load_weights",
    "write_weights",
    "complement",
    "edge_density",
    "random_graph",
    "brute_force_alpha",
    "is_stable_set",
]

BRUTE_FORCE_LIMIT = 25


class DimacsError(ValueError):
    """Malformed DIMACS input."""


class DimacsWarning(UserWarning):
    """Recoverable oddity in a DIMACS file (duplicate edges, m mismatch)."""


@dataclass(frozen=True)
class Graph:
    """Immutable weighted undirected graph.

    edges holds unordered pairs (i, j) with 0 <= i < j < n; weights has one
    nonnegative entry per vertex (all 1.0 for unweighted instances).
    """

    n: int
    edges: frozenset[tuple[int, int]]
    weights: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if not self.weights:
            object.__setattr__(self, "weights", (1.0,) * self.n)
        if len(self.weights) != self.n:
            raise ValueError(
                f"expected {self.n} weights, got {len(self.weights)}"
            )
        if any(w < 0 for w in self.weights):
            raise ValueError("vertex weights must be nonnegative")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit j of adjacency[i] set iff i~j)."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @cached_property
    def integer_weights(self) -> bool:
        return all(w == int(w) for w in self.weights)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def total_weight(self, members) -> float:
        return sum(self.weights[v] for v in members)


@dataclass(frozen=True)
class StableSet:
    """A vertex subset with no internal edge, plus its total weight."""

    members: frozenset[int]
    value: float


def is_stable_set(g: Graph, members) -> bool:
    mask = 0
    for v in members:
        mask |= 1 << v
    return all(not (g.adjacency[v] & mask) for v in members)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS clique-format graph ("c", "p edge n m", "e i j" lines).

    Duplicate edge lines are collapsed with a DimacsWarning; a mismatch
    between the declared and the distinct edge count also warns (real
    benchmark files contain both).
    """
    n = None
    declared_m = None
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            n, declared_m = int(fields[2]), int(fields[3])
            if n < 0 or declared_m < 0:
                raise DimacsError(f"line {lineno}: negative size in problem line")
        elif fields[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(fields) < 3:
                raise DimacsError(f"line {lineno}: malformed edge line {line!r}")
            i, j = int(fields[1]), int(fields[2])
            if not (1 <= i <= n and 1 <= j <= n):
                raise DimacsError(
                    f"line {lineno}: vertex out of range 1..{n} in {line!r}"
                )
            if i == j:
                raise DimacsError(f"line {lineno}: self-loop on vertex {i}")
            e = (i - 1, j - 1) if i < j else (j - 1, i - 1)
            if e in edges:
                duplicates += 1
            else:
                edges.add(e)
        else:
            raise DimacsError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise DimacsError("missing problem line")
    if duplicates:
        warnings.warn(
            f"{duplicates} duplicate edge line(s) collapsed", DimacsWarning
        )
    if declared_m != len(edges):
        warnings.warn(
            f"problem line declares m={declared_m} but file has "
            f"{len(edges)} distinct edges",
            DimacsWarning,
        )
    return Graph(n=n, edges=frozenset(edges))


def write_dimacs(g: Graph, name: str | None = None) -> str:
    """Serialize to DIMACS clique format: sorted edges, 1-indexed, LF endings."""
    lines = []
    if name:
        lines.append(f"c {name}")
    lines.append(f"p edge {g.n} {g.m}")
    for i, j in sorted(g.edges):
        lines.append(f"e {i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


def load_weights(g: Graph, text: str) -> Graph:
    """Apply a weight sidecar ("<vertex> <weight>" per line, 1-indexed).

    Returns a new graph; vertices not listed get weight 1.
    """
    weights = [1.0] * g.n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<vertex> <weight>', got {line!r}")
        v = int(fields[0])
        w = float(fields[1])
        if not (1 <= v <= g.n):
            raise ValueError(f"line {lineno}: vertex {v} out of range 1..{g.n}")
        if w < 0:
            raise ValueError(f"line {lineno}: negative weight {w} for vertex {v}")
        weights[v - 1] = w
    return Graph(n=g.n, edges=g.edges, weights=tuple(weights))


def write_weights(g: Graph) -> str:
    """Serialize vertex weights as a sidecar file (integers stay integers)."""
    lines = []
    for v, w in enumerate(g.weights, start=1):
        lines.append(f"{v} {int(w) if w == int(w) else w}")
    return "\n".join(lines) + "\n"


def complement(g: Graph) -> Graph:
    """Complement graph: (i, j) is an edge iff i != j and (i, j) is not in g."""
    edges = frozenset(
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if (i, j) not in g.edges
    )
    return Graph(n=g.n, edges=edges, weights=g.weights)


def edge_density(g: Graph) -> Fraction:
    """Exact edge density m / (n(n-1)/2). Requires n >= 2."""
    if g.n < 2:
        raise ValueError(f"edge density undefined for n={g.n}")
    return Fraction(g.m, g.n * (g.n - 1) // 2)


def _unrank_pair(k: int, n: int) -> tuple[int, int]:
    # Pairs (i, j), i < j, ranked lexicographically: rank = i*n - i(i+1)/2 + j - i - 1.
    i = n - 2 - (math.isqrt(4 * n * (n - 1) - 8 * k - 7) - 1) // 2
    j = k - i * n + i * (i + 1) // 2 + i + 1
    return i, j


def random_graph(n: int, density: float, weighted: bool = False, seed: int = 0) -> Graph:
    """Seeded random graph with exactly round(density * C(n,2)) distinct edges.

    Edges are drawn uniformly without replacement; with weighted=True the
    vertex weights are integers uniform on [1, 100]. Bit-identical output
    for identical arguments.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not (0.0 <= density <= 1.0):
        raise ValueError(f"density must be in [0, 1], got {density}")
    total = n * (n - 1) // 2
    m = round(density * total)
    rng = random.Random(seed)
    ranks = rng.sample(range(total), m)
    edges = frozenset(_unrank_pair(k, n) for k in ranks)
    if weighted:
        weights = tuple(float(rng.randint(1, 100)) for _ in range(n))
    else:
        weights = (1.0,) * n
    return Graph(n=n, edges=edges, weights=weights)


def brute_force_alpha(g: Graph) -> StableSet:
    """Exact maximum-weight stable set by exhaustive branch enumeration.

    Independent of the CP search machinery; guarded to n <= 25.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got n={g.n}"
        )
    adj = g.adjacency
    weights = g.weights
    # closed neighborhoods including the vertex itself
    closed = [adj[v] | (1 << v) for v in range(g.n)]
    any_edge = 0
    for v in range(g.n):
        any_edge |= adj[v]
    memo: dict[int, tuple[float, int]] = {}

    def weight_of(mask: int) -> float:
        total = 0.0
        while mask:
            low = mask & -mask
            total += weights[low.bit_length() - 1]
            mask ^= low
        return total

    def edge_free(mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            if adj[low.bit_length() - 1] & mask:
                return False
            m ^= low
        return True

    def best(free: int) -> tuple[float, int]:
        if free == 0:
            return 0.0, 0
        hit = memo.get(free)
        if hit is not None:
            return hit
        if edge_free(free):
            result = (weight_of(free), free)
            memo[free] = result
            return result
        v = (free & -free).bit_length() - 1
        # exclude v
        val0, set0 = best(free & ~(1 << v))
        # include v
        val1, set1 = best(free & ~closed[v])
        val1 += weights[v]
        set1 |= 1 << v
        result = (val0, set0) if val0 >= val1 else (val1, set1)
        memo[free] = result
        return result

    value, mask = best((1 << g.n) - 1)
    members = frozenset(v for v in range(g.n) if mask >> v & 1)
    return StableSet(members=members, value=value)
