"""Semidefinite relaxation builders for the stable set problem.

Two routes are provided: the dedicated theta formulations (the compact
trace-one form is the one the search consumes), and a generic lifting
that turns any binary model with linear rows into a semidefinite program.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph

__all__ = [
    "Constraint",
    "SdpProblem",
    "BinaryModel",
    "binarize",
    "lift",
    "build_theta1",
    "build_theta3",
    "write_sdpa",
]

EQ = "=="
LE = "<="


@dataclass(frozen=True)
class Constraint:
    """One trace constraint tr(A X) sense rhs.

    entries lists the upper triangle of the symmetric matrix A as
    (i, j, v) with i <= j; an off-diagonal entry stands for both A[i,j]
    and A[j,i].
    """

    entries: tuple[tuple[int, int, float], ...]
    sense: str
    rhs: float

    def __post_init__(self):
        if self.sense not in (EQ, LE):
            raise ValueError(f"sense must be '{EQ}' or '{LE}', got {self.sense!r}")
        for i, j, _ in self.entries:
            if i > j:
                raise ValueError(f"entry ({i},{j}) not in upper triangle")

    def dense(self, dim: int) -> np.ndarray:
        a = np.zeros((dim, dim))
        for i, j, v in self.entries:
            a[i, j] = v
            a[j, i] = v
        return a


@dataclass(frozen=True)
class SdpProblem:
    """Standard-form SDP: maximize tr(cost @ X) subject to trace constraints and X PSD."""

    dim: int
    cost: np.ndarray
    constraints: tuple[Constraint, ...]
    label_map: dict[int, int] | None = None
    kind: str = "generic"

    def __post_init__(self):
        if self.cost.shape != (self.dim, self.dim):
            raise ValueError("cost matrix shape does not match dim")
        if not np.allclose(self.cost, self.cost.T):
            raise ValueError("cost matrix must be symmetric")
        for c in self.constraints:
            for i, j, _ in c.entries:
                if j >= self.dim:
                    raise ValueError(f"constraint entry ({i},{j}) outside dim {self.dim}")


@dataclass(frozen=True)
class BinaryModel:
    """Binary optimization model: vars in {0,1}, linear rows, linear objective."""

    vars: tuple[str, ...]
    linear_constraints: tuple[tuple[tuple[float, ...], str, float], ...]
    objective: tuple[float, ...]

    def __post_init__(self):
        n = len(self.vars)
        if len(self.objective) != n:
            raise ValueError("objective length does not match variable count")
        for coeffs, sense, _ in self.linear_constraints:
            if len(coeffs) != n:
                raise ValueError("constraint coefficient length does not match variable count")
            if sense not in (EQ, LE):
                raise ValueError(f"bad sense {sense!r}")


def binarize(domains: Sequence[Sequence[object]]) -> tuple[BinaryModel, dict[int, tuple[int, object]]]:
    """Channel finite-domain variables into indicator binaries.

    Creates one binary per (variable, domain value) pair plus one
    exactly-one row per original variable. The channel map takes each
    binary index back to its (variable, value) pair. The objective of
    the returned skeleton is zero; callers fill it in.
    """
    names: list[str] = []
    channel: dict[int, tuple[int, object]] = {}
    for i, dom in enumerate(domains):
        values = list(dom)
        if not values:
            raise ValueError(f"variable {i} has an empty domain")
        for v in values:
            channel[len(names)] = (i, v)
            names.append(f"v{i}={v}")
    total = len(names)
    rows = []
    for i in range(len(domains)):
        coeffs = [0.0] * total
        for k, (vi, _) in channel.items():
            if vi == i:
                coeffs[k] = 1.0
        rows.append((tuple(coeffs), EQ, 1.0))
    model = BinaryModel(
        vars=tuple(names),
        linear_constraints=tuple(rows),
        objective=(0.0,) * total,
    )
    return model, channel


def lift(model: BinaryModel) -> SdpProblem:
    """Lift a binary model to an SDP over the (N+1)x(N+1) moment matrix.

    Row/column 0 is the homogenization coordinate, pinned to 1 by an
    explicit equality. Each binary d_i gets the diagonal-linking row
    X_ii = X_0i; each linear row becomes a trace constraint that reads
    the variables off the diagonal and the border in equal halves.
    """
    n = len(model.vars)
    dim = n + 1
    cons: list[Constraint] = [Constraint(((0, 0, 1.0),), EQ, 1.0)]
    for i in range(1, n + 1):
        cons.append(Constraint(((0, i, -0.5), (i, i, 1.0)), EQ, 0.0))
    for coeffs, sense, rhs in model.linear_constraints:
        entries = []
        for i, a in enumerate(coeffs, start=1):
            if a != 0.0:
                entries.append((0, i, a / 4.0))
                entries.append((i, i, a / 2.0))
        cons.append(Constraint(tuple(entries), sense, rhs))
    cost = np.zeros((dim, dim))
    for i, w in enumerate(model.objective, start=1):
        cost[i, i] = w
    return SdpProblem(
        dim=dim,
        cost=cost,
        constraints=tuple(cons),
        label_map={i: i - 1 for i in range(1, n + 1)},
        kind="lift",
    )


def stable_set_binary_model(g: Graph) -> BinaryModel:
    """Native binary model of the stable set problem: x_i + x_j <= 1 per edge."""
    rows = []
    for i, j in sorted(g.edges):
        coeffs = [0.0] * g.n
        coeffs[i] = 1.0
        coeffs[j] = 1.0
        rows.append((tuple(coeffs), LE, 1.0))
    return BinaryModel(
        vars=tuple(f"x{i + 1}" for i in range(g.n)),
        linear_constraints=tuple(rows),
        objective=tuple(g.weights),
    )


def build_theta1(g: Graph) -> SdpProblem:
    """Theta relaxation on the bordered (n+1)-dimensional moment matrix.

    Maximize tr(W X) with W carrying the vertex weights on diagonal
    entries 1..n, subject to the diagonal-linking rows, one zero per
    edge, the X_00 = 1 pin, and X PSD. Kept for cross-validation; the
    search uses the compact form below.
    """
    dim = g.n + 1
    cons: list[Constraint] = []
    for i in range(1, g.n + 1):
        cons.append(Constraint(((0, i, -0.5), (i, i, 1.0)), EQ, 0.0))
    for i, j in sorted(g.edges):
        cons.append(Constraint(((i + 1, j + 1, 0.5),), EQ, 0.0))
    cons.append(Constraint(((0, 0, 1.0),), EQ, 1.0))
    cost = np.zeros((dim, dim))
    for i, w in enumerate(g.weights, start=1):
        cost[i, i] = w
    return SdpProblem(
        dim=dim,
        cost=cost,
        constraints=tuple(cons),
        label_map={i: i - 1 for i in range(1, g.n + 1)},
        kind="theta1",
    )


def build_theta3(g: Graph) -> SdpProblem:
    """Compact theta relaxation: trace-one matrix, one zero per edge.

    The cost matrix has entries sqrt(w_i w_j), which requires the
    weights to be nonnegative. Matrices have dimension n and there are
    m + 1 constraints, which is why this is the formulation the solver
    pipeline uses.
    """
    if any(w < 0 for w in g.weights):
        raise ValueError("theta construction requires nonnegative weights")
    w = np.asarray(g.weights)
    root = np.sqrt(w)
    cost = np.outer(root, root)
    cons: list[Constraint] = [
        Constraint(tuple((i, i, 1.0) for i in range(g.n)), EQ, 1.0)
    ]
    for i, j in sorted(g.edges):
        cons.append(Constraint(((i, j, 0.5),), EQ, 0.0))
    return SdpProblem(
        dim=g.n,
        cost=cost,
        constraints=tuple(cons),
        label_map={i: i for i in range(g.n)},
        kind="theta3",
    )


def write_sdpa(p: SdpProblem) -> str:
    """Serialize in sparse SDPA format for cross-checks with external solvers.

    Layout: constraint count, block count, block sizes (a trailing
    negative block holds one diagonal slack per inequality row), the
    right-hand-side vector, then "matno block i j value" entries with
    matrix 0 holding the cost. Entries are 1-indexed, upper triangle.
    """
    m = len(p.constraints)
    slack_rows = [k for k, c in enumerate(p.constraints) if c.sense == LE]
    lines = [f'"thetaguide export: kind={p.kind} dim={p.dim}"', str(m)]
    if slack_rows:
        lines.append("2")
        lines.append(f"{p.dim} -{len(slack_rows)}")
    else:
        lines.append("1")
        lines.append(str(p.dim))
    lines.append(" ".join(repr(c.rhs) for c in p.constraints))
    entries: list[str] = []
    rows, cols = np.nonzero(np.triu(p.cost))
    for i, j in zip(rows, cols):
        entries.append(f"0 1 {i + 1} {j + 1} {p.cost[i, j]!r}")
    for k, c in enumerate(p.constraints, start=1):
        for i, j, v in sorted(c.entries):
            entries.append(f"{k} 1 {i + 1} {j + 1} {v!r}")
    for pos, k in enumerate(slack_rows, start=1):
        entries.append(f"{k + 1} 2 {pos} {pos} 1.0")
    return "\n".join(lines + entries) + "\n"
