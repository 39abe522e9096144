"""Exact two-phase tableau simplex over rationals.

Solves ``min c.x  s.t.  A x >= b, x >= 0`` and returns an optimal basic
solution together with the optimal dual vector ``y >= 0`` of
``max b.y  s.t.  A^T y <= c``. Bland's rule is used for both the entering
and the leaving variable, so the pivot sequence is deterministic and
cannot cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DimensionError
from .report import Report

Rat = Fraction


class Status(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    @classmethod
    def build(cls, objective, rows, rhs) -> "LpProblem":
        return cls(
            tuple(Fraction(c) for c in objective),
            tuple(tuple(Fraction(a) for a in row) for row in rows),
            tuple(Fraction(b) for b in rhs),
        )

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_constraints(self) -> int:
        return len(self.rows)

    def validate(self) -> None:
        if len(self.rhs) != len(self.rows):
            raise DimensionError(
                f"{len(self.rows)} constraint rows but {len(self.rhs)} right-hand sides"
            )
        for i, row in enumerate(self.rows):
            if len(row) != self.num_vars:
                raise DimensionError(
                    f"row {i} has {len(row)} coefficients, expected {self.num_vars}"
                )


@dataclass(frozen=True)
class LpSolution:
    status: Status
    primal: tuple[Fraction, ...] = ()
    dual: tuple[Fraction, ...] = ()
    objective: Fraction | None = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


class _Tableau:
    def __init__(self, p: LpProblem):
        n, m = p.num_vars, p.num_constraints
        self.n, self.m = n, m
        # Columns: x (n), surplus s_i (m), then one artificial per row with b_i > 0.
        self.sign = []
        self.identity_col = []
        self.artificial = set()
        rows = []
        n_art = sum(1 for b in p.rhs if b > 0)
        width = n + m + n_art
        next_art = n + m
        for i, (a, b) in enumerate(zip(p.rows, p.rhs)):
            row = [Fraction(0)] * width
            sigma = 1 if b > 0 else -1
            for j, v in enumerate(a):
                if v:
                    row[j] = sigma * v
            row[n + i] = Fraction(-sigma)
            if sigma > 0:
                row[next_art] = Fraction(1)
                self.identity_col.append(next_art)
                self.artificial.add(next_art)
                next_art += 1
            else:
                self.identity_col.append(n + i)
            self.sign.append(sigma)
            rows.append(row)
        self.width = width
        self.T = rows
        self.rhs = [s * b for s, b in zip(self.sign, p.rhs)]
        self.basis = list(self.identity_col)
        self.d: list[Fraction] = []

    def set_costs(self, cost) -> None:
        # reduced costs d_j = c_j - c_B B^{-1} A_j
        d = list(cost)
        for i, bj in enumerate(self.basis):
            cb = cost[bj]
            if cb:
                row = self.T[i]
                for j in range(self.width):
                    if row[j]:
                        d[j] -= cb * row[j]
        self.d = d

    def pivot(self, r: int, j: int) -> None:
        prow = self.T[r]
        piv = prow[j]
        if piv != 1:
            for k in range(self.width):
                if prow[k]:
                    prow[k] /= piv
            self.rhs[r] /= piv
        nz = [k for k in range(self.width) if prow[k]]
        for i, row in enumerate(self.T):
            if i == r:
                continue
            f = row[j]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
                self.rhs[i] -= f * self.rhs[r]
        f = self.d[j]
        if f:
            for k in nz:
                self.d[k] -= f * prow[k]
        self.basis[r] = j

    def entering(self, allowed) -> int | None:
        for j in range(self.width):
            if self.d[j] < 0 and allowed(j):
                return j
        return None

    def leaving(self, j: int) -> int | None:
        best = None
        best_ratio = None
        for i, row in enumerate(self.T):
            a = row[j]
            if a > 0:
                ratio = self.rhs[i] / a
                if (
                    best is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and self.basis[i] < self.basis[best])
                ):
                    best, best_ratio = i, ratio
        return best

    def run(self, allowed) -> bool:
        """Pivot to optimality; returns False if the objective is unbounded."""
        while True:
            j = self.entering(allowed)
            if j is None:
                return True
            r = self.leaving(j)
            if r is None:
                return False
            self.pivot(r, j)


def solve(p: LpProblem) -> LpSolution:
    p.validate()
    t = _Tableau(p)
    n, m = p.num_vars, p.num_constraints

    if t.artificial:
        phase1 = [Fraction(0)] * t.width
        for j in t.artificial:
            phase1[j] = Fraction(1)
        t.set_costs(phase1)
        t.run(lambda j: True)
        infeasibility = sum(
            (t.rhs[i] for i, bj in enumerate(t.basis) if bj in t.artificial), Fraction(0)
        )
        if infeasibility > 0:
            return LpSolution(Status.INFEASIBLE)
        # Drive zero-level artificials out of the basis where the row allows it;
        # rows with no structural entry are redundant and keep their artificial at 0.
        for i in range(m):
            if t.basis[i] in t.artificial:
                row = t.T[i]
                j = next(
                    (k for k in range(t.width) if row[k] and k not in t.artificial), None
                )
                if j is not None:
                    t.pivot(i, j)

    cost = [Fraction(0)] * t.width
    cost[:n] = p.objective
    t.set_costs(cost)
    if not t.run(lambda j: j not in t.artificial):
        return LpSolution(Status.UNBOUNDED)

    x = [Fraction(0)] * n
    for i, bj in enumerate(t.basis):
        if bj < n:
            x[bj] = t.rhs[i]
    y = tuple(-s * t.d[col] for s, col in zip(t.sign, t.identity_col))
    obj = sum((c * v for c, v in zip(p.objective, x)), Fraction(0))
    return LpSolution(Status.OPTIMAL, tuple(x), y, obj)


def _dot(a, b) -> Fraction:
    return sum((u * v for u, v in zip(a, b) if u and v), Fraction(0))


def check_certificate(p: LpProblem, s: LpSolution) -> Report:
    """Re-derive optimality of ``s`` from scratch: feasibility, duality, slackness."""
    rep = Report()
    if not s.optimal:
        rep.add("status_optimal", False, f"status is {s.status.value}")
        return rep
    x, y = s.primal, s.dual
    if len(x) != p.num_vars or len(y) != p.num_constraints:
        rep.add("dimensions", False,
                f"primal {len(x)}/{p.num_vars}, dual {len(y)}/{p.num_constraints}")
        return rep

    neg = [j for j, v in enumerate(x) if v < 0]
    bad = next(
        (i for i, (row, b) in enumerate(zip(p.rows, p.rhs)) if _dot(row, x) < b), None
    )
    detail = ""
    if neg:
        detail = f"x_{neg[0]} = {x[neg[0]]} < 0"
    elif bad is not None:
        terms = " + ".join(f"x_{j}" if a == 1 else f"{a}*x_{j}"
                           for j, a in enumerate(p.rows[bad]) if a)
        detail = f"constraint {bad} ({terms} >= {p.rhs[bad]}) has lhs {_dot(p.rows[bad], x)}"
    rep.add("primal_feasible", not neg and bad is None, detail)

    negy = [i for i, v in enumerate(y) if v < 0]
    cols = [
        j for j in range(p.num_vars)
        if sum((p.rows[i][j] * y[i] for i in range(p.num_constraints)), Fraction(0))
        > p.objective[j]
    ]
    detail = ""
    if negy:
        detail = f"y_{negy[0]} = {y[negy[0]]} < 0"
    elif cols:
        detail = f"dual constraint for column {cols[0]} violated"
    rep.add("dual_feasible", not negy and not cols, detail)

    primal_obj = _dot(p.objective, x)
    dual_obj = _dot(p.rhs, y)
    rep.add("objective_matches", s.objective == primal_obj,
            f"claimed {s.objective}, c.x = {primal_obj}")
    rep.add("strong_duality", primal_obj == dual_obj,
            f"c.x = {primal_obj}, b.y = {dual_obj}")

    slack_rows = [
        i for i in range(p.num_constraints)
        if y[i] and _dot(p.rows[i], x) != p.rhs[i]
    ]
    slack_cols = [
        j for j in range(p.num_vars)
        if x[j] and sum((p.rows[i][j] * y[i] for i in range(p.num_constraints)),
                        Fraction(0)) != p.objective[j]
    ]
    rep.add("complementary_slackness", not slack_rows and not slack_cols,
            f"rows {slack_rows}, columns {slack_cols}" if slack_rows or slack_cols else "")
    return rep
