"""Truncated six-variable relaxation: numerical solves and exact checks.

The full feasible region is cut out by four constraint families: the six
variables nonnegative, the 2x2 moment matrix W(x) positive semidefinite,
one linear inequality per polynomial degree k >= 1, and one positive
semidefinite matrix constraint per harmonic level k >= 0.  ``assemble``
truncates the last two families at configurable cutoffs, computing every
coefficient exactly and converting to floating point once.  ``solve`` hands
the result to a small dense interior-point SDP solver and reports the
maximizing point, the recomputed objective 1 + (x1 + x2)/3, a feasibility
violation measure, and a safety-margined upper bound.  ``check_feasible_exact``
re-verifies candidate points (e.g. rounded solver output) in rational
arithmetic, with a sound symmetric-elimination PSD decision plus the
leading principal minors for reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from cvxopt import matrix as cvx_matrix
from cvxopt import solvers as cvx_solvers

from .gegenbauer import gegenbauer_eval
from .threepoint import s_matrix

DEFAULT_K3 = 20
DEFAULT_K4 = 10
DEFAULT_D = 5

STATUS_OPTIMAL = "optimal"
STATUS_MAX_ITERATIONS = "max-iterations"
STATUS_INFEASIBLE = "infeasible-numerics"

# objective gradient: A = (x1 + x2)/3
_OBJECTIVE = (Fraction(1, 3), Fraction(1, 3), 0, 0, 0, 0)


def _triples(alpha):
    a, b = alpha, -alpha
    return ((a, a, 1), (b, b, 1), (a, a, a), (a, a, b), (a, b, b), (b, b, b))


def _w_terms():
    # W(x) = [[1, A], [A, A + x3 + x4 + x5 + x6]] split into constant part
    # plus one symmetric coefficient matrix per variable
    third = Fraction(1, 3)
    const = ((1, 0), (0, 0))
    coeffs = []
    for i in range(6):
        if i < 2:
            coeffs.append(((0, third), (third, third)))
        else:
            coeffs.append(((0, 0), (0, 1)))
    return const, tuple(coeffs)


@dataclass(frozen=True, eq=False)
class SdpProblem:
    dim: int
    cosine: Fraction
    k3: int
    k4: int
    block_d: int
    # rows (constant, six coefficients): constant + coeffs . x >= 0
    linear: tuple
    # blocks (label, constant matrix, six coefficient matrices), all ndarray
    blocks: tuple

    @property
    def size(self):
        return len(self.linear), tuple(b.shape[0] for _, b, _ in self.blocks)


@dataclass(frozen=True, eq=False)
class SdpSolution:
    x: tuple
    objective: float
    max_violation: float
    status: str
    gap: float
    reported_bound: float


def assemble(n, alpha, k3=DEFAULT_K3, k4=DEFAULT_K4, d=DEFAULT_D):
    """Truncated problem data at (n, alpha), exact then floated once."""
    if not isinstance(n, int) or n < 3:
        raise ValueError("dimension must be an integer >= 3, got %r" % (n,))
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("cosine must lie in (0, 1), got %s" % (alpha,))
    if not isinstance(k3, int) or k3 < 1:
        raise ValueError("k3 must be an integer >= 1, got %r" % (k3,))
    if not isinstance(k4, int) or k4 < 0:
        raise ValueError("k4 must be an integer >= 0, got %r" % (k4,))
    if not isinstance(d, int) or d < 0:
        raise ValueError("block size d must be an integer >= 0, got %r" % (d,))

    linear = []
    for i in range(6):
        coeffs = [0.0] * 6
        coeffs[i] = 1.0
        linear.append((0.0, tuple(coeffs)))
    for k in range(1, k3 + 1):
        row = (float(gegenbauer_eval(n, k, alpha)),
               float(gegenbauer_eval(n, k, -alpha)), 0.0, 0.0, 0.0, 0.0)
        linear.append((3.0, row))

    blocks = []
    w_const, w_coeffs = _w_terms()
    blocks.append(("W",
                   np.array(w_const, dtype=float),
                   tuple(np.array(c, dtype=float) for c in w_coeffs)))
    for k in range(k4 + 1):
        const = np.array(s_matrix(n, k, d, 1, 1, 1), dtype=float)
        coeffs = tuple(np.array(s_matrix(n, k, d, *triple), dtype=float)
                       for triple in _triples(alpha))
        blocks.append(("S%d" % k, const, coeffs))

    return SdpProblem(dim=n, cosine=alpha, k3=k3, k4=k4, block_d=d,
                      linear=tuple(linear), blocks=tuple(blocks))


def _max_violation(problem, x):
    # residuals are relative to the constraint data's magnitude at the
    # point (floored at 1), the scale at which float feasibility is decided
    worst = 0.0
    for const, coeffs in problem.linear:
        slack = const + sum(c * xi for c, xi in zip(coeffs, x))
        scale = max(1.0, abs(const) + sum(abs(c * xi) for c, xi in zip(coeffs, x)))
        worst = max(worst, -slack / scale)
    for _, const, coeffs in problem.blocks:
        total = const + sum(xi * c for xi, c in zip(x, coeffs))
        scale = max(1.0, float(np.abs(total).max()))
        worst = max(worst, -float(np.linalg.eigvalsh(total)[0]) / scale)
    return max(worst, 0.0)


def solve(problem, tol=1e-7, max_iterations=200):
    """Maximize 1 + (x1 + x2)/3 over the truncated region.

    The reported bound adds the duality gap and a violation-dependent
    margin to the larger of the primal and dual objective values, so a
    slightly infeasible iterate cannot understate the true optimum.

    Internally the solve runs on substituted variables x1 = B z1, x2 = B z2,
    x_i = B^2 z_i for i >= 3 with B = n(n+1)/2: near the optimum the first
    two variables grow like the bound and the rest like its square, so this
    keeps the iterates O(1) and the KKT systems well conditioned.  All
    reported quantities are mapped back to the original variables.
    """
    bhat = problem.dim * (problem.dim + 1) / 2.0
    scales = (bhat, bhat) + (bhat * bhat,) * 4

    # high-degree rows decay like P_k(alpha) and go numerically inert; a row
    # that cannot move the solution at float precision only degenerates the
    # dual, so leave it out of the solver call (it is still satisfied and
    # still counted by the violation report)
    rows = [(const, [c_ * s for c_, s in zip(coeffs, scales)])
            for const, coeffs in problem.linear]
    rows = [r for r in rows if max(abs(v) for v in r[1]) > 1e-9]

    c = cvx_matrix([-float(g) * s for g, s in zip(_OBJECTIVE, scales)])
    hl = cvx_matrix(np.array([const for const, _ in rows]))
    Gl = cvx_matrix(np.array([[-v for v in coeffs] for _, coeffs in rows]))
    Gs, hs = [], []
    for _, const, coeffs in problem.blocks:
        m = const.shape[0]
        scaled = [coeff * s for coeff, s in zip(coeffs, scales)]
        norm = max(float(np.abs(const).max()),
                   max(float(np.abs(sc).max()) for sc in scaled))
        norm = norm if norm > 0 else 1.0
        Gs.append(cvx_matrix(np.column_stack(
            [(-sc / norm).reshape(m * m, order="F") for sc in scaled])))
        hs.append(cvx_matrix(const / norm))

    options = {
        "show_progress": False,
        "maxiters": int(max_iterations),
        # the duality gap lives in objective units, which scale with bhat;
        # feastol stays loose enough for the stopping rule to fire at the
        # converged iterate, before degeneracy can ruin the scaling
        "abstol": tol * max(bhat, 1.0),
        "reltol": 10 * tol,
        "feastol": 1e-6,
    }
    try:
        raw = cvx_solvers.sdp(c, Gl=Gl, hl=hl, Gs=Gs, hs=hs, options=options)
    except (ZeroDivisionError, ArithmeticError, ValueError):
        # interior-point scaling can degenerate on near-boundary problems;
        # report the failure rather than guessing a value
        return SdpSolution(x=(0.0,) * 6, objective=1.0, max_violation=0.0,
                           status=STATUS_INFEASIBLE, gap=math.inf,
                           reported_bound=math.inf)

    if raw["status"] not in ("optimal", "unknown") or raw["x"] is None:
        # claimed infeasibility or unboundedness: the iterate certifies no
        # bound at this truncation
        return SdpSolution(x=(0.0,) * 6, objective=1.0, max_violation=0.0,
                           status=STATUS_INFEASIBLE, gap=math.inf,
                           reported_bound=math.inf)

    x = tuple(max(float(v) * s, 0.0) for v, s in zip(raw["x"], scales))
    objective = 1.0 + (x[0] + x[1]) / 3.0
    violation = _max_violation(problem, x)
    status = STATUS_OPTIMAL if raw["status"] == "optimal" else STATUS_MAX_ITERATIONS

    gap = abs(raw["gap"]) if raw.get("gap") is not None else 0.0
    dual = raw.get("dual objective")
    from_dual = 1.0 - dual if dual is not None else objective
    # the violation is relative, so the margin rescales it to objective units
    margin = gap + 10.0 * violation * max(bhat, 1.0)
    reported = max(objective, from_dual) + margin
    return SdpSolution(x=x, objective=objective, max_violation=violation,
                       status=status, gap=gap, reported_bound=reported)


def as_line_count(solution):
    """Integer form of the reported bound.  A real upper bound on an integer
    quantity may always be floored."""
    return math.floor(solution.reported_bound)


# ---------------------------------------------------------------------------
# exact feasibility checking

@dataclass(frozen=True)
class FeasibilityReport:
    nonneg: tuple
    w_psd: bool
    linear: tuple
    blocks_psd: tuple
    leading_minors: tuple
    objective: Fraction

    @property
    def feasible(self):
        return (all(self.nonneg) and self.w_psd
                and all(self.linear) and all(self.blocks_psd))


def _psd_exact(rows):
    # symmetric rational elimination: M is PSD iff pivoting on positive
    # diagonal entries exhausts the matrix down to an all-zero remainder
    m = [[Fraction(v) for v in row] for row in rows]
    active = list(range(len(m)))
    while active:
        pivot = None
        for j in active:
            if m[j][j] > 0:
                pivot = j
                break
        if pivot is None:
            for i in active:
                if m[i][i] < 0:
                    return False
                for j in active:
                    if i != j and m[i][j] != 0:
                        return False
            return True
        active.remove(pivot)
        p = m[pivot][pivot]
        for i in active:
            f = m[i][pivot] / p
            if f:
                for j in active:
                    m[i][j] -= f * m[pivot][j]
    return True


def _det(rows):
    m = [list(row) for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] / m[col][col]
            for cc in range(col, size):
                m[r][cc] -= f * m[col][cc]
    return det


def _leading_minors(rows):
    return tuple(_det([row[:k] for row in rows[:k]])
                 for k in range(1, len(rows) + 1))


def check_feasible_exact(n, alpha, x, k3=DEFAULT_K3, k4=DEFAULT_K4, d=DEFAULT_D):
    """Exact verdict on a candidate point, constraint family by family.

    PSD verdicts come from the elimination test (sound and complete over the
    rationals); the leading principal minors ride along for diagnostics.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("cosine must lie in (0, 1), got %s" % (alpha,))
    x = tuple(Fraction(v) for v in x)
    if len(x) != 6:
        raise ValueError("expected six variables, got %d" % (len(x),))

    nonneg = tuple(v >= 0 for v in x)

    a = (x[0] + x[1]) / 3
    w_det = a + x[2] + x[3] + x[4] + x[5] - a * a
    # top-left entry of W is 1, so PSD reduces to the determinant sign
    w_psd = w_det >= 0

    linear = tuple(
        3 + gegenbauer_eval(n, k, alpha) * x[0] + gegenbauer_eval(n, k, -alpha) * x[1] >= 0
        for k in range(1, k3 + 1))

    blocks_psd = []
    minors = []
    for k in range(k4 + 1):
        total = [list(row) for row in s_matrix(n, k, d, 1, 1, 1)]
        for weight, triple in zip(x, _triples(alpha)):
            if weight:
                part = s_matrix(n, k, d, *triple)
                for i in range(len(total)):
                    for j in range(len(total)):
                        total[i][j] += weight * part[i][j]
        blocks_psd.append(_psd_exact(total))
        minors.append(_leading_minors(total))

    return FeasibilityReport(nonneg=nonneg, w_psd=w_psd, linear=linear,
                             blocks_psd=tuple(blocks_psd),
                             leading_minors=tuple(minors),
                             objective=1 + a)
