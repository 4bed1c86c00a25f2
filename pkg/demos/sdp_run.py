"""One full semidefinite solve, then an exact feasibility audit.

The solver runs in floating point; nothing it reports is taken on faith.
A rounded iterate is pushed back through the exact checker, which
re-evaluates every constraint in rational arithmetic, so the printed
verdict at the end does not depend on solver tolerances at all.
"""

from fractions import Fraction

from equibound import sdpsolve


def main():
    n, alpha = 23, Fraction(1, 5)
    problem = sdpsolve.assemble(n, alpha)
    rows, block_sizes = problem.size
    print("problem at (n = %d, alpha = %s):" % (n, alpha))
    print("  %d linear rows, %d matrix blocks of sizes %s"
          % (rows, len(problem.blocks), list(block_sizes)))

    solution = sdpsolve.solve(problem)
    print("solver: status %s" % (solution.status,))
    print("  objective       %.8f" % (solution.objective,))
    print("  reported bound  %.8f" % (solution.reported_bound,))
    print("  max violation   %.2e" % (solution.max_violation,))
    print("  line count      %d" % (sdpsolve.as_line_count(solution),))

    # audit a modest truncation exactly: round the iterate to rationals
    # and re-check every constraint with Fractions
    k3, k4, d = 6, 3, 2
    small = sdpsolve.solve(sdpsolve.assemble(n, alpha, k3=k3, k4=k4, d=d))
    raw = tuple(Fraction(v).limit_denominator(10 ** 8) for v in small.x)
    audit = sdpsolve.check_feasible_exact(n, alpha, raw, k3=k3, k4=k4, d=d)
    print("exact audit at (k3 = %d, k4 = %d, d = %d):" % (k3, k4, d))
    print("  raw rounded iterate: W psd %s, blocks %s"
          % (audit.w_psd, all(audit.blocks_psd)))

    # the optimum saturates the W determinant, so the raw rounding sits a
    # hair outside; contracting toward the (feasible) origin clears it
    shrink = 1 - Fraction(1, 10 ** 5)
    audit = sdpsolve.check_feasible_exact(
        n, alpha, tuple(shrink * v for v in raw), k3=k3, k4=k4, d=d
    )
    print("  contracted by 1 - 1e-5: feasible %s" % (audit.feasible,))
    print("  exact objective there: %s ~ %.6f"
          % (audit.objective, float(audit.objective)))
    print("  so the truncated optimum is certified above %.6f"
          % (float(audit.objective),))


if __name__ == "__main__":
    main()
