"""Replay the exact certificate behind the flat windows, one step at a time.

Everything here is Fraction arithmetic; nothing is trusted to floats.
The multiplier t weights the degree-3 constraint against the degree-1
constraint so that the combined coefficient of the cubic variables comes
out negative, which converts feasibility into the cap on the objective
shift A and hence the bound 1 + A.
"""

from fractions import Fraction

from equibound import bounds


def walkthrough(a):
    cert = bounds.verify_proof_chain(a)
    print("cosine a = %s" % (a,))
    print("  multiplier t          = %s" % (cert.t,))
    print("  combined coefficient  = %s" % (cert.combined_coeff,))
    print("  substitution dim      = %s" % (cert.n_sub,))
    print("  cap on A              = %s" % (cert.bound_on_A,))
    print("  final bound           = %s" % (cert.final_bound,))


def main():
    for m in (3, 5, 7):
        walkthrough(Fraction(1, m))
        print()

    # the identities also close in the rational-function field, with the
    # cosine left symbolic
    print("symbolic replay:", "ok" if bounds.verify_proof_chain_symbolic() else "FAIL")

    # and a perturbed multiplier must be rejected there, which is the
    # evidence that the checks have teeth
    broken = bounds.verify_proof_chain_symbolic(perturbation=Fraction(1, 10 ** 9))
    print("perturbed replay rejected:", "yes" if not broken else "NO")


if __name__ == "__main__":
    main()
