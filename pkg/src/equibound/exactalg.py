"""Exact rational scalars, sparse multivariate polynomials, and univariate
rational functions.

Everything in this module is immutable and exact.  These are the atoms the
certificates elsewhere in the package are built from: a bound that is proved
rather than floated has to survive arbitrary-precision cross-multiplication,
so no float ever enters here.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Rational",
    "Polynomial",
    "RationalFunction",
    "var",
    "poly_eval",
    "poly_substitute",
    "ratfun_equal",
]

# Exact scalars are plain Fractions: always reduced, denominator positive,
# zero canonicalized to 0/1, arbitrary-precision integers underneath.
Rational = Fraction

# Canonical variable order.  Every Polynomial's variable tuple must be a
# subsequence of this, which makes term maps and cross-module comparisons
# deterministic.
VAR_ORDER = ("u", "v", "t", "a")

_VAR_RANK = {name: i for i, name in enumerate(VAR_ORDER)}


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an exact rational, got %s" % type(value).__name__)


class Polynomial:
    """Sparse multivariate polynomial with Rational coefficients.

    ``variables`` is an ordered tuple of names drawn from ``VAR_ORDER`` and
    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  Binary operations align operands onto the merged variable
    set automatically, so ``var("u") + var("t")`` just works.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        for name in variables:
            if name not in _VAR_RANK:
                raise ValueError("unknown variable %r" % (name,))
        ranks = [_VAR_RANK[name] for name in variables]
        if ranks != sorted(set(ranks)):
            raise ValueError("variables must be distinct and in canonical order")
        clean = {}
        width = len(variables)
        for expo, coeff in terms.items():
            expo = tuple(expo)
            if len(expo) != width:
                raise ValueError("exponent vector %r has wrong length" % (expo,))
            if any((not isinstance(e, int)) or e < 0 for e in expo):
                raise ValueError("exponents must be nonnegative integers")
            coeff = _coerce(coeff)
            if coeff:
                clean[expo] = coeff
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value):
        value = _coerce(value)
        return cls((), {(): value} if value else {})

    @classmethod
    def variable(cls, name):
        return cls((name,), {(1,): Fraction(1)})

    # -- helpers ------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(expo) for expo in self.terms)

    def _remapped(self, merged):
        # Reindex exponent vectors onto the variable tuple `merged`,
        # which must contain all of self's variables.
        if merged == self.variables:
            return dict(self.terms)
        positions = [merged.index(name) for name in self.variables]
        out = {}
        for expo, coeff in self.terms.items():
            vec = [0] * len(merged)
            for pos, e in zip(positions, expo):
                vec[pos] = e
            out[tuple(vec)] = coeff
        return out

    @staticmethod
    def _merge_vars(p, q):
        names = set(p.variables) | set(q.variables)
        return tuple(name for name in VAR_ORDER if name in names)

    @staticmethod
    def _as_poly(value):
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial.constant(value)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = Polynomial._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        merged = Polynomial._merge_vars(self, other)
        terms = self._remapped(merged)
        for expo, coeff in other._remapped(merged).items():
            total = terms.get(expo, Fraction(0)) + coeff
            if total:
                terms[expo] = total
            else:
                terms.pop(expo, None)
        return Polynomial(merged, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = Polynomial._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Polynomial._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        merged = Polynomial._merge_vars(self, other)
        left = self._remapped(merged)
        right = other._remapped(merged)
        terms = {}
        for ea, ca in left.items():
            for eb, cb in right.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                total = terms.get(key, Fraction(0)) + ca * cb
                if total:
                    terms[key] = total
                else:
                    terms.pop(key, None)
        return Polynomial(merged, terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = _coerce(scalar)
        if not scalar:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Polynomial(self.variables, {e: c / scalar for e, c in self.terms.items()})

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = Polynomial._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        merged = Polynomial._merge_vars(self, other)
        return self._remapped(merged) == other._remapped(merged)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        parts = []
        for expo in sorted(self.terms, reverse=True):
            coeff = self.terms[expo]
            mono = "*".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.variables, expo)
                if e
            )
            if mono:
                parts.append("%s*%s" % (coeff, mono) if coeff != 1 else mono)
            else:
                parts.append(str(coeff))
        return "Polynomial(%s)" % " + ".join(parts)


def var(name):
    """The monomial for a single variable, e.g. ``var("u")``."""
    return Polynomial.variable(name)


def poly_eval(p, point):
    """Evaluate ``p`` exactly at ``point`` (a map variable name -> Rational).

    Every variable of ``p`` must be assigned; extra assignments are ignored.
    """
    values = {}
    for name in p.variables:
        if name not in point:
            raise ValueError("no value assigned to variable %r" % (name,))
        values[name] = _coerce(point[name])
    total = Fraction(0)
    for expo, coeff in p.terms.items():
        term = coeff
        for name, e in zip(p.variables, expo):
            if e:
                term *= values[name] ** e
        total += term
    return total


def poly_substitute(p, variable, replacement):
    """Compose: replace every occurrence of ``variable`` in ``p`` by the
    polynomial ``replacement`` and expand."""
    replacement = Polynomial._as_poly(replacement)
    if replacement is NotImplemented:
        raise TypeError("replacement must be a Polynomial or exact scalar")
    if variable not in p.variables:
        return p
    which = p.variables.index(variable)
    kept = tuple(name for i, name in enumerate(p.variables) if i != which)
    result = Polynomial.constant(0)
    for expo, coeff in p.terms.items():
        mono_terms = {tuple(e for i, e in enumerate(expo) if i != which): coeff}
        piece = Polynomial(kept, mono_terms) * replacement ** expo[which]
        result = result + piece
    return result


# -- univariate machinery for rational functions ----------------------

def _univariate_coeffs(p, name):
    # Dense coefficient list (index = power) for a Polynomial that uses at
    # most the single variable `name`.
    for other in p.variables:
        if other != name:
            if any(e for expo in p.terms for v, e in zip(p.variables, expo) if v == other):
                raise ValueError("polynomial is not univariate in %r" % (name,))
    if not p.terms:
        return []
    if name in p.variables:
        which = p.variables.index(name)
        deg = max(expo[which] for expo in p.terms)
        coeffs = [Fraction(0)] * (deg + 1)
        for expo, coeff in p.terms.items():
            coeffs[expo[which]] += coeff
    else:
        coeffs = [sum(p.terms.values(), Fraction(0))]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _coeffs_to_poly(coeffs, name):
    return Polynomial((name,), {(k,): c for k, c in enumerate(coeffs) if c})


def _poly_divmod(num, den):
    # Long division over the rationals; den must be nonzero.
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    inv_lead = 1 / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        factor = num[k + len(den) - 1] * inv_lead
        q[k] = factor
        if factor:
            for i, d in enumerate(den):
                num[k + i] -= factor * d
    while num and not num[-1]:
        num.pop()
    return q, num


def _poly_gcd(f, g):
    while g:
        _, f = _poly_divmod(f, g)
        f, g = g, f
    if f:
        inv = 1 / f[-1]
        f = [c * inv for c in f]
    return f


class RationalFunction:
    """Quotient of two univariate polynomials in the variable ``a``.

    Canonical form: numerator and denominator are coprime and the
    denominator is monic, so equal values have identical representations.
    """

    __slots__ = ("numerator", "denominator")

    VARIABLE = "a"

    def __init__(self, numerator, denominator=1):
        num = Polynomial._as_poly(numerator)
        den = Polynomial._as_poly(denominator)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be polynomials in a")
        ncoef = _univariate_coeffs(num, self.VARIABLE)
        dcoef = _univariate_coeffs(den, self.VARIABLE)
        if not dcoef:
            raise ZeroDivisionError("rational function with zero denominator")
        if not ncoef:
            dcoef = [Fraction(1)]
        else:
            g = _poly_gcd(ncoef, dcoef)
            if len(g) > 1:
                ncoef, rem = _poly_divmod(ncoef, g)
                assert not rem
                dcoef, rem = _poly_divmod(dcoef, g)
                assert not rem
            lead = dcoef[-1]
            ncoef = [c / lead for c in ncoef]
            dcoef = [c / lead for c in dcoef]
        object.__setattr__(self, "numerator", _coeffs_to_poly(ncoef, self.VARIABLE))
        object.__setattr__(self, "denominator", _coeffs_to_poly(dcoef, self.VARIABLE))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def variable(cls):
        return cls(Polynomial.variable(cls.VARIABLE))

    @staticmethod
    def _as_ratfun(value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction, Polynomial)):
            return RationalFunction(value)
        return NotImplemented

    @property
    def is_zero(self):
        return self.numerator.is_zero

    def __add__(self, other):
        other = RationalFunction._as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = RationalFunction._as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RationalFunction._as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction._as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.numerator.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(
            self.numerator * other.denominator,
            self.denominator * other.numerator,
        )

    def __rtruediv__(self, other):
        other = RationalFunction._as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            raise ValueError("rational function powers must be integers")
        if exponent < 0:
            return RationalFunction(self.denominator, self.numerator) ** (-exponent)
        return RationalFunction(self.numerator ** exponent, self.denominator ** exponent)

    def __eq__(self, other):
        other = RationalFunction._as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        # Canonical form is unique, so structural equality suffices.
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    __hash__ = None

    def evaluate(self, value):
        """Exact value at a rational point; the denominator must not vanish."""
        value = _coerce(value)
        point = {self.VARIABLE: value}
        den = poly_eval(self.denominator, point)
        if not den:
            raise ZeroDivisionError("denominator vanishes at %s" % (value,))
        return poly_eval(self.numerator, point) / den

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.numerator, self.denominator)


def ratfun_equal(f, g):
    """True iff ``f`` and ``g`` agree as rational functions.

    Decided by cross-multiplying the (already canonical) numerators and
    denominators, so it is robust even if the inputs were built through
    different factorizations.
    """
    f = RationalFunction._as_ratfun(f)
    g = RationalFunction._as_ratfun(g)
    if f is NotImplemented or g is NotImplemented:
        raise TypeError("ratfun_equal expects rational functions")
    return f.numerator * g.denominator == g.numerator * f.denominator
