"""Sparse multivariate polynomials and unreduced rational functions.

Rational functions never compute GCDs: equality is decided by
cross-multiplication, so numerators and denominators stay unreduced.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import QPoly, _frac

# the fixed variable orders used across the package
NQ_VARS = ("N", "q")
CERT_VARS = ("q", "X", "N", "A")
HALF_VARS = ("Y", "P")


class MPoly:
    """Sparse polynomial in a fixed tuple of variables.

    terms: dict mapping exponent tuples to Fraction coefficients.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        t = {}
        if terms:
            for exps, v in (terms.items() if isinstance(terms, dict) else terms):
                exps = tuple(exps)
                if len(exps) != len(self.vars):
                    raise ValueError("exponent tuple arity mismatch")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                v = _frac(v)
                if v:
                    t[exps] = t.get(exps, Fraction(0)) + v
                    if not t[exps]:
                        del t[exps]
        self.terms = t

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, v):
        return cls(vars, {(0,) * len(vars): v})

    @classmethod
    def one(cls, vars):
        return cls.const(vars, 1)

    @classmethod
    def var(cls, vars, name, power: int = 1):
        vars = tuple(vars)
        i = vars.index(name)
        exps = tuple(power if j == i else 0 for j in range(len(vars)))
        return cls(vars, {exps: 1})

    @classmethod
    def from_qpoly(cls, p: QPoly, vars, name=None):
        """Embed a univariate polynomial; variable defaults to p.var."""
        vars = tuple(vars)
        i = vars.index(name or p.var)
        return cls(vars, {tuple(e if j == i else 0 for j in range(len(vars))): v
                          for e, v in p.c.items()})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, name: str) -> int:
        """Max exponent of one variable; -1 for the zero polynomial."""
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable set mismatch: {self.vars} vs {other.vars}")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self.terms)
        for e, v in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + v
        return MPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + v1 * v2
        return MPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    # -- division ----------------------------------------------------------

    def try_exact_div(self, other: "MPoly"):
        """Quotient self/other if the division is exact, else None.

        Reduction by the lex-leading term of `other`; terminates with an exact
        quotient exactly when other divides self.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.terms)
        quo = {}
        dlead = max(other.terms)
        dcoef = other.terms[dlead]
        while rem:
            e = max(rem)
            de = tuple(a - b for a, b in zip(e, dlead))
            if any(x < 0 for x in de):
                return None
            f = rem[e] / dcoef
            quo[de] = quo.get(de, Fraction(0)) + f
            for e2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(de, e2))
                rem[k] = rem.get(k, Fraction(0)) - f * v2
                if not rem[k]:
                    del rem[k]
        return MPoly(self.vars, quo)

    def exact_div(self, other: "MPoly"):
        q = self.try_exact_div(other)
        if q is None:
            raise ValueError("inexact multivariate division")
        return q

    # -- substitutions -----------------------------------------------------

    def scale_var(self, name: str, by: str, power: int = 1):
        """Substitute name -> by**power * name (e.g. A -> q*A)."""
        i = self.vars.index(name)
        j = self.vars.index(by)
        t = {}
        for e, v in self.terms.items():
            e2 = list(e)
            e2[j] += power * e[i]
            e2 = tuple(e2)
            t[e2] = t.get(e2, Fraction(0)) + v
        return MPoly(self.vars, t)

    def downscale_var(self, name: str, by: str, power: int = 1):
        """Return (p', d) with p(name/by**power) = p' / by**(power*d).

        d is the degree of the polynomial in `name`; p' stays a polynomial.
        """
        i = self.vars.index(name)
        j = self.vars.index(by)
        d = self.degree_in(name)
        if d < 0:
            return self, 0
        t = {}
        for e, v in self.terms.items():
            e2 = list(e)
            e2[j] += power * (d - e[i])
            e2 = tuple(e2)
            t[e2] = t.get(e2, Fraction(0)) + v
        return MPoly(self.vars, t), d

    def subst_var_qpower(self, name: str, target: str, power: int) -> "MPoly":
        """Substitute name -> target**power (both in self.vars)."""
        i = self.vars.index(name)
        j = self.vars.index(target)
        t = {}
        for e, v in self.terms.items():
            e2 = list(e)
            e2[j] += power * e[i]
            e2[i] = 0
            e2 = tuple(e2)
            t[e2] = t.get(e2, Fraction(0)) + v
        return MPoly(self.vars, t)

    def coeffs_in(self, name: str):
        """Split by powers of one variable: dict exp -> MPoly (same var tuple,
        that variable's exponent zeroed)."""
        i = self.vars.index(name)
        out = {}
        for e, v in self.terms.items():
            k = e[i]
            e2 = tuple(0 if j == i else x for j, x in enumerate(e))
            out.setdefault(k, {})[e2] = v
        return {k: MPoly(self.vars, t) for k, t in out.items()}

    def to_qpoly(self, keep: str, var=None) -> QPoly:
        """Collapse to a univariate polynomial; all other variables must be
        absent."""
        i = self.vars.index(keep)
        c = {}
        for e, v in self.terms.items():
            if any(x != 0 for j, x in enumerate(e) if j != i):
                raise ValueError(f"polynomial involves more than {keep}")
            c[e[i]] = v
        return QPoly(c, var=var or keep)

    def eval_qpower(self, name: str, power: int, into: str = "q") -> QPoly:
        """Evaluate at name = q**power, collapsing to a QPoly in q.

        Only valid when the remaining variables are `into` alone.
        """
        i = self.vars.index(name)
        j = self.vars.index(into)
        c = {}
        for e, v in self.terms.items():
            if any(x != 0 for k, x in enumerate(e) if k not in (i, j)):
                raise ValueError("extra variables present")
            k = e[j] + power * e[i]
            c[k] = c.get(k, Fraction(0)) + v
        return QPoly(c, var=into)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {"vars": list(self.vars),
                "terms": [[list(e), str(v.numerator), str(v.denominator)]
                          for e, v in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["vars"]),
                   [(tuple(e), Fraction(int(n), int(d))) for e, n, d in data["terms"]])

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            v = self.terms[e]
            mono = "*".join(
                (name if x == 1 else f"{name}^{x}")
                for name, x in zip(self.vars, e) if x
            )
            a = abs(v)
            body = mono if a == 1 and mono else (f"{a}*{mono}" if mono else str(a))
            parts.append(("- " if v < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"


class RationalFunc:
    """Unreduced ratio of two MPoly values; equality via cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = None):
        if den is None:
            den = MPoly.one(num.vars)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def const(cls, vars, v):
        return cls(MPoly.const(vars, v))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RationalFunc):
            return other
        if isinstance(other, MPoly):
            return RationalFunc(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunc.const(self.vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunc(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def equals(self, other) -> bool:
        other = self._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def scale_var(self, name, by, power=1):
        return RationalFunc(self.num.scale_var(name, by, power),
                            self.den.scale_var(name, by, power))

    def downscale_var(self, name, by, power=1):
        """self with name -> name/by**power, as a RationalFunc (clears the
        negative powers)."""
        n2, dn = self.num.downscale_var(name, by, power)
        d2, dd = self.den.downscale_var(name, by, power)
        # self = (n2/by^(p*dn)) / (d2/by^(p*dd)) = n2*by^(p*dd) / (d2*by^(p*dn))
        byn = MPoly.var(self.vars, by)
        return RationalFunc(n2 * byn ** (power * dd), d2 * byn ** (power * dn))

    def strip_content(self) -> "RationalFunc":
        """Divide numerator and denominator by their shared monomial content
        and normalize the denominator's lex-leading coefficient to 1.

        Cosmetic only (no GCD): the value is unchanged under cross-multiplied
        equality.
        """
        if self.num.is_zero():
            return RationalFunc(MPoly.zero(self.vars), MPoly.one(self.vars))
        nvar = len(self.vars)
        mins = [min(min(e[i] for e in p.terms) for p in (self.num, self.den))
                for i in range(nvar)]
        def shrink(p):
            return MPoly(p.vars, {tuple(x - m for x, m in zip(e, mins)): v
                                  for e, v in p.terms.items()})
        num, den = shrink(self.num), shrink(self.den)
        lead = den.terms[max(den.terms)]
        num = MPoly(num.vars, {e: v / lead for e, v in num.terms.items()})
        den = MPoly(den.vars, {e: v / lead for e, v in den.terms.items()})
        return RationalFunc(num, den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(MPoly.from_json(data["num"]), MPoly.from_json(data["den"]))

    def to_text(self):
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __repr__(self):
        return f"RationalFunc({self.to_text()!r})"


def rational_equal(a, b) -> bool:
    """a.num*b.den - b.num*a.den == 0; no canonical form, no GCDs."""
    if not isinstance(a, RationalFunc):
        a = RationalFunc(a) if isinstance(a, MPoly) else None
    if not isinstance(b, RationalFunc):
        b = RationalFunc(b) if isinstance(b, MPoly) else None
    if a is None or b is None:
        raise TypeError("rational_equal wants RationalFunc or MPoly arguments")
    return a.equals(b)


def nq_const(v):
    return RationalFunc.const(NQ_VARS, v)


def nq_from_qpoly(p: QPoly) -> MPoly:
    return MPoly.from_qpoly(p, NQ_VARS, "q")


def interpolate_in_N(points, degree: int) -> RationalFunc:
    """Lagrange interpolation in N over the rational functions of q.

    points: list of (node, value) with node and value QPoly in q; nodes are
    expected to be powers of q but any pairwise-distinct nodes work.  Uses the
    first degree+1 points; the result evaluates exactly to each used value.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if len(points) < degree + 1:
        raise ValueError(f"need {degree + 1} points, got {len(points)}")
    use = points[: degree + 1]
    nodes = [n for n, _ in use]
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if nodes[i] == nodes[j]:
                raise ValueError("duplicate interpolation nodes")
    N = MPoly.var(NQ_VARS, "N")
    total = RationalFunc.const(NQ_VARS, 0)
    for i, (node_i, value_i) in enumerate(use):
        num = nq_from_qpoly(value_i if isinstance(value_i, QPoly) else QPoly({0: value_i}))
        den = MPoly.one(NQ_VARS)
        for j, (node_j, _) in enumerate(use):
            if j == i:
                continue
            num = num * (N - nq_from_qpoly(node_j))
            den = den * nq_from_qpoly(node_i - node_j)
        total = total + RationalFunc(num, den)
    return total


def eval_rational_at_qn(r: RationalFunc, n: int) -> QPoly:
    """Evaluate an (N, q) rational function at N = q**n; the result must be a
    polynomial in q (exact division)."""
    num = r.num.eval_qpower("N", n)
    den = r.den.eval_qpower("N", n)
    return num.exact_div(den)


def rational_agrees_at_qn(r: RationalFunc, n: int, value: QPoly) -> bool:
    """r(N=q^n) == value without performing a division."""
    num = r.num.eval_qpower("N", n)
    den = r.den.eval_qpower("N", n)
    return num == value * den


def trial_divide_numerator(r: RationalFunc, j_max: int):
    """Strip exact (N - q^j) factors, j = 0..j_max, from the numerator.

    Returns (sorted multiset of extracted j, leftover RationalFunc).
    """
    N = MPoly.var(NQ_VARS, "N")
    q = MPoly.var(NQ_VARS, "q")
    num = r.num
    if num.is_zero():
        return [], r
    roots = []
    progress = True
    while progress:
        progress = False
        for j in range(j_max + 1):
            quot = num.try_exact_div(N - q**j)
            if quot is not None:
                num = quot
                roots.append(j)
                progress = True
    return sorted(roots), RationalFunc(num, r.den)
