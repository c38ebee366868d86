"""Truncated formal power series in q.

A QSeries of order K stores the exact coefficients of q^0..q^K inclusive.
Entries are Fractions for scalar series, or QPoly-in-X for series whose
coefficients are polynomials in X.  Binary operations truncate to the smaller
order, so precision never silently inflates.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import QPoly, _frac


def _is_scalar(v):
    return isinstance(v, (int, Fraction))


class QSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        cs = list(coeffs) if coeffs is not None else []
        if len(cs) > order + 1:
            raise ValueError("too many coefficients for the stated order")
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = [c if isinstance(c, QPoly) else _frac(c) for c in cs]

    @classmethod
    def one(cls, order: int):
        return cls(order, [1])

    def is_scalar(self) -> bool:
        return all(_is_scalar(c) for c in self.coeffs)

    def coeff(self, i: int):
        if i > self.order:
            raise IndexError(f"order {self.order} series has no q^{i} coefficient")
        return self.coeffs[i]

    def truncate(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries(order, self.coeffs[: order + 1])

    def _pair(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            other = QSeries(self.order, [other])
        if not isinstance(other, QSeries):
            return None, None
        k = min(self.order, other.order)
        return self.truncate(k), other.truncate(k)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return QSeries(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return QSeries(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        out = [Fraction(0)] * (a.order + 1)
        for i, x in enumerate(a.coeffs):
            if _is_scalar(x) and not x or isinstance(x, QPoly) and x.is_zero():
                continue
            for j in range(a.order + 1 - i):
                out[i + j] = out[i + j] + x * b.coeffs[j]
        return QSeries(a.order, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(_eq(x, y) for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, tuple(str(c) for c in self.coeffs)))

    def scalar_list(self):
        """Coefficients as Fractions; raises if any entry involves X."""
        out = []
        for c in self.coeffs:
            if isinstance(c, QPoly):
                if not c.is_constant():
                    raise ValueError("series coefficient is not scalar")
                c = c.constant()
            out.append(c)
        return out

    def to_text(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            body = c.to_text(compact=True) if isinstance(c, QPoly) else str(c)
            if isinstance(c, QPoly) and len(c.c) > 1:
                body = f"({body})"
            parts.append(body if i == 0 else f"({body})*q^{i}" if "(" in body or "-" in body or "/" in body
                         else (f"{body}*q" if i == 1 else f"{body}*q^{i}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"QSeries(K={self.order}, {[str(c) for c in self.coeffs]})"


def _eq(x, y):
    if isinstance(x, QPoly) or isinstance(y, QPoly):
        px = x if isinstance(x, QPoly) else QPoly({0: x}, var=y.var)
        py = y if isinstance(y, QPoly) else QPoly({0: y}, var=x.var)
        return px == py
    return x == y


def series_invert(s: QSeries) -> QSeries:
    """Multiplicative inverse mod q^(K+1), by long division.

    Requires a nonzero rational constant coefficient.
    """
    c0 = s.coeffs[0]
    if isinstance(c0, QPoly):
        if not c0.is_constant():
            raise ValueError("non-invertible series: constant term involves X")
        c0 = c0.constant()
    if not c0:
        raise ValueError("non-invertible series")
    coeffs = s.scalar_list()
    inv0 = Fraction(1) / c0
    out = [inv0]
    for i in range(1, s.order + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            acc += coeffs[j] * out[i - j]
        out.append(-acc * inv0)
    return QSeries(s.order, out)


def geometric_series(step: int, order: int) -> QSeries:
    """1/(1 - q^step) truncated: 1 + q^step + q^(2 step) + ..."""
    if step <= 0:
        raise ValueError("step must be positive")
    coeffs = [Fraction(1) if i % step == 0 else Fraction(0) for i in range(order + 1)]
    return QSeries(order, coeffs)


def pochhammer_reciprocal(a: int, order: int) -> QSeries:
    """Truncated 1/((1-q)(1-q^2)...(1-q^a)) built from geometric factors.

    Deliberately does not go through series_invert, so the two stay
    independent cross-checks of each other.
    """
    out = QSeries.one(order)
    for i in range(1, a + 1):
        out = out * geometric_series(i, order)
    return out
