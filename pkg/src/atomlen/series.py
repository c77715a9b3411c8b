"""Truncated formal power series and sparse Laurent polynomials, all exact.

The series hold any coefficients that add and multiply like ring elements
(ints, Fractions, LaurentPoly); plain int zeros and ones mix in freely.
Everything is truncated at a fixed order and stays closed under the ring
operations modulo q^(order+1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction


class TruncatedSeries:
    """Coefficients c_0..c_N of a series known modulo q^(N+1)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        coeffs = list(coeffs)
        if len(coeffs) < order + 1:
            coeffs += [0] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs[: order + 1]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def monomial(cls, k, order, coeff=1):
        c = [0] * (order + 1)
        if 0 <= k <= order:
            c[k] = coeff
        return cls(c, order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(_iszero(a - b) for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])) \
            and self.order == other.order

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        return f"TruncatedSeries([{head}{', ...' if self.order > 5 else ''}], order={self.order})"

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if _iszero(a):
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not _iszero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        c = [0] * (self.order + 1)
        c[0] = other
        return TruncatedSeries(c, self.order)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.coeffs[0]
        inv0 = _unit_inverse(c0)
        out = [inv0] + [0] * self.order
        for m in range(1, self.order + 1):
            acc = 0
            for k in range(1, m + 1):
                if not _iszero(self.coeffs[k]):
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = -inv0 * acc
        return TruncatedSeries(out, self.order)

    def log(self):
        """Logarithm of a series with constant term 1 (rational coefficients)."""
        assert _iszero(self.coeffs[0] - 1), "log needs constant term 1"
        # log f = integral of f'/f
        deriv = [k * self.coeffs[k] for k in range(1, self.order + 1)]
        ratio = TruncatedSeries(deriv, self.order - 1) * self.inverse()
        out = [0] + [Fraction(ratio.coeffs[k - 1], k) if isinstance(ratio.coeffs[k - 1], int)
                     else ratio.coeffs[k - 1] / k for k in range(1, self.order + 1)]
        return TruncatedSeries(out, self.order)

    def exp(self):
        """Exponential of a series with zero constant term."""
        assert _iszero(self.coeffs[0]), "exp needs zero constant term"
        out = [1] + [0] * self.order
        for m in range(1, self.order + 1):
            acc = 0
            for k in range(1, m + 1):
                if not _iszero(self.coeffs[k]):
                    acc = acc + k * self.coeffs[k] * out[m - k]
            out[m] = _divide_exact(acc, m)
        return TruncatedSeries(out, self.order)


def _iszero(x):
    return x == 0


def _unit_inverse(c):
    if isinstance(c, int):
        if c in (1, -1):
            return c
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    return c.inverse()


def _divide_exact(x, m):
    if isinstance(x, int):
        return Fraction(x, m) if x % m else x // m
    if isinstance(x, Fraction):
        return x / m
    return x * Fraction(1, m)


def euler_product(order, power=1):
    """prod_{k>=1} (1 - q^k)^power, truncated."""
    out = TruncatedSeries.one(order)
    for k in range(1, order + 1):
        factor = TruncatedSeries.one(order) - TruncatedSeries.monomial(k, order)
        out = out * factor ** power if power >= 0 else out * factor.inverse() ** (-power)
    return out


class LaurentPoly:
    """Sparse Laurent polynomial: exponent tuples to nonzero coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        clean = {}
        for e, c in terms.items() if isinstance(terms, dict) else terms:
            if c != 0:
                e = tuple(int(x) for x in e)
                clean[e] = clean.get(e, 0) + c
        clean = {e: c for e, c in clean.items() if c != 0}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "nvars", nvars)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exponent, nvars, coeff=1):
        return cls({tuple(exponent): coeff}, nvars)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return self.terms == {(0,) * self.nvars: other}

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = [f"{c}*x^{list(e)}" for e, c in sorted(self.terms.items())[:4]]
        return f"LaurentPoly({' + '.join(bits)}{' + ...' if len(self.terms) > 4 else ''})"

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        assert k >= 0
        out = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Inverse of a single-term Laurent polynomial."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible here")
        (e, c), = self.terms.items()
        inv = c if c in (1, -1) else (1 / c if isinstance(c, Fraction) else Fraction(1, c))
        return LaurentPoly({tuple(-x for x in e): inv}, self.nvars)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), 0)

    def evaluate_ones(self):
        """Value at all variables equal to 1."""
        return sum(self.terms.values())

    def scale_exponents(self, factor):
        out = {}
        for e, c in self.terms.items():
            scaled = tuple(x * factor for x in e)
            assert all(isinstance(x, int) or x.denominator == 1 for x in scaled)
            out[tuple(int(x) for x in scaled)] = c
        return LaurentPoly(out, self.nvars)

    def exact_div(self, other):
        """Exact division by another Laurent polynomial (lex-leading terms)."""
        if not self.terms:
            return LaurentPoly.zero(self.nvars)
        rem = dict(self.terms)
        lead = max(other.terms)
        lead_c = other.terms[lead]
        out = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lead))
            qc = c / lead_c if not isinstance(c, int) or not isinstance(lead_c, int) \
                else (Fraction(c, lead_c) if c % lead_c else c // lead_c)
            out[qe] = out.get(qe, 0) + qc
            for oe, oc in other.terms.items():
                t = tuple(a + b for a, b in zip(qe, oe))
                val = rem.get(t, 0) - qc * oc
                if val == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = val
        return LaurentPoly(out, self.nvars)

    def substitute_powers(self, powers, order):
        """Evaluate at x_i = u^{powers[i]}, as a truncated Laurent u-series.

        Returns (valuation, TruncatedSeries) with coefficients relative to
        the valuation.
        """
        exps = {}
        for e, c in self.terms.items():
            k = sum(a * p for a, p in zip(e, powers))
            exps[k] = exps.get(k, 0) + c
        exps = {k: c for k, c in exps.items() if c != 0}
        if not exps:
            return 0, TruncatedSeries.zero(order)
        val = min(exps)
        coeffs = [0] * (order + 1)
        for k, c in exps.items():
            if k - val <= order:
                coeffs[k - val] = c
        return val, TruncatedSeries(coeffs, order)
