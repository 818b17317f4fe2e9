"""Exact integer and rational arithmetic primitives.

Two polynomial representations are used throughout the package:

* ``TruncPoly`` -- an element of Z[t]/t^M, stored as a dense tuple of M
  arbitrary-precision integers (coefficient of t^i at index i).  Trailing
  zeros are stored, never trimmed, so the modulus is always recoverable
  from the length.

* ``LaurentPoly`` -- a one-variable Laurent polynomial with exact rational
  coefficients, stored sparsely as a map {exponent: Fraction}.  Zero
  coefficients are never stored; the zero polynomial is the empty map.

The text format for Laurent polynomials is a sum of terms ``c*u^e`` with
integer or rational ``c`` (written ``p/q``), e.g. ``3*u^-2 + 1 - 1/2*u^3``.
Whitespace is insignificant.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction


class NotInvertibleError(ArithmeticError):
    """Raised when a series inverse does not exist over the integers."""


def binom(n: int, k: int) -> int:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.

    k must be nonnegative.  For n >= 0 this is the usual binomial
    coefficient (zero when n < k); for n < 0 it is the falling-factorial
    extension, e.g. binom(-2, 3) = (-2)(-3)(-4)/3! = -4.
    """
    if k < 0:
        raise ValueError(f"binom: k must be nonnegative, got {k}")
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


class TruncPoly:
    """Element of Z[t]/t^modulus_exponent with dense integer coefficients."""

    __slots__ = ("modulus_exponent", "coeffs")

    def __init__(self, modulus_exponent: int, coeffs=()) -> None:
        if modulus_exponent < 1:
            raise ValueError("modulus_exponent must be positive")
        coeffs = tuple(operator.index(c) for c in coeffs)
        if len(coeffs) > modulus_exponent:
            raise ValueError(
                f"got {len(coeffs)} coefficients for modulus t^{modulus_exponent}"
            )
        coeffs = coeffs + (0,) * (modulus_exponent - len(coeffs))
        object.__setattr__(self, "modulus_exponent", modulus_exponent)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncPoly is immutable")

    @classmethod
    def zero(cls, modulus_exponent: int) -> "TruncPoly":
        return cls(modulus_exponent)

    @classmethod
    def one(cls, modulus_exponent: int) -> "TruncPoly":
        return cls(modulus_exponent, (1,))

    def _coerce(self, other) -> "TruncPoly":
        if isinstance(other, TruncPoly):
            if other.modulus_exponent != self.modulus_exponent:
                raise ValueError(
                    f"modulus mismatch: t^{self.modulus_exponent} vs "
                    f"t^{other.modulus_exponent}"
                )
            return other
        if isinstance(other, int):
            return TruncPoly(self.modulus_exponent, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return TruncPoly(
            self.modulus_exponent,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncPoly(self.modulus_exponent, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = self.modulus_exponent
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(m - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncPoly(m, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncPoly.one(self.modulus_exponent)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "TruncPoly":
        """Multiplicative inverse by series recursion.

        Exists over Z exactly when the constant coefficient is +1 or -1.
        """
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NotInvertibleError(
                f"constant term {c0} is not a unit of the integers"
            )
        m = self.modulus_exponent
        inv = [0] * m
        inv[0] = c0
        for n in range(1, m):
            acc = sum(self.coeffs[i] * inv[n - i] for i in range(1, n + 1))
            inv[n] = -c0 * acc
        return TruncPoly(m, inv)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TruncPoly(self.modulus_exponent, (other,))
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return (
            self.modulus_exponent == other.modulus_exponent
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.modulus_exponent, self.coeffs))

    def __str__(self):
        return format_poly_in(self.coeffs, "t")

    def __repr__(self):
        return f"TruncPoly({self.modulus_exponent}, {self.coeffs})"


def format_poly_in(coeffs, var: str) -> str:
    """Render a coefficient sequence as a polynomial string, e.g. '1 + 5t'."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def trunc_mul(a: TruncPoly, b: TruncPoly) -> TruncPoly:
    """Product in Z[t]/t^M; the moduli must agree."""
    return a * b


def trunc_inverse(a: TruncPoly) -> TruncPoly:
    """Inverse in Z[t]/t^M; the constant term must be +1 or -1."""
    return a.inverse()


class LaurentPoly:
    """Laurent polynomial in one variable u over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None) -> None:
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(e)] = c
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "LaurentPoly":
        return cls({exponent: Fraction(coefficient)})

    def items(self):
        return self._coeffs.items()

    def coefficient(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self):
        """Smallest exponent with nonzero coefficient; None for zero."""
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_degree(self):
        """Largest exponent with nonzero coefficient; None for zero."""
        return max(self._coeffs) if self._coeffs else None

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by u^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def derivative(self) -> "LaurentPoly":
        """Formal derivative d/du."""
        return LaurentPoly({e - 1: c * e for e, c in self._coeffs.items() if e != 0})

    def substitute_inverse(self) -> "LaurentPoly":
        """The polynomial p(1/u)."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs):
            c = self._coeffs[e]
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                power = "u" if e == 1 else f"u^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))})"


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+(?:/\d+)?)\*?)?(?P<var>u(?:\^(?P<exp>-?\d+))?)?$"
)


def laurent_from_string(text: str) -> LaurentPoly:
    """Parse the Laurent text format, e.g. '3*u^-2 + 1 - 1/2*u^3'."""
    compact = text.replace(" ", "").replace("\t", "")
    if not compact:
        raise ValueError("empty Laurent polynomial text")
    # Split into sign-prefixed terms.  A '-' directly after '^' is an
    # exponent sign, not a term separator.  A leading '+' is permitted.
    if compact[0] not in "+-":
        compact = "+" + compact
    terms = []
    current = ""
    for ch in compact:
        if ch in "+-" and current and not current.endswith("^"):
            terms.append(current)
            current = ch
        else:
            current += ch
    terms.append(current)
    result = {}
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        m = _TERM_RE.match(term[1:])
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"malformed term {term!r} in {text!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        result[exp] = result.get(exp, Fraction(0)) + sign * coeff
    return LaurentPoly(result)
