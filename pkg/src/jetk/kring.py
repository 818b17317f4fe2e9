"""Grothendieck ring of projective space P^N in exact coordinates.

A class is written in the basis {1, t, ..., t^N} of Z[t]/t^(N+1), where
t = 1 - [O(-1)].  The two twist formulas are

    [O(d)]  = sum_i binom(d+i-1, i) t^i        (d > 0)
    [O(-d)] = sum_i (-1)^i binom(d, i) t^i     (d >= 0, i.e. (1-t)^d)

with i running from 0 to N; the branches are mutual inverses.  On P^1 the
coordinates of a class are (rank, degree) in the basis {1, t}.

Symmetric powers of the cotangent sheaf are obtained from the recursion

    sum_{i<=k} [Sym^i Omega^1] = binom(N+k, N) * [O(-k)]

induced by the Euler sequence 0 -> Omega^1 -> O(-1)^(N+1) -> O -> 0.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .exact_arith import TruncPoly, binom, format_poly_in


class KClass:
    """Class in K(P^N), held as a truncated polynomial in t."""

    __slots__ = ("ambient_dim", "value")

    def __init__(self, ambient_dim: int, value: TruncPoly) -> None:
        if ambient_dim < 1:
            raise ValueError("ambient_dim must be positive")
        if value.modulus_exponent != ambient_dim + 1:
            raise ValueError(
                f"K(P^{ambient_dim}) needs modulus t^{ambient_dim + 1}, "
                f"got t^{value.modulus_exponent}"
            )
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("KClass is immutable")

    @classmethod
    def zero(cls, ambient_dim: int) -> "KClass":
        return cls(ambient_dim, TruncPoly.zero(ambient_dim + 1))

    @classmethod
    def one(cls, ambient_dim: int) -> "KClass":
        return cls(ambient_dim, TruncPoly.one(ambient_dim + 1))

    @classmethod
    def from_coefficients(cls, ambient_dim: int, coeffs) -> "KClass":
        return cls(ambient_dim, TruncPoly(ambient_dim + 1, coeffs))

    def coefficients(self) -> tuple:
        return self.value.coeffs

    @property
    def rank(self) -> int:
        """Virtual rank: the coefficient of t^0."""
        return self.value.coeffs[0]

    def _lift(self, other):
        if isinstance(other, KClass):
            if other.ambient_dim != self.ambient_dim:
                raise ValueError("ambient dimensions differ")
            return other
        if isinstance(other, int):
            return KClass(
                self.ambient_dim, TruncPoly(self.ambient_dim + 1, (other,))
            )
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return KClass(self.ambient_dim, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return KClass(self.ambient_dim, -self.value)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return KClass(self.ambient_dim, self.value - other.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return KClass(self.ambient_dim, self.value * other.value)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._lift(other)
        if not isinstance(other, KClass):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.value == other.value

    def __hash__(self):
        return hash((self.ambient_dim, self.value))

    def __str__(self):
        return format_poly_in(self.value.coeffs, "t")

    def __repr__(self):
        return f"KClass(N={self.ambient_dim}, {self})"


class LineBundleSum:
    """Formal integer combination of twists O(d) on P^N.

    Multiplicities may be negative (virtual classes); zero multiplicities
    are never stored.
    """

    __slots__ = ("ambient_dim", "_terms")

    def __init__(self, ambient_dim: int, terms=None) -> None:
        if ambient_dim < 1:
            raise ValueError("ambient_dim must be positive")
        clean = {}
        if terms:
            for d, mult in terms.items():
                if mult != 0:
                    clean[int(d)] = int(mult)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LineBundleSum is immutable")

    @classmethod
    def line(cls, ambient_dim: int, d: int, mult: int = 1) -> "LineBundleSum":
        return cls(ambient_dim, {d: mult})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def rank(self) -> int:
        return sum(self._terms.values())

    @property
    def degree(self) -> int:
        return sum(d * m for d, m in self._terms.items())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def __add__(self, other):
        if not isinstance(other, LineBundleSum):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        out = dict(self._terms)
        for d, m in other._terms.items():
            out[d] = out.get(d, 0) + m
        return LineBundleSum(self.ambient_dim, out)

    def tensor(self, other: "LineBundleSum") -> "LineBundleSum":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        out = {}
        for d1, m1 in self._terms.items():
            for d2, m2 in other._terms.items():
                d = d1 + d2
                out[d] = out.get(d, 0) + m1 * m2
        return LineBundleSum(self.ambient_dim, out)

    def dual(self) -> "LineBundleSum":
        return LineBundleSum(self.ambient_dim, {-d: m for d, m in self._terms.items()})

    def twists(self) -> list:
        """Expand into a flat twist list; requires an effective sum."""
        if not self.is_effective():
            raise ValueError("sum has negative multiplicities")
        out = []
        for d in sorted(self._terms, reverse=True):
            out.extend([d] * self._terms[d])
        return out

    def __eq__(self, other):
        if not isinstance(other, LineBundleSum):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._terms == other._terms

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d in sorted(self._terms, reverse=True):
            m = self._terms[d]
            parts.append(f"O({d})" if m == 1 else f"O({d})^{m}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LineBundleSum(N={self.ambient_dim}, {self._terms})"


def class_of_twist(N: int, d: int) -> KClass:
    """The class of O(d) in K(P^N)."""
    if d <= 0:
        coeffs = [(-1) ** i * binom(-d, i) for i in range(N + 1)]
    else:
        coeffs = [binom(d + i - 1, i) for i in range(N + 1)]
    return KClass.from_coefficients(N, coeffs)


def sum_to_class(s: LineBundleSum) -> KClass:
    """Evaluate a sum of twists to its class; additive and multiplicative."""
    out = KClass.zero(s.ambient_dim)
    for d, m in s.terms.items():
        out = out + m * class_of_twist(s.ambient_dim, d)
    return out


def deg_rk(s: LineBundleSum) -> tuple:
    """(degree, rank) of a sum on the projective line.

    These are the coordinates of its class in the basis {1, t} of K(P^1).
    """
    if s.ambient_dim != 1:
        raise ValueError(
            f"degree/rank coordinates live on P^1, got P^{s.ambient_dim}"
        )
    return (s.degree, s.rank)


def sym_power(s: LineBundleSum, k: int) -> LineBundleSum:
    """Sym^k of an effective sum: one O(sum of twists) per size-k multiset."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    twists = s.twists()
    out = {}
    for chosen in combinations_with_replacement(twists, k):
        d = sum(chosen)
        out[d] = out.get(d, 0) + 1
    return LineBundleSum(s.ambient_dim, out)


def wedge_power(s: LineBundleSum, k: int) -> LineBundleSum:
    """Wedge^k of an effective sum: one O(sum of twists) per size-k subset."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    twists = s.twists()
    out = {}
    for chosen in combinations(twists, k):
        d = sum(chosen)
        out[d] = out.get(d, 0) + 1
    return LineBundleSum(s.ambient_dim, out)


@lru_cache(maxsize=None)
def sym_omega(N: int, k: int) -> KClass:
    """The class of Sym^k Omega^1 on P^N via the Euler-sequence recursion."""
    if N < 1:
        raise ValueError("N must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return KClass.one(N)
    total = binom(N + k, N) * class_of_twist(N, -k)
    for i in range(k):
        total = total - sym_omega(N, i)
    return total


def cohomology_dim(N: int, d: int, i: int) -> int:
    """dim H^i(P^N, O(d)).

    Nonzero only in degrees 0 and N: h^0 = binom(N+d, N) for d >= 0 and
    h^N = binom(-d-1, N) for -d-1 >= N.  Total on all inputs.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i == 0:
        return binom(N + d, N) if d >= 0 else 0
    if i == N:
        return binom(-d - 1, N) if -d - 1 >= N else 0
    return 0
