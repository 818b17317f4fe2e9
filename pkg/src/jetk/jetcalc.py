"""Jet bundles of line bundles on P^N: K-classes and module-structure certificates.

The k-th jet bundle J^k(O(l)) carries two actions of the structure sheaf.
Its K-class is the same for both and telescopes through the fundamental
exact sequences to

    [J^k(O(l))] = sum_{i<=k} [Sym^i Omega^1] * [O(l)]
                = binom(N+k, N) * [O(l-k)].

At first order the two module structures decompose differently:

    left:   O(l-1)^(N+1)                 (l >= 1)
    right:  Omega^1 (x) O(l)  +  O(l)    (the jet projection is right split)

``prove_non_isomorphic`` certifies that no isomorphism between them exists
for l >= 1: a split summand O(l) of the right structure would embed into
O(l-1)^(N+1), but Hom(O(l), O(l-1)) = H^0(O(-1)) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import binom
from .kring import KClass, LineBundleSum, class_of_twist, cohomology_dim, sum_to_class, sym_omega
from .report import INAPPLICABLE, REFUTED, VERIFIED, Report, Step

LEFT = "left"
RIGHT = "right"
SIDES = (LEFT, RIGHT)


class InapplicableError(ValueError):
    """Raised when an operation is asked outside its certified range."""


@dataclass(frozen=True)
class JetSpec:
    """Parameters of a jet-bundle query: J^order(O(twist)) on P^ambient_dim."""

    ambient_dim: int
    order: int
    twist: int
    side: str

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient_dim must be positive")
        if self.order < 1:
            raise ValueError("jet order must be at least 1")
        if self.side not in SIDES:
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")

    def as_dict(self) -> dict:
        return {
            "N": self.ambient_dim,
            "k": self.order,
            "l": self.twist,
            "side": self.side,
        }


def jet_class(spec: JetSpec) -> KClass:
    """[J^k(O(l))] on P^N; independent of the side."""
    N, k, l = spec.ambient_dim, spec.order, spec.twist
    twist_class = class_of_twist(N, l)
    total = KClass.zero(N)
    for i in range(k + 1):
        total = total + sym_omega(N, i) * twist_class
    return total


def left_splitting_first_order(N: int, l: int) -> LineBundleSum:
    """Splitting type of J^1(O(l)) as left module: O(l-1)^(N+1), for l >= 1."""
    if N < 1:
        raise ValueError("N must be positive")
    if l < 1:
        raise InapplicableError(
            f"the left splitting O(l-1)^(N+1) is certified only for l >= 1, got l={l}"
        )
    return LineBundleSum(N, {l - 1: N + 1})


def right_decomposition_first_order(N: int, l: int) -> tuple:
    """J^1(O(l)) as right module: (class of Omega^1 (x) O(l), the summand O(l))."""
    if N < 1:
        raise ValueError("N must be positive")
    omega_part = sym_omega(N, 1) * class_of_twist(N, l)
    free_part = LineBundleSum.line(N, l)
    return (omega_part, free_part)


def verify_ktheory_equality(N: int, k: int, l: int) -> Report:
    """Check [J^k(O(l))] agrees with its closed form binom(N+k,N)*[O(l-k)].

    The telescoped sum over Sym^i Omega^1 is the class of either module
    structure, so equality certifies that left and right classes coincide.
    A refutation would indicate an implementation bug.
    """
    if k < 1:
        raise ValueError(f"jet order must be at least 1, got k={k}")
    if N < 1:
        raise ValueError("N must be positive")
    telescoped = jet_class(JetSpec(N, k, l, LEFT))
    closed = binom(N + k, N) * class_of_twist(N, l - k)
    steps = [
        Step(
            "telescoped class sum_{i<=k} [Sym^i Omega^1]*[O(l)] "
            "(both module structures)",
            {"coefficients": list(telescoped.coefficients())},
        ),
        Step(
            "closed form binom(N+k,N)*[O(l-k)]",
            {
                "multiplicity": binom(N + k, N),
                "coefficients": list(closed.coefficients()),
            },
        ),
        Step(
            "coefficientwise comparison",
            {"equal": telescoped == closed},
        ),
    ]
    verdict = VERIFIED if telescoped == closed else REFUTED
    return Report("ktheory-equality", {"N": N, "k": k, "l": l}, verdict, steps)


def prove_non_isomorphic(N: int, l: int) -> Report:
    """Certify whether the left and right structures of J^1(O(l)) differ.

    l >= 1: verified non-isomorphic.  l = 0: refuted (the universal
    derivation splits the jet projection on the left as well, so both
    structures are Omega^1 + O).  l < 0: inapplicable at this level; on
    the projective line the explicit transition-matrix oracle decides.
    """
    if N < 1:
        raise ValueError("N must be positive")
    params = {"N": N, "k": 1, "l": l}
    if l < 0:
        steps = [
            Step(
                "the left splitting is certified only for l >= 1; "
                "for N=1 the Birkhoff oracle on explicit transition "
                "matrices decides (see the projective-line toolkit)",
                {"pointer": "p1lab.verify_corr_p1", "l": l},
            )
        ]
        return Report("jet-structures-non-isomorphic", params, INAPPLICABLE, steps)
    if l == 0:
        steps = [
            Step(
                "f -> (df, f) is left-linear and splits the jet projection "
                "of J^1(O); both structures decompose as Omega^1 + O",
                {"atiyah_class_vanishes": True, "c1": 0},
            )
        ]
        return Report("jet-structures-non-isomorphic", params, REFUTED, steps)

    right_omega, right_free = right_decomposition_first_order(N, l)
    left_sum = left_splitting_first_order(N, l)
    hom_dim = cohomology_dim(N, -1, 0)
    steps = [
        Step(
            "right structure contains O(l) as a direct summand "
            "(the jet projection is right split)",
            {"free_summand_twist": l, "omega_part": list(right_omega.coefficients())},
        ),
        Step(
            "left structure splits as O(l-1)^(N+1)",
            {"twist": l - 1, "multiplicity": N + 1, "rank": left_sum.rank},
        ),
        Step(
            "Hom(O(l), O(l-1)) = H^0(O(-1)) = 0, so O(l) admits no nonzero "
            "map to the left structure, hence no split embedding",
            {"hom_dim": hom_dim, "cohomology_query": {"N": N, "d": -1, "i": 0}},
        ),
        Step(
            "class-level consistency: both structures have equal K-class",
            {
                "left": list(sum_to_class(left_sum).coefficients()),
                "right": list(
                    (right_omega + sum_to_class(right_free)).coefficients()
                ),
            },
        ),
    ]
    verdict = VERIFIED if hom_dim == 0 else REFUTED
    return Report("jet-structures-non-isomorphic", params, verdict, steps)


def connection_obstruction(N: int, l: int) -> bool:
    """Whether O(l) on P^N admits no connection.

    True exactly when l != 0: the obstruction is the Atiyah class of
    O(l), which equals c_1(O(l)) = l up to the chosen sign.
    """
    if N < 1:
        raise ValueError("N must be positive")
    return l != 0
