"""Tests for the sheaf-expression parser, printer, and evaluator."""

import random

import pytest

from jetk.kring import KClass, class_of_twist, sum_to_class, sym_omega, sym_power
from jetk.kring import LineBundleSum
from jetk.sheafdsl import (
    Dual,
    EvaluationError,
    Jet,
    Omega,
    ParseError,
    RangeError,
    Structure,
    Sum,
    Sym,
    Tensor,
    Twist,
    Wedge,
    evaluate,
    parse,
    print_expr,
)


def test_parse_jet():
    assert parse("J1(O(3), left)") == Jet(1, Twist(3), "left")


def test_parse_sym_tensor():
    assert parse("Sym2(Omega) * O(5)") == Tensor(Sym(2, Omega()), Twist(5))


def test_parse_bare_structure_sheaf():
    assert parse("O") == Structure()
    assert parse("O + O(1)") == Sum(Structure(), Twist(1))


def test_parse_negative_twist_and_parens():
    assert parse("(O(-2) + O(1)) * dual(O(3))") == Tensor(
        Sum(Twist(-2), Twist(1)), Dual(Twist(3))
    )


def test_parse_left_associativity():
    assert parse("O(1) + O(2) + O(3)") == Sum(Sum(Twist(1), Twist(2)), Twist(3))
    assert parse("O(1) * O(2) * O(3)") == Tensor(
        Tensor(Twist(1), Twist(2)), Twist(3)
    )


def test_parse_error_position_and_expected():
    with pytest.raises(ParseError) as info:
        parse("O(2) + + O(1)")
    assert info.value.position == 7
    assert info.value.expected  # nonempty expected-token set


def test_parse_error_cases():
    for bad in ["", "O(", "O(2", "Sym(O(1))", "J1(O(1))", "J1(Omega, left)",
                "O(2) O(3)", "dual O(1)", "J1(O(1), up)"]:
        with pytest.raises(ParseError):
            parse(bad)


def test_parse_range_error_for_jet_order_zero():
    with pytest.raises(RangeError) as info:
        parse("J0(O(1), left)")
    assert info.value.position == 1


def test_print_examples():
    assert print_expr(Jet(1, Twist(3), "left")) == "J1(O(3), left)"
    assert print_expr(Sum(Twist(0), Twist(2))) == "O(0) + O(2)"
    assert print_expr(Tensor(Sum(Twist(1), Twist(2)), Twist(3))) == "(O(1) + O(2)) * O(3)"


def test_print_preserves_association():
    right_nested = Sum(Twist(1), Sum(Twist(2), Twist(3)))
    assert parse(print_expr(right_nested)) == right_nested
    nested_tensor = Tensor(Twist(1), Tensor(Twist(2), Twist(3)))
    assert parse(print_expr(nested_tensor)) == nested_tensor


def _random_expr(rng, depth):
    if depth == 0:
        kind = rng.choice(["twist", "omega", "structure"])
        if kind == "twist":
            return Twist(rng.randint(-9, 9))
        return Omega() if kind == "omega" else Structure()
    kind = rng.choice(["sum", "tensor", "dual", "sym", "wedge", "jet", "leaf"])
    if kind == "leaf":
        return _random_expr(rng, 0)
    if kind == "sum":
        return Sum(_random_expr(rng, depth - 1), _random_expr(rng, depth - 1))
    if kind == "tensor":
        return Tensor(_random_expr(rng, depth - 1), _random_expr(rng, depth - 1))
    if kind == "dual":
        return Dual(_random_expr(rng, depth - 1))
    if kind == "sym":
        return Sym(rng.randint(0, 3), _random_expr(rng, depth - 1))
    if kind == "wedge":
        return Wedge(rng.randint(0, 3), _random_expr(rng, depth - 1))
    return Jet(rng.randint(1, 3), Twist(rng.randint(-9, 9)), rng.choice(["left", "right"]))


def test_round_trip_on_generated_corpus():
    rng = random.Random(2718)
    corpus = [_random_expr(rng, rng.randint(0, 4)) for _ in range(25)]
    for expr in corpus:
        assert parse(print_expr(expr)) == expr


def test_evaluate_structure_and_zero_twist():
    for N in range(1, 5):
        assert evaluate(parse("O(0)"), N) == KClass.one(N)
        assert evaluate(parse("O"), N) == KClass.one(N)


def test_evaluate_jet_on_line():
    assert evaluate(parse("J1(O(2), right)"), 1).coefficients() == (2, 2)


def test_evaluate_sym_omega_tensor():
    got = evaluate(parse("Sym2(Omega) * O(3)"), 2)
    assert got == sym_omega(2, 2) * class_of_twist(2, 3)


def test_evaluate_split_operations():
    got = evaluate(parse("Sym2(O(1) + O(0))"), 1)
    expected = sum_to_class(sym_power(LineBundleSum(1, {1: 1, 0: 1}), 2))
    assert got == expected
    assert evaluate(parse("dual(O(3) + O(-1))"), 2) == sum_to_class(
        LineBundleSum(2, {-3: 1, 1: 1})
    )
    assert evaluate(parse("Wedge2(O(1) + O(4))"), 1) == class_of_twist(1, 5)


def test_evaluate_wedge_of_omega_on_line():
    assert evaluate(parse("Wedge0(Omega)"), 1) == KClass.one(1)
    assert evaluate(parse("Wedge1(Omega)"), 1) == sym_omega(1, 1)
    assert evaluate(parse("Wedge2(Omega)"), 1) == KClass.zero(1)


def test_evaluate_rejects_unsupported_targets():
    with pytest.raises(EvaluationError, match="Omega"):
        evaluate(parse("dual(Omega)"), 2)
    with pytest.raises(EvaluationError, match="Omega"):
        evaluate(parse("Wedge2(Omega)"), 2)
    with pytest.raises(EvaluationError, match=r"J1"):
        evaluate(parse("Sym2(J1(O(1), left))"), 2)
    with pytest.raises(EvaluationError, match=r"J1"):
        evaluate(parse("dual(J1(O(1), left))"), 1)


def _random_split_expr(rng, depth):
    if depth == 0:
        return Twist(rng.randint(-6, 6)) if rng.random() < 0.8 else Structure()
    kind = rng.choice(["sum", "tensor", "sym", "wedge", "dual", "leaf"])
    if kind == "leaf":
        return _random_split_expr(rng, 0)
    if kind == "sum":
        return Sum(_random_split_expr(rng, depth - 1), _random_split_expr(rng, depth - 1))
    if kind == "tensor":
        return Tensor(
            _random_split_expr(rng, depth - 1), _random_split_expr(rng, depth - 1)
        )
    if kind == "sym":
        return Sym(rng.randint(0, 2), _random_split_expr(rng, depth - 1))
    if kind == "wedge":
        return Wedge(rng.randint(0, 2), _random_split_expr(rng, depth - 1))
    return Dual(_random_split_expr(rng, depth - 1))


def test_evaluate_is_ring_homomorphism_on_split_fragment():
    rng = random.Random(314)
    for _ in range(30):
        N = rng.randint(1, 4)
        a = _random_split_expr(rng, rng.randint(0, 2))
        b = _random_split_expr(rng, rng.randint(0, 2))
        assert evaluate(Sum(a, b), N) == evaluate(a, N) + evaluate(b, N)
        assert evaluate(Tensor(a, b), N) == evaluate(a, N) * evaluate(b, N)


def test_evaluate_ignores_jet_side():
    for N in range(1, 4):
        for l in range(-4, 5):
            left = evaluate(parse(f"J1(O({l}), left)"), N)
            right = evaluate(parse(f"J1(O({l}), right)"), N)
            assert left == right


def test_node_constructors_validate():
    with pytest.raises(ValueError):
        Sym(-1, Twist(0))
    with pytest.raises(ValueError):
        Jet(0, Twist(1), "left")
    with pytest.raises(ValueError):
        Jet(1, Omega(), "left")
    with pytest.raises(ValueError):
        Jet(1, Twist(1), "up")
