import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affcrystal.expr import (
    Add, Div, IntConst, Max, Minus, Mul, ParseError, Plus, PosConst, Pow, PVar, ScalarMul,
    SubtractionError, UnboundVariable, Var, check_subtraction_free, compile_exprs,
    eval_rational, eval_tropical, from_json_obj, laurent, laurent_text, parse, parse_block,
    parse_pl, to_json, to_json_obj, tropicalize,
)

NAMES = ("x", "y", "z")


def rat_exprs(max_leaves=12):
    leaves = st.one_of(st.sampled_from([Var(v) for v in NAMES]),
                       st.sampled_from([PosConst(1), PosConst(2), PosConst(Fraction(3, 2))]))

    def grow(children):
        return st.one_of(
            st.tuples(children, children).map(lambda p: Add(*p)),
            st.tuples(children, children).map(lambda p: Mul(*p)),
            st.tuples(children, children).map(lambda p: Div(*p)),
            st.tuples(children, st.integers(-3, 3).filter(bool)).map(lambda p: Pow(*p)),
        )
    return st.recursive(leaves, grow, max_leaves=max_leaves)


int_env = st.fixed_dictionaries({v: st.integers(-50, 50) for v in NAMES})


def depth(e):
    kids = [k for k in e.key[1:] if hasattr(k, "key")]
    return 1 + max((depth(k) for k in kids), default=0)


def test_tropicalize_examples():
    e = parse("x22/x11")
    assert eval_tropical(tropicalize(e), {"x22": 7, "x11": 3}) == 4
    c2 = parse("(c*x21*x22 + x11^2)/(x21*x22 + x11^2)")
    hand = parse_pl("max{c+x21+x22, 2*x11} - max{x21+x22, 2*x11}")
    for pt in [(1, 0, 0, 0), (3, -2, 5, 1), (-4, 2, 2, 3)]:
        env = dict(zip(("c", "x21", "x22", "x11"), pt))
        assert eval_tropical(tropicalize(c2), env) == eval_tropical(hand, env)
    assert tropicalize(Var("x")) == PVar("x")
    assert tropicalize(PosConst(7)) == IntConst(0)


def test_rational_examples():
    eps2 = parse("(x21*x22 + x11^2)/(x22^2*x21)")
    assert eval_rational(eps2, {"x22": 1, "x11": 1, "x21": 1}) == 2
    assert eval_rational(PosConst(Fraction(3, 2)), {}) == Fraction(3, 2)
    gamma1 = parse("x11^2/(x21*x22)")
    assert eval_rational(gamma1, {"x22": 1, "x11": 2, "x21": 1}) == 4
    with pytest.raises(UnboundVariable):
        eval_rational(Var("q"), {})


def test_tropical_examples():
    e = parse_pl("max{x21, 2*x11-x22}")
    assert eval_tropical(e, {"x21": 0, "x11": 0, "x22": 0}) == 0
    assert eval_tropical(e, {"x22": 1, "x11": 2, "x21": 0}) == 3
    c2 = parse_pl("max{c+x21+x22, 2*x11} - max{x21+x22, 2*x11}")
    assert eval_tropical(c2, {"c": 1, "x21": 0, "x22": 0, "x11": 0}) == 1
    assert eval_tropical(parse_pl("5-min{a,b,3}+max{a}"), {"a": 1, "b": -2}) == 8


def test_subtraction_is_rejected():
    assert check_subtraction_free("x/(y+z)")
    assert check_subtraction_free("2*x + 3")
    with pytest.raises(SubtractionError):
        parse("x-y")
    with pytest.raises(ParseError):
        parse("x+*y")
    with pytest.raises(ValueError):
        PosConst(0)


def test_let_bindings_and_sharing():
    env = parse_block("let a = x*y; let b = a + z;")
    e = parse("b/a", env)
    assert eval_rational(e, {"x": 2, "y": 3, "z": 4}) == Fraction(10, 6)
    assert parse("x*y") is parse("x*y")


@given(rat_exprs(), rat_exprs(), int_env)
def test_tropicalization_is_a_homomorphism(a, b, env):
    ta, tb = eval_tropical(tropicalize(a), env), eval_tropical(tropicalize(b), env)
    assert eval_tropical(tropicalize(Mul(a, b)), env) == ta + tb
    assert eval_tropical(tropicalize(Div(a, b)), env) == ta - tb
    assert eval_tropical(tropicalize(Add(a, b)), env) == max(ta, tb)


@settings(max_examples=60, deadline=None)
@given(rat_exprs(max_leaves=8).filter(lambda e: depth(e) <= 6),
       st.fixed_dictionaries({v: st.integers(-3, 3) for v in NAMES}))
def test_valuation_soundness(e, v):
    # independent route: evaluate at x = T^v exactly and read off the exponent
    big = 10 ** 6
    value = eval_rational(e, {k: Fraction(big) ** x for k, x in v.items()})
    order = round((math.log10(value.numerator) - math.log10(value.denominator)) / 6)
    assert order == eval_tropical(tropicalize(e), v)


@given(rat_exprs(), st.fixed_dictionaries({v: st.integers(1, 30) for v in NAMES}))
def test_rational_values_stay_positive(e, env):
    assert eval_rational(e, env) > 0


@given(rat_exprs(), int_env)
def test_compiled_matches_interpreter(e, env):
    t = tropicalize(e)
    fn = compile_exprs([t], NAMES)
    assert fn(tuple(env[v] for v in NAMES)) == (eval_tropical(t, env),)
    rfn = compile_exprs([e], NAMES)
    renv = {k: Fraction(abs(x) + 1, 3) for k, x in env.items()}
    assert rfn(tuple(renv[v] for v in NAMES)) == (eval_rational(e, renv),)


@given(rat_exprs())
def test_json_round_trip(e):
    assert from_json_obj(to_json_obj(e)) is e
    t = tropicalize(e)
    assert from_json_obj(to_json_obj(t)) is t
    assert to_json(e) == to_json(from_json_obj(to_json_obj(e)))


def test_pl_min_is_negated_max():
    m = parse_pl("min{a, b}")
    assert eval_tropical(m, {"a": 4, "b": -1}) == -1
    assert isinstance(m, Minus)
    assert eval_tropical(Plus(ScalarMul(2, PVar("a")), Max(IntConst(1), PVar("b"))),
                         {"a": 3, "b": 0}) == 7


def test_laurent_examples():
    assert laurent_text(parse("(x*y + x)/x")) == "y + 1"
    assert laurent_text(parse("x^2/(y*z) * 3 + x^2*y^-1*z^-1")) == "4*x^2/(y*z)"
    assert laurent(parse("x/(x + y)")) is None
    assert laurent_text(parse("x/(x + y)")) == "(x / (x + y))"


@settings(max_examples=200)
@given(rat_exprs(8), st.fixed_dictionaries({v: st.integers(1, 9) for v in NAMES}))
def test_laurent_form_evaluates_like_the_expression(e, env):
    poly = laurent(e)
    if poly is None:
        return
    total = sum(c * math.prod(Fraction(env[v]) ** k for v, k in m) for m, c in poly.items())
    assert total == eval_rational(e, {k: Fraction(v) for k, v in env.items()})
