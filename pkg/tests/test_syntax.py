import pytest

from hooplog.syntax import (
    Imp,
    Neg,
    Nor,
    ONE,
    ParseError,
    SDisj,
    SImp,
    Tensor,
    Var,
    WConj,
    ZERO,
    expand_derived,
    format_formula,
    parse_formula,
    polarity_at,
    positions,
    replace_at,
    signed_polarity,
    substitute,
    subterm_at,
)

A, B, C, D, F, P, Q = (Var(x) for x in "ABCDFPQ")


def test_parse_redundant_brackets_flat():
    f = parse_formula("A * B^ -o C -o D * F")
    assert f == Imp(Tensor(A, Neg(B)), Imp(C, Tensor(D, F)))
    assert f == parse_formula("(A * (B^)) -o (C -o (D * F))")


def test_parse_required_brackets():
    f = parse_formula("(((A -o B) -o C) * D)^")
    assert f == Neg(Tensor(Imp(Imp(A, B), C), D))


def test_parse_right_assoc():
    assert parse_formula("A -o B -o C") == Imp(A, Imp(B, C))
    assert parse_formula("A => B => C") == SImp(A, SImp(B, C))


def test_parse_tier2_left_assoc_and_mixing():
    assert parse_formula("A * B * C") == Tensor(Tensor(A, B), C)
    with pytest.raises(ParseError):
        parse_formula("A * B /\\ C")
    assert parse_formula("(A * B) /\\ C") == WConj(Tensor(A, B), C)


def test_parse_errors_have_positions():
    with pytest.raises(ParseError):
        parse_formula("A -o")
    with pytest.raises(ParseError):
        parse_formula("a -o B")
    with pytest.raises(ParseError):
        parse_formula("(A -o B")


@pytest.mark.parametrize(
    "text",
    [
        "A -o B -o C",
        "A^",
        "A * 0",
        "A * B^ -o C -o D * F",
        "(((A -o B) -o C) * D)^",
        "(A \\/ B) /\\ (A => B)",
        "A !! (B -o A)",
        "1 -o 0",
        "A => B => C",
        "A \\/ B \\/ C",
    ],
)
def test_print_parse_roundtrip(text):
    f = parse_formula(text)
    assert parse_formula(format_formula(f)) == f


def test_print_examples():
    assert format_formula(Imp(A, Imp(B, C))) == "A -o B -o C"
    assert format_formula(Neg(A)) == "A^"
    assert format_formula(Tensor(A, ZERO)) == "A * 0"


def test_expand_derived_table():
    assert expand_derived(WConj(A, B)) == Tensor(A, Imp(A, B))
    assert expand_derived(Nor(A, B)) == Tensor(Imp(A, ONE), Imp(B, A))
    assert expand_derived(ZERO) == Imp(ONE, ONE)
    assert expand_derived(SDisj(A, B)) == Imp(Imp(B, A), A)
    assert expand_derived(SImp(A, B)) == Imp(A, Tensor(A, B))
    assert expand_derived(Neg(A)) == Imp(A, ONE)


def test_expand_derived_idempotent_and_core():
    f = parse_formula("(A \\/ B) /\\ ((A => B) !! 0)")
    e = expand_derived(f)
    assert expand_derived(e) == e
    from hooplog.syntax import is_core

    assert is_core(e)


def test_substitute():
    assert substitute(Imp(A, B), {"A": Tensor(P, Q)}) == Imp(Tensor(P, Q), B)
    assert substitute(A, {}) == A
    assert substitute(WConj(A, A), {"A": ONE}) == WConj(ONE, ONE)


def test_substitute_composes_on_disjoint_domains():
    f = parse_formula("A -o B * C")
    sigma = {"A": Tensor(P, Q)}
    tau = {"B": Neg(P)}
    combined = dict(sigma)
    combined.update(tau)
    assert substitute(substitute(f, sigma), tau) == substitute(f, combined)


def test_polarity():
    f = Imp(A, B)
    assert polarity_at(f, (0,)) == "negative"
    assert polarity_at(Imp(Imp(A, B), C), (0, 0)) == "positive"
    assert polarity_at(Tensor(A, B), (1,)) == "positive"
    with pytest.raises(Exception):
        polarity_at(WConj(A, B), (0,))


def test_signed_polarity_mixed_on_derived_left():
    f = WConj(A, B)
    assert signed_polarity(f, (0,)) == "mixed"
    assert signed_polarity(f, (1,)) == "positive"
    assert signed_polarity(Nor(A, B), (1,)) == "negative"
    assert signed_polarity(SDisj(A, B), (1,)) == "positive"


def test_positions_and_replace():
    f = parse_formula("A -o B * C")
    ps = list(positions(f))
    assert () in ps and (1, 0) in ps
    assert subterm_at(f, (1, 0)) == B
    assert replace_at(f, (1, 0), P) == parse_formula("A -o P * C")


def test_polarity_stable_under_tensor_reassociation():
    from hooplog.eqengine import ac_normalize

    grouped = parse_formula("((A * B) * C) -o D")
    normal = ac_normalize(grouped)
    # each spine element keeps its sign wherever it lands after sorting
    for g in (grouped, normal):
        for pos in positions(g):
            if subterm_at(g, pos) in (A, B, C):
                assert polarity_at(g, pos) == "negative"
            if subterm_at(g, pos) == D:
                assert polarity_at(g, pos) == "positive"
