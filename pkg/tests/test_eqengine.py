import pytest

from hooplog.syntax import Tensor, Var, parse_formula
from hooplog.theories import ALm, ALi, LLm
from hooplog.sequent import Sequent, bounded_prove
from hooplog.eqengine import (
    EQUIV,
    EqError,
    GEQ,
    LEQ,
    LemmaEntry,
    LemmaRegistry,
    RewriteError,
    _compose,
    ac_eq,
    ac_match,
    ac_normalize,
    apply_rewrite,
    check_script,
    format_script,
    parse_script,
)

A, B, C = Var("A"), Var("B"), Var("C")


def _registry():
    from hooplog.corpus import register_kit

    reg = LemmaRegistry()
    register_kit(reg)
    return reg


def test_ac_normalize_examples():
    spine = ac_normalize(parse_formula("B * (A * 0)"))
    assert spine == ac_normalize(Tensor(A, B))
    assert ac_normalize(parse_formula("A * B")) == ac_normalize(parse_formula("B * A"))
    f = parse_formula("A -o B")
    assert ac_normalize(f) == f


def test_ac_normalize_idempotent_and_permutation_invariant():
    f = parse_formula("(C * A) * (B * 0)")
    g = parse_formula("B * (C * A)")
    assert ac_normalize(f) == ac_normalize(g)
    assert ac_normalize(ac_normalize(f)) == ac_normalize(f)


def test_notation_is_transparent():
    assert ac_eq(parse_formula("A^"), parse_formula("A -o 1"))
    assert ac_eq(parse_formula("0"), parse_formula("1 -o 1"))
    assert ac_eq(parse_formula("A * (1 -o 1)"), A)


def test_ac_match_binds_spines():
    subj = parse_formula("(C -o B) * (C * X)")
    assert list(ac_match(parse_formula("A * B"), subj))
    pat = parse_formula("A * (A -o B)")
    sols = list(ac_match(pat, parse_formula("C * (C -o B)")))
    assert [sorted(s.items()) for s in sols] == [[("A", C), ("B", B)]]


def test_apply_rewrite_cwc_at_root():
    reg = _registry()
    cwc = reg.get("cwc")
    f = parse_formula("A * (A -o B)")
    out, rel = apply_rewrite(f, cwc, "lr", (), {"A": A, "B": B})
    assert rel == EQUIV and ac_eq(out, parse_formula("B * (B -o A)"))


def test_apply_rewrite_polarity():
    reg = _registry()
    wk = reg.get("wk-tensor")  # A * B >= A
    pos = parse_formula("C -o A * B")
    out, rel = apply_rewrite(pos, wk, "lr", (1,), {"A": A, "B": B})
    assert rel == GEQ and out == parse_formula("C -o A")
    neg = parse_formula("(A * B) -o C")
    out2, rel2 = apply_rewrite(neg, wk, "lr", (0,), {"A": A, "B": B})
    assert rel2 == LEQ and out2 == parse_formula("A -o C")
    with pytest.raises(RewriteError):
        apply_rewrite(parse_formula("A /\\ (A * B)"), wk, "lr", (0,), {"A": A, "B": B})


def test_apply_rewrite_mismatch():
    reg = _registry()
    with pytest.raises(RewriteError):
        apply_rewrite(parse_formula("A -o B"), reg.get("cwc"), "lr", (), {"A": A, "B": B})


def test_relation_composition_table():
    rels = (EQUIV, GEQ)
    for r in rels:
        assert _compose(EQUIV, r) == r and _compose(r, EQUIV) == r
    assert _compose(GEQ, GEQ) == GEQ
    for a in rels:
        for b in rels:
            for c in rels:
                assert _compose(_compose(a, b), c) == _compose(a, _compose(b, c))


def test_reflexivity_script():
    reg = _registry()
    s = parse_script("lemma refl theory ALm claim A ~= A\nstart A\n")
    assert check_script(s, reg)


def test_cwc_lub_script_and_polarity_mutation():
    reg = _registry()
    text = """
lemma demo theory LLm claim C >= A * (A -o B)
assume hyp-a C >= A
assume hyp-b C >= B
start C
= C * (C -o A) by ins C -o A at root by hyp-a
= A * (A -o C) by cwc at root
>= A * (A -o B) by hyp-b at 1.1
"""
    s = parse_script(text)
    assert check_script(s, reg)
    flipped = parse_script(text.replace("by hyp-b at 1.1", "by hyp-b at 1.1 rev"))
    assert not check_script(flipped, reg)


def test_register_rejects_duplicates_and_unproved():
    reg = _registry()
    entry = LemmaEntry("again", A, parse_formula("B -o A"), GEQ, ALm, "")
    proof = bounded_prove(Sequent((A,), parse_formula("B -o A")), ALm, 4)
    reg.register(entry, proof)
    with pytest.raises(EqError):
        reg.register(entry, proof)
    with pytest.raises(EqError):
        reg.register(LemmaEntry("nope", A, B, GEQ, ALm, ""), None)


def test_lattice_gates_citations():
    reg = _registry()
    text = """
lemma uses-cwc theory ALm claim A * (A -o B) >= B * (B -o A)
start A * (A -o B)
= B * (B -o A) by cwc at root
"""
    rep = check_script(parse_script(text), reg)
    assert not rep.ok and "above the script theory" in rep.message
    ok = check_script(parse_script(text.replace("theory ALm", "theory LLm")), reg)
    assert ok


def test_def_fold_and_unfold():
    reg = _registry()
    text = """
lemma defs theory ALm claim A /\\ B ~= A * (A -o B)
start A /\\ B
= A * (A -o B) by def /\\ at root
"""
    assert check_script(parse_script(text), reg)
    back = """
lemma defs2 theory ALm claim A * (A -o B) ~= A /\\ B
start A * (A -o B)
= A /\\ B by def /\\ at root
"""
    assert check_script(parse_script(back), reg)


def test_easy_step_uses_theory():
    reg = _registry()
    text = """
lemma efq-easy theory {T} claim 1 >= A
start 1
>= A by easy 3
"""
    assert check_script(parse_script(text.format(T="ALi")), reg)
    assert not check_script(parse_script(text.format(T="ALm")), reg)


def test_insert_requires_provable_conjunct():
    reg = _registry()
    text = """
lemma bad-ins theory ALm claim A ~= A * B
start A
= A * B by ins B at root by easy 4
"""
    rep = check_script(parse_script(text), reg)
    assert not rep.ok and "discharge" in rep.message


def test_script_format_roundtrip():
    reg = _registry()
    text = """
lemma rt theory LLm claim A * (A -o B) >= B
start A * (A -o B)
>= B by mp-tensor at root
"""
    s = parse_script(text)
    assert check_script(s, reg)
    assert format_script(parse_script(format_script(s))) == format_script(s)
