import pytest

from hooplog.eqengine import EQUIV
from hooplog.syntax import format_formula, parse_formula
from hooplog.sequent import parse_sequent


@pytest.fixture(scope="module")
def corpus():
    from hooplog.corpus import Corpus

    c = Corpus()
    report = c.run()
    bad = [r for r in report.results if not r.ok]
    assert not bad, [(r.entry.id, r.detail) for r in bad]
    return c


def test_index_is_well_formed(corpus):
    ids = [e.id for e in corpus.entries]
    assert len(ids) == len(set(ids)), "duplicate entry ids"
    tiers = {e.tier for e in corpus.entries}
    assert tiers <= {"proved", "refuted", "model-checked-only"}


def test_core_entry_count(corpus):
    core = [e for e in corpus.entries if e.core]
    assert len(core) >= 35


def test_script_formulas_roundtrip(corpus):
    for name, script in corpus.scripts.items():
        for f in (script.claim_lhs, script.claim_rhs, script.start) + tuple(
            st.result for st in script.steps
        ):
            assert parse_formula(format_formula(f)) == f, name


def test_script_easy_depths_within_budget(corpus):
    for name, script in corpus.scripts.items():
        for st in script.steps:
            if st.depth is not None:
                assert st.depth <= 8, (name, st.depth)


def test_group_members_exist(corpus):
    ids = {e.id for e in corpus.entries}
    for e in corpus.entries:
        if e.evidence[0] == "group":
            for m in e.evidence[1].split(","):
                assert m in ids, (e.id, m)


def test_registered_lemmas_match_their_scripts(corpus):
    from hooplog.eqengine import ac_eq

    for name, script in corpus.scripts.items():
        base = name.removesuffix(".rev")
        if base in corpus.registry and not script.assumes and name == base:
            lemma = corpus.registry.get(base)
            assert ac_eq(lemma.lhs, script.claim_lhs)
            assert ac_eq(lemma.rhs, script.claim_rhs)


def test_generate_k_contradiction(corpus):
    from hooplog.corpus import generate_k_contradiction

    seq, script, rep = generate_k_contradiction(1, corpus.registry)
    assert rep.ok and len(script.steps) == 1
    assert seq == parse_sequent("A^, A^^ |- A")
    for k in (2, 3, 4):
        seq, script, rep = generate_k_contradiction(k, corpus.registry)
        assert rep.ok, (k, rep.message)
        assert len(script.steps) == k


def test_refuted_entry_rechecks(corpus):
    a6 = [e for e in corpus.entries if e.id == "a6"][0]
    assert a6.tier == "refuted"


def test_corpus_rerun_is_stable(corpus):
    from hooplog.corpus import run_corpus

    rep = run_corpus("axiom-l")
    assert rep.ok and len(rep.results) == 1


def test_corpus_proof_conclusions_are_semantically_sound(corpus):
    from hooplog.algebra import enumerate_algebras, theory_class, valid
    from hooplog.corpus.builtins import _collect_proofs

    for name, tree, theory in _collect_proofs(corpus):
        for alg in enumerate_algebras(3, theory_class(theory)):
            assert valid(tree.conclusion, alg), (name, alg)


def test_accepted_scripts_are_semantically_sound(corpus):
    # every unconditional script claim, read as sequents, holds in all
    # algebras of the matching class up to size 4
    from hooplog.algebra import enumerate_algebras, theory_class, valid
    from hooplog.eqengine import EQUIV
    from hooplog.sequent import Sequent
    from hooplog.syntax import expand_derived

    for name, script in sorted(corpus.scripts.items()):
        if script.assumes:
            continue
        lhs = expand_derived(script.claim_lhs)
        rhs = expand_derived(script.claim_rhs)
        seqs = [Sequent((lhs,), rhs)]
        if script.claim_rel == EQUIV:
            seqs.append(Sequent((rhs,), lhs))
        for alg in enumerate_algebras(4, theory_class(script.theory)):
            for s in seqs:
                assert valid(s, alg), (name, s, alg)


def test_broken_script_is_a_hard_failure(corpus, tmp_path, monkeypatch):
    import hooplog.corpus as cp

    real = cp._data_text

    def poisoned(name):
        text = real(name)
        if name == "axiom-l-fwd.eq":
            return text.replace("at 0.1.0", "at 0.1.0 rev")
        return text

    monkeypatch.setattr(cp, "_data_text", poisoned)
    rep = cp.run_corpus("axiom-l")
    assert not rep.ok
    assert any(r.entry.id == "axiom-l" and not r.ok for r in rep.results)
