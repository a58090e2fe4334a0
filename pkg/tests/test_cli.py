import pytest

from hooplog.cli import main


def test_parse_exit_codes(capsys):
    assert main(["parse", "A -o B"]) == 0
    out = capsys.readouterr().out
    assert "A -o B" in out and "Imp" in out
    assert main(["parse", "a -o"]) == 2


def test_prove_found_and_not_found(capsys):
    assert main(["prove", "A, A -o B |- B", "--theory", "ALm", "--depth", "4"]) == 0
    assert "ImpE" in capsys.readouterr().out
    assert main(["prove", "|- A -o A * A", "--theory", "ALm", "--depth", "6"]) == 1


def test_models_find(capsys):
    rc = main(
        ["models", "find", "--theory", "LLc", "--max-size", "10", "--falsify", "A |- A * A"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "size 3" in out and "assign: A=1" in out
    rc = main(
        ["models", "find", "--theory", "ALm", "--max-size", "3", "--falsify", "A |- A"]
    )
    assert rc == 1


def test_models_enum_deterministic(capsys):
    assert main(["models", "enum", "--max-size", "3", "--require", "hoop"]) == 0
    first = capsys.readouterr().out
    assert main(["models", "enum", "--max-size", "3", "--require", "hoop"]) == 0
    assert capsys.readouterr().out == first


def test_translate(capsys):
    assert main(["translate", "--scheme", "glivenko", "P"]) == 0
    assert capsys.readouterr().out.strip() == "(P -o 1) -o 1"


def test_check_proof_file(tmp_path, capsys):
    from hooplog.sequent import bounded_prove, format_proof, parse_sequent
    from hooplog.theories import ALm

    p = bounded_prove(parse_sequent("A * (A -o B) |- B"), ALm, 6)
    f = tmp_path / "mp.proof"
    f.write_text(format_proof(p))
    assert main(["check", str(f), "--theory", "ALm"]) == 0
    assert main(["check", str(f), "--theory", "ALm", "--kind", "proof"]) == 0


def test_check_derivation_file(tmp_path):
    from hooplog.hilbert import format_derivation, sequent_to_hilbert
    from hooplog.sequent import bounded_prove, parse_sequent
    from hooplog.theories import ALm

    p = bounded_prove(parse_sequent("A |- A"), ALm, 3)
    der, _ = sequent_to_hilbert(p, ALm)
    f = tmp_path / "id.hilbert"
    f.write_text(format_derivation(der))
    assert main(["check", str(f), "--theory", "ALm"]) == 0


def test_corpus_run_filter(capsys):
    assert main(["corpus", "run", "--filter", "axiom-l"]) == 0
    out = capsys.readouterr().out
    assert "axiom-l" in out and "1/1" in out


def test_corpus_show(capsys):
    assert main(["corpus", "show", "axiom-l"]) == 0
    out = capsys.readouterr().out
    assert "scripts axiom-l-fwd.eq" in out and "start (B -o A) -o A -o B" in out
    assert main(["corpus", "show", "no-such-entry"]) == 2
