"""The machine-checked result catalogue.

Every catalogued result carries an id, a statement, a theory and a tier:

  proved              a chain script, sequent proof or bounded proof that
                      rechecks on every run;
  refuted             a pinned finite countermodel that rechecks as
                      falsifying;
  model-checked-only  validated in every algebra of the matching class up
                      to a size bound, with no syntactic proof claimed.

Entries are processed in index order; an entry whose claim has lemma shape
is registered and becomes citable by later scripts.  `run_corpus` rebuilds
the registry from scratch and re-verifies every entry, so a regression in
any proof, script or model is a hard failure naming the entry.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources

from ..syntax import (
    Imp,
    Neg,
    Tensor,
    ZERO,
    expand_derived,
    parse_formula,
)
from ..sequent import (
    ProofTree,
    Sequent,
    bounded_prove,
    check_proof,
    format_sequent,
    parse_proof,
    parse_sequent,
)
from ..theories import TheoryId, theory_by_name
from ..eqengine import (
    EQUIV,
    EqScript,
    GEQ,
    LemmaEntry,
    LemmaRegistry,
    ac_eq,
    check_script,
    parse_script,
)
from ..algebra import (
    enumerate_algebras,
    falsifying_assignment,
    parse_algebra,
    theory_class,
)

TIER_PROVED = "proved"
TIER_REFUTED = "refuted"
TIER_CHECKED = "model-checked-only"


@dataclass
class CorpusEntry:
    id: str
    tier: str
    theory: TheoryId
    statement: str
    evidence: tuple
    core: bool = False
    note: str = ""


@dataclass
class EntryResult:
    entry: CorpusEntry
    ok: bool
    detail: str
    seconds: float
    depth_used: int | None = None


@dataclass
class CorpusReport:
    results: list[EntryResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failed(self) -> list[EntryResult]:
        return [r for r in self.results if not r.ok]

    def render(self, timing: bool = False) -> str:
        # timing is off by default so identical runs print identical bytes
        lines = []
        for r in self.results:
            mark = "ok  " if r.ok else "FAIL"
            clock = f"{r.seconds:7.2f}s  " if timing else ""
            lines.append(
                f"{mark} {r.entry.id:24s} {r.entry.tier:18s} "
                f"{r.entry.theory.name:3s} {clock}{r.detail}"
            )
        n_ok = sum(1 for r in self.results if r.ok)
        lines.append(f"{n_ok}/{len(self.results)} entries verified")
        return "\n".join(lines)


def _data_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text()


# The primitive kit: schema lemmas discharged by bounded sequent search at
# registration time.  Columns: id, claim, relation, theory, search depth.

_KIT = [
    ("wk-tensor", "A * B >= A", "ALm", 5),
    ("wk-imp", "A >= B -o A", "ALm", 3),
    ("mp-tensor", "A * (A -o B) >= B", "ALm", 5),
    ("curry", "A * B -o C ~= A -o B -o C", "ALm", 7),
    ("comp-tensor", "(A -o B) * (B -o C) >= A -o C", "ALm", 7),
    ("comp-right", "B -o C >= (A -o B) -o A -o C", "ALm", 7),
    ("dn-intro", "A >= A^^", "ALm", 5),
    ("tripleneg", "A^^^ ~= A^", "ALm", 8),
    ("contrapose", "A -o B >= B^ -o A^", "ALm", 7),
    ("imp-dd-left", "A^^ -o B^^ ~= A -o B^^", "ALm", 8),
    ("imp-dd-left-neg", "A^^ -o B^ ~= A -o B^", "ALm", 8),
    ("stab-imp-dd", "(A -o B^^)^^ ~= A -o B^^", "ALm", 8),
    ("stab-imp-neg", "(A -o B^)^^ ~= A -o B^", "ALm", 8),
    ("curry-neg", "(A * B)^ ~= A -o B^", "ALm", 8),
    ("dn-push-imp", "(A -o B)^^ >= A -o B^^", "ALm", 8),
    ("contrapose-dd", "A^^ -o B^^ ~= B^ -o A^", "ALm", 8),
    ("dn-tensor-half", "A^^ * B^^ >= (A * B)^^", "ALm", 9),
    ("vee-upper-left", "A >= A \\/ B", "ALm", 4),
    ("pair-imp", "B >= A -o A * B", "ALm", 5),
    ("cwc", "A * (A -o B) ~= B * (B -o A)", "LLm", 6),
    ("cwc-wconj", "A /\\ B ~= B /\\ A", "LLm", 6),
    ("efq-lemma", "1 >= A", "ALi", 2),
    ("neg-imp-any", "A^ >= A -o B", "ALi", 6),
    ("one-split", "1 ~= A * A^", "ALi", 5),
    ("dne-equiv", "A^^ ~= A", "ALc", 3),
]


def _split_claim_text(text: str):
    for sep, rel in ((" ~= ", EQUIV), (" >= ", GEQ)):
        if sep in text:
            l, r = text.split(sep, 1)
            return parse_formula(l.strip()), rel, parse_formula(r.strip())
    raise ValueError(f"bad claim {text!r}")


def _auto_evidence(entry: LemmaEntry, depth: int):
    l = expand_derived(entry.lhs)
    r = expand_derived(entry.rhs)
    fwd = bounded_prove(Sequent((l,), r), entry.theory, depth)
    if fwd is None:
        return None
    if entry.relation == GEQ:
        return fwd
    bwd = bounded_prove(Sequent((r,), l), entry.theory, depth)
    if bwd is None:
        return None
    return (fwd, bwd)


def register_kit(registry: LemmaRegistry) -> None:
    for name, claim, theory, depth in _KIT:
        lhs, rel, rhs = _split_claim_text(claim)
        entry = LemmaEntry(name, lhs, rhs, rel, theory_by_name(theory), "kit")
        proof = _auto_evidence(entry, depth)
        if proof is None:
            raise RuntimeError(f"kit lemma {name} did not prove at depth {depth}")
        registry.register(entry, proof)


# Index parsing.  One entry per line:
#   id | core? | tier | theory | statement | evidence...
# Evidence forms:
#   auto <depth>                    claim: statement is `lhs >= rhs`/`lhs ~= rhs`
#   script <file>                   the script's claim is the statement
#   scripts <fwd> <bwd>             equivalence from two >= scripts
#   script+auto <file> <depth>      forward script, bounded converse
#   proof <file> [<file>]           sequent proof(s) of the statement
#   model <file>                    pinned countermodel for a sequent statement
#   checked <size>                  valid in every algebra of the class <= size
#   builtin <name>                  python-verified construction
#   group <id,id,...>               all member entries passed


def load_index() -> list[CorpusEntry]:
    out = []
    for raw in _data_text("index.txt").splitlines():
        line = raw.split("#", 1)[0].strip() if raw.lstrip().startswith("#") else raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("::")]
        if len(parts) != 6:
            raise ValueError(f"malformed index line: {raw!r}")
        eid, coreflag, tier, theory, statement, evidence = parts
        out.append(
            CorpusEntry(
                eid,
                tier,
                theory_by_name(theory),
                statement,
                tuple(evidence.split()),
                core=coreflag == "core",
            )
        )
    return out


class Corpus:
    def __init__(self):
        self.registry = LemmaRegistry()
        self.entries = load_index()
        self.proofs: dict[str, ProofTree] = {}
        self.scripts: dict[str, EqScript] = {}
        self.verified: set[str] = set()
        self._builtins = _builtin_table()

    def run(self, pattern: str | None = None, jobs: int = 1) -> CorpusReport:
        register_kit(self.registry)
        self.jobs = max(1, jobs)
        report = CorpusReport()
        for entry in self.entries:
            t0 = time.perf_counter()
            try:
                ok, detail = self._verify(entry)
            except Exception as e:  # a broken entry is a failure, not a crash
                ok, detail = False, f"error: {e}"
            dt = time.perf_counter() - t0
            if ok:
                self.verified.add(entry.id)
            if pattern is None or pattern in entry.id:
                report.results.append(EntryResult(entry, ok, detail, dt))
        return report

    # evidence handlers

    def _verify(self, entry: CorpusEntry) -> tuple[bool, str]:
        kind = entry.evidence[0]
        handler = getattr(self, f"_ev_{kind.replace('+', '_')}", None)
        if handler is None:
            return False, f"unknown evidence kind {kind!r}"
        return handler(entry)

    def _register(self, entry: CorpusEntry, lemma: LemmaEntry, proof) -> None:
        self.registry.register(lemma, proof)

    def _ev_auto(self, entry: CorpusEntry):
        depth = int(entry.evidence[1])
        lhs, rel, rhs = _split_claim_text(entry.statement)
        lemma = LemmaEntry(entry.id, lhs, rhs, rel, entry.theory, "auto")
        proof = _auto_evidence(lemma, depth)
        if proof is None:
            return False, f"bounded search failed at depth {depth}"
        self._register(entry, lemma, proof)
        trees = proof if isinstance(proof, tuple) else (proof,)
        for i, t in enumerate(trees):
            self.proofs[f"{entry.id}[{i}]"] = t
        return True, f"bounded proof, depth {depth}"

    def _ev_script(self, entry: CorpusEntry):
        script = parse_script(_data_text(entry.evidence[1]))
        rep = check_script(script, self.registry)
        if not rep.ok:
            return False, f"step {rep.step}: {rep.message}"
        self.scripts[entry.id] = script
        if not script.assumes:
            lemma = LemmaEntry(
                entry.id, script.claim_lhs, script.claim_rhs, script.claim_rel,
                entry.theory, "script",
            )
            self._register(entry, lemma, script)
        return True, f"script, {len(script.steps)} steps"

    def _ev_scripts(self, entry: CorpusEntry):
        fwd = parse_script(_data_text(entry.evidence[1]))
        bwd = parse_script(_data_text(entry.evidence[2]))
        for s in (fwd, bwd):
            rep = check_script(s, self.registry)
            if not rep.ok:
                return False, f"{s.id} step {rep.step}: {rep.message}"
        if not (ac_eq(fwd.claim_lhs, bwd.claim_rhs) and ac_eq(fwd.claim_rhs, bwd.claim_lhs)):
            return False, "the two scripts are not converse to each other"
        self.scripts[entry.id] = fwd
        self.scripts[entry.id + ".rev"] = bwd
        lemma = LemmaEntry(
            entry.id, fwd.claim_lhs, fwd.claim_rhs, EQUIV, entry.theory, "scripts"
        )
        self._register(entry, lemma, (fwd, bwd))
        return True, f"two scripts, {len(fwd.steps)}+{len(bwd.steps)} steps"

    def _ev_script_auto(self, entry: CorpusEntry):
        fwd = parse_script(_data_text(entry.evidence[1]))
        depth = int(entry.evidence[2])
        rep = check_script(fwd, self.registry)
        if not rep.ok:
            return False, f"step {rep.step}: {rep.message}"
        l = expand_derived(fwd.claim_lhs)
        r = expand_derived(fwd.claim_rhs)
        bwd = bounded_prove(Sequent((r,), l), entry.theory, depth)
        if bwd is None:
            return False, f"converse search failed at depth {depth}"
        self.scripts[entry.id] = fwd
        self.proofs[entry.id + ".rev"] = bwd
        lemma = LemmaEntry(
            entry.id, fwd.claim_lhs, fwd.claim_rhs, EQUIV, entry.theory, "script+auto"
        )
        self._register(entry, lemma, (fwd, bwd))
        return True, f"script ({len(fwd.steps)} steps) + converse depth {depth}"

    def _ev_proof(self, entry: CorpusEntry):
        seq = parse_sequent(entry.statement)
        tree = parse_proof(_data_text(entry.evidence[1]))
        if tree.conclusion != seq:
            return False, "proof conclusion differs from the statement"
        v = check_proof(tree, entry.theory)
        if not v:
            return False, v.message
        self.proofs[entry.id] = tree
        return True, f"sequent proof, height {tree.height()}"

    def _ev_model(self, entry: CorpusEntry):
        text = _data_text(entry.evidence[1])
        seq_line, assign_line, alg_text = _split_model_file(text)
        seq = parse_sequent(seq_line)
        if format_sequent(seq) != format_sequent(parse_sequent(entry.statement)):
            return False, "model file sequent differs from the statement"
        alg = parse_algebra(alg_text)
        v = dict(
            (k.strip(), int(x)) for k, x in
            (item.split("=") for item in assign_line.split(",") if item.strip())
        )
        from ..algebra import seq_holds

        if seq_holds(seq, alg, v):
            return False, "pinned witness no longer falsifies the sequent"
        return True, f"countermodel of size {alg.size} rechecked"

    def _ev_checked(self, entry: CorpusEntry):
        size = int(entry.evidence[1])
        seqs = [parse_sequent(s.strip()) for s in entry.statement.split(";;")]
        algebras = list(enumerate_algebras(size, theory_class(entry.theory)))
        jobs = getattr(self, "jobs", 1)
        if jobs > 1 and len(algebras) > 4:
            from concurrent.futures import ProcessPoolExecutor

            chunks = [algebras[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for witness in pool.map(_check_chunk, [(seqs, c) for c in chunks]):
                    if witness is not None:
                        return False, f"fails at {witness}"
        else:
            for alg in algebras:
                for seq in seqs:
                    w = falsifying_assignment(seq, alg)
                    if w is not None:
                        return False, f"fails in a size-{alg.size} algebra at {w}"
        return True, f"valid in all {len(algebras)} algebras of size <= {size}"

    def _ev_builtin(self, entry: CorpusEntry):
        fn = self._builtins.get(entry.evidence[1])
        if fn is None:
            return False, f"unknown builtin {entry.evidence[1]!r}"
        return fn(self, entry)

    def _ev_group(self, entry: CorpusEntry):
        members = entry.evidence[1].split(",")
        missing = [m for m in members if m not in self.verified]
        if missing:
            return False, f"members not verified: {missing}"
        return True, f"{len(members)} members verified"


def _check_chunk(args):
    seqs, algebras = args
    for alg in algebras:
        for seq in seqs:
            w = falsifying_assignment(seq, alg)
            if w is not None:
                return (alg.size, w)
    return None


def _split_model_file(text: str):
    seq_line = assign_line = None
    rest = []
    for line in text.splitlines():
        if line.startswith("sequent:"):
            seq_line = line[len("sequent:") :].strip()
        elif line.startswith("assign:"):
            assign_line = line[len("assign:") :].strip()
        else:
            rest.append(line)
    if seq_line is None or assign_line is None:
        raise ValueError("model file needs sequent: and assign: lines")
    return seq_line, assign_line, "\n".join(rest)


def run_corpus(pattern: str | None = None, jobs: int = 1) -> CorpusReport:
    return Corpus().run(pattern, jobs)


# k-indexed family: (A * ... * A)^, A^^ |- A, assembled from the proved
# induction-step lemma by iterating its rewrite k-1 times.


def k_contradiction_sequent(k: int) -> Sequent:
    a = parse_formula("A")
    t = a
    for _ in range(k - 1):
        t = Tensor(a, t)
    return Sequent((Neg(t), Neg(Neg(a))), a)


def k_contradiction_script(k: int) -> EqScript:
    from ..eqengine import EqStep

    if k < 1:
        raise ValueError("k must be at least 1")
    a = parse_formula("A")
    goal_of = []
    t = a
    for _ in range(k):
        goal_of.append(Imp(Neg(t), Imp(Neg(Neg(a)), a)))
        t = Tensor(a, t)
    steps = [EqStep("easy", GEQ, goal_of[0], depth=8)]
    for j in range(1, k):
        steps.append(
            EqStep("rewrite", GEQ, goal_of[j], lemma="kcontr-step", pos=())
        )
    return EqScript(
        f"kcontr-{k}",
        theory_by_name("LLi"),
        ZERO,
        GEQ,
        goal_of[k - 1],
        ZERO,
        tuple(steps),
    )


def generate_k_contradiction(k: int, registry: LemmaRegistry):
    """The sequent for k copies plus a script assembled from the induction
    lemma; returns (sequent, script, verdict)."""
    script = k_contradiction_script(k)
    rep = check_script(script, registry)
    return k_contradiction_sequent(k), script, rep


def _builtin_table():
    from . import builtins as b

    return b.TABLE
