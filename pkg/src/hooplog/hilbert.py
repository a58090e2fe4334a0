"""Hilbert-style systems, derivation checking, and proof translation.

Each sequent theory has a Hilbert twin whose only rule is modus ponens; the
base system has composition, commutativity, currying, uncurrying and
weakening, and the extensions add EFQ, DNE, CWC or Con.  The Rose-Rosser
system (A1-A4 over -o and ^ only) is registered alongside them.

`sequent_to_hilbert` realises one direction of the equivalence between the
two presentations constructively: by induction on the proof tree it keeps,
for every node `x1, ..., xk |- G`, a derived formula
`x1 * (x2 * ... ) -o G`, using the five base schemata as combinators, and
curries the result at the root.  `hilbert_to_sequent` replays the other
direction, turning axiom instances into once-proved schematic trees and
modus ponens into ImpE.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    Formula,
    FormulaError,
    Imp,
    ONE,
    Tensor,
    Var,
    expand_derived,
    format_formula,
    formula_key,
    parse_formula,
    substitute,
)
from .sequent import (
    ProofTree,
    Sequent,
    Verdict,
    bounded_prove,
    check_proof,
    imp_e,
    substitute_proof,
)
from .theories import ALL_THEORIES, TheoryId

_A, _B, _C = Var("A"), Var("B"), Var("C")


def _neg(f: Formula) -> Formula:
    return Imp(f, ONE)


SCHEMAS: dict[str, Formula] = {
    "Comp": Imp(Imp(_A, _B), Imp(Imp(_B, _C), Imp(_A, _C))),
    "Comm": Imp(Tensor(_A, _B), Tensor(_B, _A)),
    "Curry": Imp(Imp(Tensor(_A, _B), _C), Imp(_A, Imp(_B, _C))),
    "Uncurry": Imp(Imp(_A, Imp(_B, _C)), Imp(Tensor(_A, _B), _C)),
    "Wk": Imp(Tensor(_A, _B), _A),
    "EFQ": Imp(ONE, _A),
    "DNE": Imp(_neg(_neg(_A)), _A),
    "CWC": Imp(
        Tensor(_A, Imp(_A, _B)), Tensor(_B, Imp(_B, _A))
    ),
    "Con": Imp(_A, Tensor(_A, _A)),
    "A1": Imp(_A, Imp(_B, _A)),
    "A2": Imp(Imp(_A, _B), Imp(Imp(_B, _C), Imp(_A, _C))),
    "A3": Imp(Imp(Imp(_A, _B), _B), Imp(Imp(_B, _A), _A)),
    "A4": Imp(Imp(_neg(_A), _neg(_B)), Imp(_B, _A)),
}

_BASE = ("Comp", "Comm", "Curry", "Uncurry", "Wk")


def system_for(theory: TheoryId) -> tuple[str, ...]:
    out = list(_BASE)
    if theory.base == "lukasiewicz":
        out.append("CWC")
    if theory.base == "full":
        out.append("Con")
    if theory.level in ("intuitionistic", "classical"):
        out.append("EFQ")
    if theory.level == "classical":
        out.append("DNE")
    return tuple(out)


ROSE_ROSSER = ("A1", "A2", "A3", "A4")

SYSTEMS: dict[str, tuple[str, ...]] = {
    f"H-{t.name}": system_for(t) for t in ALL_THEORIES
}
SYSTEMS["RoseRosser"] = ROSE_ROSSER


Justification = tuple  # ("axiom", schema, subst) | ("mp", i, j)


@dataclass(frozen=True)
class HilbertDerivation:
    lines: tuple[tuple[Formula, Justification], ...]

    @property
    def final(self) -> Formula:
        return self.lines[-1][0]

    def __len__(self):
        return len(self.lines)


def check_derivation(d: HilbertDerivation, system: str) -> Verdict:
    """Every line must be a schema instance of the system or follow by
    modus ponens from two earlier lines."""
    try:
        schemas = SYSTEMS[system]
    except KeyError:
        raise ValueError(f"unknown Hilbert system {system!r}")
    for n, (f, just) in enumerate(d.lines):
        if just[0] == "axiom":
            _, name, subst = just
            if name not in schemas:
                return Verdict(False, f"line {n + 1}: schema {name} not in {system}")
            if substitute(SCHEMAS[name], subst) != f:
                return Verdict(False, f"line {n + 1}: not an instance of {name}")
        elif just[0] == "mp":
            _, i, j = just
            if not (0 <= i < n and 0 <= j < n):
                return Verdict(False, f"line {n + 1}: mp premises must be earlier")
            if d.lines[j][0] != Imp(d.lines[i][0], f):
                return Verdict(
                    False,
                    f"line {n + 1}: line {j + 1} is not (line {i + 1}) -o this line",
                )
        else:
            return Verdict(False, f"line {n + 1}: unknown justification {just[0]!r}")
    return Verdict(True)


def curry_sequent(s: Sequent, order: list[Formula] | tuple[Formula, ...]) -> Formula:
    """The right-nested implication C1 -o ... -o Ck -o A."""
    if tuple(sorted(order, key=formula_key)) != s.context:
        raise FormulaError("order does not enumerate the context multiset")
    out = s.goal
    for c in reversed(tuple(order)):
        out = Imp(c, out)
    return out


def rose_rosser_embed(f: Formula) -> Formula:
    """Replace every A * B by (A -o B^)^, innermost first; output uses only
    variables, 1 and -o."""
    f = expand_derived(f)

    def go(g: Formula) -> Formula:
        if isinstance(g, Tensor):
            return _neg(Imp(go(g.left), _neg(go(g.right))))
        if isinstance(g, Imp):
            return Imp(go(g.left), go(g.right))
        return g

    return go(f)


class _Builder:
    """Accumulates derivation lines; helper results are memoised so shared
    sub-derivations are emitted once."""

    def __init__(self, schemas: tuple[str, ...]):
        self.schemas = schemas
        self.lines: list[tuple[Formula, Justification]] = []
        self.by_formula: dict[Formula, int] = {}
        self.memo: dict[tuple, int] = {}

    def derivation(self) -> HilbertDerivation:
        return HilbertDerivation(tuple(self.lines))

    def extract(self, idx: int) -> HilbertDerivation:
        """The sub-derivation reachable from line idx, renumbered."""
        needed: set[int] = set()
        stack = [idx]
        while stack:
            k = stack.pop()
            if k in needed:
                continue
            needed.add(k)
            just = self.lines[k][1]
            if just[0] == "mp":
                stack.extend(just[1:])
        keep = sorted(needed)
        renum = {old: new for new, old in enumerate(keep)}
        out = []
        for old in keep:
            f, just = self.lines[old]
            if just[0] == "mp":
                just = ("mp", renum[just[1]], renum[just[2]])
            out.append((f, just))
        return HilbertDerivation(tuple(out))

    def _emit(self, f: Formula, just: Justification) -> int:
        got = self.by_formula.get(f)
        if got is not None:
            return got
        self.lines.append((f, just))
        idx = len(self.lines) - 1
        self.by_formula[f] = idx
        return idx

    def axiom(self, name: str, **subst: Formula) -> int:
        if name not in self.schemas:
            raise FormulaError(f"schema {name} unavailable in this system")
        sig = dict(subst)
        return self._emit(substitute(SCHEMAS[name], sig), ("axiom", name, sig))

    def mp(self, i: int, j: int) -> int:
        fj = self.lines[j][0]
        fi = self.lines[i][0]
        if not (isinstance(fj, Imp) and fj.left == fi):
            raise FormulaError("mp: major premise does not match")
        return self._emit(fj.right, ("mp", i, j))

    def formula(self, i: int) -> Formula:
        return self.lines[i][0]

    # Derived combinators.

    def comp(self, i: int, j: int) -> int:
        """From |- X -o Y and |- Y -o Z conclude |- X -o Z."""
        fi, fj = self.formula(i), self.formula(j)
        step = self.axiom("Comp", A=fi.left, B=fi.right, C=fj.right)
        return self.mp(j, self.mp(i, step))

    def ident(self, a: Formula) -> int:
        """|- a -o a, via a K instance flipped against a stock theorem."""
        key = ("ident", a)
        if key in self.memo:
            return self.memo[key]
        thm = self.axiom("Wk", A=a, B=a)  # the stock theorem t := a * a -o a
        t = self.formula(thm)
        k2 = self.mp(
            self.axiom("Wk", A=a, B=t), self.axiom("Curry", A=a, B=t, C=a)
        )  # a -o (t -o a)
        out = self.mp(thm, self.c_rule(k2))
        self.memo[key] = out
        return out

    def c_rule(self, i: int) -> int:
        """From |- X -o (Y -o Z) conclude |- Y -o (X -o Z)."""
        f = self.formula(i)
        x, y, z = f.left, f.right.left, f.right.right
        unc = self.mp(i, self.axiom("Uncurry", A=x, B=y, C=z))  # x*y -o z
        comm = self.axiom("Comm", A=y, B=x)  # y*x -o x*y
        swapped = self.comp(comm, unc)  # y*x -o z
        return self.mp(swapped, self.axiom("Curry", A=y, B=x, C=z))

    def lift(self, c: Formula, i: int) -> int:
        """From |- P -o Q conclude |- (C -o P) -o (C -o Q)."""
        f = self.formula(i)
        step = self.axiom("Comp", A=c, B=f.left, C=f.right)
        return self.mp(i, self.c_rule(step))

    def pair(self, a: Formula, b: Formula) -> int:
        """|- a -o (b -o a * b)."""
        key = ("pair", a, b)
        if key in self.memo:
            return self.memo[key]
        t = Tensor(a, b)
        out = self.mp(self.ident(t), self.axiom("Curry", A=a, B=b, C=t))
        self.memo[key] = out
        return out

    def cong_left(self, i: int, c: Formula) -> int:
        """From |- X -o Y conclude |- X * C -o Y * C."""
        f = self.formula(i)
        x, y = f.left, f.right
        chained = self.comp(i, self.pair(y, c))  # x -o (c -o y*c)
        return self.mp(chained, self.axiom("Uncurry", A=x, B=c, C=Tensor(y, c)))

    def cong_right(self, i: int, c: Formula) -> int:
        """From |- X -o Y conclude |- C * X -o C * Y."""
        f = self.formula(i)
        x, y = f.left, f.right
        comm1 = self.axiom("Comm", A=c, B=x)
        comm2 = self.axiom("Comm", A=y, B=c)
        return self.comp(self.comp(comm1, self.cong_left(i, c)), comm2)

    def assoc_rl(self, a: Formula, b: Formula, c: Formula) -> int:
        """|- (a*b)*c -o a*(b*c)."""
        key = ("assoc_rl", a, b, c)
        if key in self.memo:
            return self.memo[key]
        bc = Tensor(b, c)
        x = Tensor(a, bc)
        base = self.pair(a, bc)  # a -o (b*c -o x)
        lifted = self.lift(a, self.axiom("Curry", A=b, B=c, C=x))
        curried = self.mp(base, lifted)  # a -o (b -o (c -o x))
        u1 = self.mp(curried, self.axiom("Uncurry", A=a, B=b, C=Imp(c, x)))
        out = self.mp(u1, self.axiom("Uncurry", A=Tensor(a, b), B=c, C=x))
        self.memo[key] = out
        return out

    def assoc_lr(self, a: Formula, b: Formula, c: Formula) -> int:
        """|- a*(b*c) -o (a*b)*c."""
        key = ("assoc_lr", a, b, c)
        if key in self.memo:
            return self.memo[key]
        y = Tensor(Tensor(a, b), c)
        base = self.pair(Tensor(a, b), c)  # a*b -o (c -o y)
        curried = self.mp(base, self.axiom("Curry", A=a, B=b, C=Imp(c, y)))
        # a -o (b -o (c -o y)); regroup the inner two antecedents
        unc_inner = self.axiom("Uncurry", A=b, B=c, C=y)
        lifted = self.lift(a, unc_inner)
        regrouped = self.mp(curried, lifted)  # a -o (b*c -o y)
        out = self.mp(regrouped, self.axiom("Uncurry", A=a, B=Tensor(b, c), C=y))
        self.memo[key] = out
        return out

    # Right-nested combs over an explicit order.  All structure is driven by
    # the order lists: a context element may itself be a tensor, so the comb
    # shape cannot be recovered from the formula.

    def split_comb(self, o1: list[Formula], cb: Formula) -> int:
        """|- comb(o1 ++ [cb]) -o comb(o1) * cb."""
        if len(o1) == 1:
            return self.ident(Tensor(o1[0], cb))
        x, rest = o1[0], o1[1:]
        inner = self.split_comb(rest, cb)
        lifted = self.cong_right(inner, x)  # x*(comb(rest++cb)) -o x*(comb(rest)*cb)
        return self.comp(lifted, self.assoc_lr(x, _comb(rest), cb))

    def swap_comb(self, order: list[Formula], k: int) -> int:
        """|- comb(order) -o comb(order with k,k+1 swapped)."""
        if k == 0:
            a, b = order[0], order[1]
            if len(order) == 2:
                return self.axiom("Comm", A=a, B=b)
            rest = _comb(order[2:])
            s1 = self.assoc_lr(a, b, rest)
            s2 = self.cong_left(self.axiom("Comm", A=a, B=b), rest)
            s3 = self.assoc_rl(b, a, rest)
            return self.comp(self.comp(s1, s2), s3)
        inner = self.swap_comb(order[1:], k - 1)
        return self.cong_right(inner, order[0])

    def perm_comb(self, src: list[Formula], dst: list[Formula]) -> int:
        """|- comb(src) -o comb(dst) for a permutation of equal multisets."""
        if sorted(src, key=formula_key) != sorted(dst, key=formula_key):
            raise FormulaError("perm_comb: not a permutation")
        cur = list(src)
        idx: int | None = None
        for i in range(len(dst)):
            j = cur.index(dst[i], i)
            while j > i:
                s = self.swap_comb(cur, j - 1)
                idx = s if idx is None else self.comp(idx, s)
                cur[j - 1], cur[j] = cur[j], cur[j - 1]
                j -= 1
        if idx is None:
            return self.ident(_comb(src))
        return idx

    def curry_iso(self, order: list[Formula], goal: Formula) -> int:
        """|- (comb(order) -o goal) -o (x1 -o x2 -o ... -o goal)."""
        if len(order) == 1:
            return self.ident(Imp(order[0], goal))
        x, rest = order[0], order[1:]
        l1 = self.axiom("Curry", A=x, B=_comb(rest), C=goal)
        inner = self.curry_iso(rest, goal)
        return self.comp(l1, self.lift(x, inner))


def _comb(order) -> Formula:
    if not order:
        raise FormulaError("empty comb")
    out = order[-1]
    for f in reversed(order[:-1]):
        out = Tensor(f, out)
    return out


@dataclass
class _Node:
    order: list[Formula]  # context enumeration; empty means |- goal directly
    idx: int  # line index of comb(order) -o goal, or of goal itself


def sequent_to_hilbert(
    p: ProofTree, theory: TheoryId
) -> tuple[HilbertDerivation, list[Formula]]:
    """Translate a checked proof into the matching Hilbert system.

    Returns the derivation and the context order; the final line is
    curry_sequent(conclusion, order) with the context in canonical order.
    """
    v = check_proof(p, theory)
    if not v:
        raise FormulaError(f"sequent proof does not check: {v.message}")
    b = _Builder(system_for(theory))
    node = _translate(p, b)
    order = sorted(node.order, key=formula_key)
    goal = p.conclusion.goal
    if node.order:
        idx = node.idx
        if order != node.order:
            idx = b.comp(b.perm_comb(order, node.order), idx)
        idx = b.mp(idx, b.curry_iso(order, goal))
    else:
        idx = node.idx
    want = curry_sequent(p.conclusion, order)
    if b.formula(idx) != want:
        raise FormulaError("internal translation error: wrong final formula")
    return b.extract(idx), order


def _translate(p: ProofTree, b: _Builder) -> _Node:
    rule = p.rule
    s = p.conclusion
    if rule == "AxASM":
        a = s.goal
        gamma = list(_minus(s.context, [a]))
        if not gamma:
            return _Node([a], b.ident(a))
        return _Node([a] + gamma, b.axiom("Wk", A=a, B=_comb(gamma)))
    if rule == "AxCON":
        a = s.goal.left
        gamma = list(_minus(s.context, [a]))
        con = b.axiom("Con", A=a)
        if not gamma:
            return _Node([a], con)
        wk = b.axiom("Wk", A=a, B=_comb(gamma))
        return _Node([a] + gamma, b.comp(wk, con))
    if rule == "AxEFQ":
        gamma = list(_minus(s.context, [ONE]))
        efq = b.axiom("EFQ", A=s.goal)
        if not gamma:
            return _Node([ONE], efq)
        wk = b.axiom("Wk", A=ONE, B=_comb(gamma))
        return _Node([ONE] + gamma, b.comp(wk, efq))
    if rule == "AxDNE":
        a = s.goal
        dd = Imp(Imp(a, ONE), ONE)
        gamma = list(_minus(s.context, [dd]))
        dne = b.axiom("DNE", A=a)
        if not gamma:
            return _Node([dd], dne)
        wk = b.axiom("Wk", A=dd, B=_comb(gamma))
        return _Node([dd] + gamma, b.comp(wk, dne))
    if rule == "AxCWC":
        bb, a = s.goal.left, s.goal.right.right
        ab = Imp(a, bb)
        gamma = list(_minus(s.context, [a, ab]))
        cwc = b.axiom("CWC", A=a, B=bb)
        if not gamma:
            return _Node([a, ab], cwc)
        proj = b.cong_right(b.axiom("Wk", A=ab, B=_comb(gamma)), a)
        return _Node([a, ab] + gamma, b.comp(proj, cwc))
    if rule == "ImpI":
        sub = _translate(p.premises[0], b)
        a = s.goal.left
        k = sub.order.index(a)
        if k != 0:
            perm = [a] + sub.order[:k] + sub.order[k + 1 :]
            sub = _Node(perm, b.comp(b.perm_comb(perm, sub.order), sub.idx))
        if len(sub.order) == 1:
            return _Node([], sub.idx)
        rest = sub.order[1:]
        comm = b.axiom("Comm", A=_comb(rest), B=a)
        flipped = b.comp(comm, sub.idx)  # rest * a -o B
        out = b.mp(flipped, b.axiom("Curry", A=_comb(rest), B=a, C=s.goal.right))
        return _Node(rest, out)
    if rule == "ImpE":
        minor = _translate(p.premises[0], b)
        major = _translate(p.premises[1], b)
        a = p.premises[0].conclusion.goal
        goal = s.goal
        if not major.order:
            step = major.idx  # |- a -o goal
            if not minor.order:
                return _Node([], b.mp(minor.idx, step))
            return _Node(minor.order, b.comp(minor.idx, step))
        flipped = b.c_rule(major.idx)  # a -o (C2 -o goal)
        if not minor.order:
            return _Node(major.order, b.mp(minor.idx, flipped))
        chained = b.comp(minor.idx, flipped)  # C1 -o (C2 -o goal)
        return _join(b, minor.order, major.order, chained, goal)
    if rule == "TensorI":
        l = _translate(p.premises[0], b)
        r = _translate(p.premises[1], b)
        a = p.premises[0].conclusion.goal
        bb = p.premises[1].conclusion.goal
        goal = s.goal
        pr = b.pair(a, bb)  # a -o (b -o a*b)
        if not l.order and not r.order:
            return _Node([], b.mp(r.idx, b.mp(l.idx, pr)))
        if not l.order:
            step = b.mp(l.idx, pr)  # b -o a*b
            if not r.order:
                return _Node([], b.mp(r.idx, step))
            return _Node(r.order, b.comp(r.idx, step))
        part = b.comp(l.idx, pr)  # C1 -o (b -o a*b)
        if not r.order:
            return _Node(l.order, b.mp(r.idx, b.c_rule(part)))
        # (b -o goal) -o (C2 -o goal), lifted under C1
        comp_inst = b.mp(r.idx, b.axiom("Comp", A=_comb(r.order), B=bb, C=goal))
        chained = b.mp(part, b.lift(_comb(l.order), comp_inst))
        return _join(b, l.order, r.order, chained, goal)
    if rule == "TensorE":
        tprem = _translate(p.premises[0], b)
        body = _translate(p.premises[1], b)
        t = p.premises[0].conclusion.goal
        a, bb = t.left, t.right
        goal = s.goal
        ka = body.order.index(a)
        perm = [a] + body.order[:ka] + body.order[ka + 1 :]
        kb = perm.index(bb, 1)
        perm = [a, bb] + perm[1:kb] + perm[kb + 1 :]
        if perm != body.order:
            body = _Node(perm, b.comp(b.perm_comb(perm, body.order), body.idx))
        rest = body.order[2:]
        if rest:
            regroup = b.assoc_rl(a, bb, _comb(rest))  # (a*b)*rest -o a*(b*rest)
            grouped = b.comp(regroup, body.idx)  # (a*b)*rest -o goal
            curried = b.mp(
                grouped, b.axiom("Curry", A=Tensor(a, bb), B=_comb(rest), C=goal)
            )  # a*b -o (rest -o goal)
            if not tprem.order:
                return _Node(rest, b.mp(tprem.idx, curried))
            chained = b.comp(tprem.idx, curried)
            return _join(b, tprem.order, rest, chained, goal)
        # body.order == [a, bb]: its comb is exactly a*b
        if not tprem.order:
            return _Node([], b.mp(tprem.idx, body.idx))
        return _Node(tprem.order, b.comp(tprem.idx, body.idx))
    raise FormulaError(f"unknown rule {rule!r}")


def _join(b: _Builder, o1: list[Formula], o2: list[Formula], idx: int, goal: Formula) -> _Node:
    """From |- comb(o1) -o (comb(o2) -o goal) build the node for o1 ++ o2."""
    c1, c2 = _comb(o1), _comb(o2)
    unc = b.mp(idx, b.axiom("Uncurry", A=c1, B=c2, C=goal))  # c1*c2 -o goal
    order = o1 + o2
    glue = b.split_comb(o1, c2)  # comb(order) -o c1*c2
    return _Node(order, b.comp(glue, unc))


def _minus(ctx, remove):
    out = list(ctx)
    for f in remove:
        out.remove(f)
    return out


# Hilbert -> sequent replay

_SCHEMA_TREES: dict[tuple[str, TheoryId], ProofTree] = {}

_SCHEMA_DEPTH = {
    "Comp": 7,
    "Comm": 6,
    "Curry": 7,
    "Uncurry": 8,
    "Wk": 5,
    "EFQ": 3,
    "DNE": 3,
    "CWC": 4,
    "Con": 3,
    "A1": 4,
}


def schema_proof(name: str, theory: TheoryId) -> ProofTree:
    """A once-computed sequent proof of |- schema, substituted on demand."""
    key = (name, theory)
    if key not in _SCHEMA_TREES:
        depth = _SCHEMA_DEPTH.get(name, 8)
        tree = bounded_prove(Sequent((), SCHEMAS[name]), theory, depth)
        if tree is None:
            raise FormulaError(f"no sequent proof for schema {name} in {theory}")
        _SCHEMA_TREES[key] = tree
    return _SCHEMA_TREES[key]


def hilbert_to_sequent(d: HilbertDerivation, theory: TheoryId) -> ProofTree:
    """Replay a derivation as a sequent proof of |- final line."""
    proofs: list[ProofTree] = []
    for f, just in d.lines:
        if just[0] == "axiom":
            _, name, subst = just
            tree = substitute_proof(schema_proof(name, theory), subst)
            if tree.conclusion.goal != f:
                raise FormulaError("axiom instance does not match schema proof")
            proofs.append(tree)
        else:
            _, i, j = just
            proofs.append(imp_e(proofs[i], proofs[j]))
    return proofs[-1]


# Derivation file format: numbered lines
#   n. <formula> | axiom SCHEMA {X=f; Y=g}
#   n. <formula> | mp i j


def format_derivation(d: HilbertDerivation) -> str:
    out = []
    for n, (f, just) in enumerate(d.lines, start=1):
        if just[0] == "axiom":
            _, name, subst = just
            s = "; ".join(
                f"{k}={format_formula(v)}" for k, v in sorted(subst.items())
            )
            out.append(f"{n}. {format_formula(f)} | axiom {name} {{{s}}}")
        else:
            out.append(f"{n}. {format_formula(f)} | mp {just[1] + 1} {just[2] + 1}")
    return "\n".join(out) + "\n"


def parse_derivation(text: str) -> HilbertDerivation:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        numbered, rest = line.split(".", 1)
        int(numbered)
        body, just = rest.rsplit("|", 1)
        f = parse_formula(body.strip())
        just = just.strip()
        if just.startswith("axiom"):
            _, name, braces = just.split(" ", 2)
            braces = braces.strip()
            if not (braces.startswith("{") and braces.endswith("}")):
                raise FormulaError(f"bad substitution in {line!r}")
            subst = {}
            inner = braces[1:-1].strip()
            if inner:
                for item in inner.split(";"):
                    k, v = item.split("=", 1)
                    subst[k.strip()] = parse_formula(v.strip())
            lines.append((f, ("axiom", name, subst)))
        elif just.startswith("mp"):
            _, i, j = just.split()
            lines.append((f, ("mp", int(i) - 1, int(j) - 1)))
        else:
            raise FormulaError(f"bad justification in {line!r}")
    return HilbertDerivation(tuple(lines))
