"""Finite algebraic semantics: pocrims, hoops, chains, countermodel search.

Carrier elements are indices 0..n-1 with 0 the monoid identity, which
interprets the formula 0 (truth).  `add` interprets * and `res` interprets
-o; `a >= b` holds when res[a][b] == 0, and 0 is the least element, so
larger means logically stronger (falser).  A bounded algebra has a top
element interpreting the constant 1 (falsehood).

Class flags on top of pocrim: hoop (divisibility, the algebraic CWC),
bounded (EFQ), involutive (DNE), idempotent (CON).  Enumeration yields one
representative per isomorphism class, chains before non-linear orders,
sorted by canonical table form within each size; countermodel search walks
that stream and returns the first falsifying (algebra, assignment).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .syntax import (
    Formula,
    FormulaError,
    Imp,
    Neg,
    Nor,
    SDisj,
    SImp,
    Tensor,
    Var,
    WConj,
    is_one,
    is_zero,
    variables,
)
from .sequent import Sequent
from .theories import TheoryId

FLAGS = ("pocrim", "hoop", "bounded", "involutive", "idempotent")


class AlgebraError(Exception):
    pass


@dataclass(frozen=True)
class FiniteAlgebra:
    size: int
    add: tuple[tuple[int, ...], ...]
    res: tuple[tuple[int, ...], ...]
    top: int | None = None

    def geq(self, a: int, b: int) -> bool:
        return self.res[a][b] == 0

    def labels(self) -> tuple[Fraction, ...] | None:
        """Rational labels i/(size-1) when this is a chain, else None."""
        n = self.size
        if any(not self.geq(i, j) for i in range(n) for j in range(i)):
            return None
        if n == 1:
            return (Fraction(0),)
        return tuple(Fraction(i, n - 1) for i in range(n))

    def __repr__(self):
        return f"<FiniteAlgebra n={self.size} top={self.top}>"


def lukasiewicz_chain(k: int) -> FiniteAlgebra:
    """The chain on {0, 1/(k-1), ..., 1} with truncated addition; index i
    stands for the exact rational i/(k-1)."""
    if k < 2:
        raise ValueError("a chain needs at least two elements")
    m = k - 1
    add = tuple(tuple(min(m, i + j) for j in range(k)) for i in range(k))
    res = tuple(tuple(max(0, j - i) for j in range(k)) for i in range(k))
    return FiniteAlgebra(k, add, res, top=m)


def boolean_algebra() -> FiniteAlgebra:
    return lukasiewicz_chain(2)


def godel_chain(k: int) -> FiniteAlgebra:
    """Chain with add = max; bounded hoop that is not involutive for k >= 3."""
    if k < 2:
        raise ValueError("a chain needs at least two elements")
    add = tuple(tuple(max(i, j) for j in range(k)) for i in range(k))
    res = tuple(tuple(0 if i >= j else j for j in range(k)) for i in range(k))
    return FiniteAlgebra(k, add, res, top=k - 1)


@dataclass
class ClassReport:
    flags: frozenset[str]
    failure: str | None = None


def check_class(m: FiniteAlgebra) -> ClassReport:
    """Verify the pocrim laws, then report the optional class flags."""
    n = m.size
    add, res = m.add, m.res
    rng = range(n)
    if len(add) != n or len(res) != n or any(len(r) != n for r in add + res):
        return ClassReport(frozenset(), "tables are not n x n")
    for a in rng:
        if add[0][a] != a:
            return ClassReport(frozenset(), f"0 is not an identity: 0+{a}={add[0][a]}")
        for b in rng:
            if add[a][b] != add[b][a]:
                return ClassReport(frozenset(), f"add not commutative at ({a},{b})")
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    return ClassReport(
                        frozenset(), f"add not associative at ({a},{b},{c})"
                    )

    def geq(a, b):
        return res[a][b] == 0

    for a in rng:
        if not geq(a, a):
            return ClassReport(frozenset(), f"order not reflexive at {a}")
        if not geq(a, 0):
            return ClassReport(frozenset(), f"0 not least: {a} >= 0 fails")
        for b in rng:
            if a != b and geq(a, b) and geq(b, a):
                return ClassReport(frozenset(), f"order not antisymmetric at ({a},{b})")
            for c in rng:
                if geq(a, b) and geq(b, c) and not geq(a, c):
                    return ClassReport(
                        frozenset(), f"order not transitive at ({a},{b},{c})"
                    )
                if geq(add[a][b], c) != geq(a, res[b][c]):
                    return ClassReport(
                        frozenset(), f"residuation fails at ({a},{b},{c})"
                    )
    flags = {"pocrim"}
    if all(add[a][res[a][b]] == add[b][res[b][a]] for a in rng for b in rng):
        flags.add("hoop")
    tops = [t for t in rng if all(geq(t, a) for a in rng)]
    top = tops[0] if tops else None
    if m.top is not None and m.top != top:
        return ClassReport(frozenset(), f"declared top {m.top} is not the maximum")
    if top is not None:
        flags.add("bounded")
        if all(res[res[a][top]][top] == a for a in rng):
            flags.add("involutive")
    if all(add[a][a] == a for a in rng):
        flags.add("idempotent")
    return ClassReport(frozenset(flags))


Assignment = dict[str, int]


def eval_formula(f: Formula, m: FiniteAlgebra, v: Assignment) -> int:
    """Homomorphic evaluation; derived connectives evaluate through their
    definitions, with 0 read as the identity so unbounded algebras handle
    it without a top element."""
    if isinstance(f, Var):
        try:
            return v[f.name]
        except KeyError:
            raise AlgebraError(f"unassigned variable {f.name}")
    if is_one(f):
        if m.top is None:
            raise AlgebraError("the constant 1 needs a bounded algebra")
        return m.top
    if is_zero(f):
        return 0
    if isinstance(f, Imp):
        return m.res[eval_formula(f.left, m, v)][eval_formula(f.right, m, v)]
    if isinstance(f, Tensor):
        return m.add[eval_formula(f.left, m, v)][eval_formula(f.right, m, v)]
    if isinstance(f, Neg):
        if m.top is None:
            raise AlgebraError("negation needs a bounded algebra")
        return m.res[eval_formula(f.body, m, v)][m.top]
    if isinstance(f, WConj):
        a = eval_formula(f.left, m, v)
        b = eval_formula(f.right, m, v)
        return m.add[a][m.res[a][b]]
    if isinstance(f, SDisj):
        a = eval_formula(f.left, m, v)
        b = eval_formula(f.right, m, v)
        return m.res[m.res[b][a]][a]
    if isinstance(f, SImp):
        a = eval_formula(f.left, m, v)
        b = eval_formula(f.right, m, v)
        return m.res[a][m.add[a][b]]
    if isinstance(f, Nor):
        a = eval_formula(f.left, m, v)
        b = eval_formula(f.right, m, v)
        if m.top is None:
            raise AlgebraError("!! needs a bounded algebra")
        return m.add[m.res[a][m.top]][m.res[b][a]]
    raise AlgebraError(f"cannot evaluate {f!r}")


def _assignments(names: list[str], n: int):
    for vec in product(range(n), repeat=len(names)):
        yield dict(zip(names, vec))


def seq_holds(s: Sequent, m: FiniteAlgebra, v: Assignment) -> bool:
    acc = 0
    for f in s.context:
        acc = m.add[acc][eval_formula(f, m, v)]
    return m.geq(acc, eval_formula(s.goal, m, v))


def valid(s: Sequent, m: FiniteAlgebra) -> bool:
    """True iff the tensored context dominates the goal for all assignments."""
    names = sorted(set().union(*(variables(f) for f in s.context), variables(s.goal)))
    return all(seq_holds(s, m, v) for v in _assignments(names, m.size))


def falsifying_assignment(s: Sequent, m: FiniteAlgebra) -> Assignment | None:
    names = sorted(set().union(*(variables(f) for f in s.context), variables(s.goal)))
    for v in _assignments(names, m.size):
        if not seq_holds(s, m, v):
            return v
    return None


# Enumeration up to isomorphism


def _posets_with_bottom(n: int):
    """Down-set matrices leq[i][j] ('i <= j') with 0 the bottom and the
    numeric order a linear extension."""

    def extend(leq: list[list[bool]], j: int):
        if j == n:
            yield tuple(tuple(row) for row in leq)
            return
        below = list(range(j))
        for mask in range(1 << len(below)):
            down = [i for i in below if mask >> i & 1]
            if 0 not in down:
                continue
            ok = True
            for i in down:
                for k in range(i):
                    if leq[k][i] and k not in down:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            for i in down:
                leq[i][j] = True
            yield from extend(leq, j + 1)
            for i in down:
                leq[i][j] = False

    if n == 1:
        yield ((True,),)
        return
    leq = [[i == j for j in range(n)] for i in range(n)]
    yield from extend(leq, 1)


def _chain_poset(n: int):
    return tuple(tuple(i <= j for j in range(n)) for i in range(n))


def _complete_tables(n: int, leq) -> list[tuple]:
    """Backtrack over commutative monotone integral add tables for a fixed
    order, deriving residuals; returns completed (add, res, top) triples."""
    geq = [[leq[j][i] for j in range(n)] for i in range(n)]
    ups = [frozenset(j for j in range(n) if geq[j][i]) for i in range(n)]
    add = [[0] * n for _ in range(n)]
    for a in range(n):
        add[0][a] = add[a][0] = a
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    out: list[tuple] = []

    def candidates(i, j):
        # a+b must dominate both arguments and respect monotonicity against
        # already-filled cells.
        cand = ups[i] & ups[j]
        lo: set[int] = set()
        hi: set[int] = set()
        for x in range(1, n):
            for y in range(x, n):
                if (x, y) >= (i, j) or (x == i and y == j):
                    continue
                v = add[x][y]
                if leq[x][i] and leq[y][j]:
                    lo.add(v)
                if leq[i][x] and leq[j][y]:
                    hi.add(v)
        return [
            c
            for c in sorted(cand)
            if all(geq[c][v] for v in lo) and all(leq[c][v] for v in hi)
        ]

    def assoc_ok(i, j):
        # check triples whose intermediate sums are all available
        for x in range(n):
            for y in range(n):
                xy = add[x][y]
                for z in range(n):
                    yz = add[y][z]
                    a1 = add[xy][z]
                    a2 = add[x][yz]
                    if _filled(x, y) and _filled(xy, z) and _filled(y, z) and _filled(x, yz):
                        if a1 != a2:
                            return False
        return True

    filled = [[True if (i == 0 or j == 0) else False for j in range(n)] for i in range(n)]

    def _filled(i, j):
        return filled[i][j]

    def place(k):
        if k == len(cells):
            res = _derive_res(n, add, leq, geq)
            if res is None:
                return
            tops = [t for t in range(n) if all(geq[t][a] for a in range(n))]
            out.append(
                (
                    tuple(tuple(row) for row in add),
                    res,
                    tops[0] if tops else None,
                )
            )
            return
        i, j = cells[k]
        for c in candidates(i, j):
            add[i][j] = add[j][i] = c
            filled[i][j] = filled[j][i] = True
            if assoc_ok(i, j):
                place(k + 1)
            filled[i][j] = filled[j][i] = False
        add[i][j] = add[j][i] = 0

    place(0)
    return out


def _derive_res(n, add, leq, geq):
    res = [[0] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            sat = [a for a in range(n) if geq[add[a][b]][c]]
            if not sat:
                return None
            least = [a for a in sat if all(leq[a][x] for x in sat)]
            if not least:
                return None
            res[b][c] = least[0]
    return tuple(tuple(row) for row in res)


def canonical_key(m: FiniteAlgebra) -> tuple:
    """Lexicographically minimal flattened (add, res, top) over carrier
    permutations fixing 0."""
    n = m.size
    best = None
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        add = tuple(
            tuple(inv[m.add[p[i]][p[j]]] for j in range(n)) for i in range(n)
        )
        res = tuple(
            tuple(inv[m.res[p[i]][p[j]]] for j in range(n)) for i in range(n)
        )
        top = inv[m.top] if m.top is not None else None
        key = (add, res, -1 if top is None else top)
        if best is None or key < best:
            best = key
    return best


_ENUM_CACHE: dict[tuple[int, bool], list[FiniteAlgebra]] = {}


def _pocrims_of_size(n: int, chains_only: bool) -> list[FiniteAlgebra]:
    key = (n, chains_only)
    if key in _ENUM_CACHE:
        return _ENUM_CACHE[key]
    found: dict[tuple, FiniteAlgebra] = {}
    posets = [_chain_poset(n)] if chains_only else list(_posets_with_bottom(n))
    for leq in posets:
        is_chain = leq == _chain_poset(n)
        if not chains_only and is_chain:
            continue
        for add, res, top in _complete_tables(n, leq):
            alg = FiniteAlgebra(n, add, res, top)
            if "pocrim" not in check_class(alg).flags:
                continue
            k = canonical_key(alg)
            if k not in found:
                found[k] = alg
    result = [found[k] for k in sorted(found)]
    _ENUM_CACHE[key] = result
    return result


def enumerate_algebras(
    size_max: int,
    required: frozenset[str] | set[str] = frozenset(("pocrim",)),
    forbidden: frozenset[str] | set[str] = frozenset(),
):
    """One representative per isomorphism class, sizes ascending, chains
    first within each size, canonical order within each block."""
    required = frozenset(required) | {"pocrim"}
    forbidden = frozenset(forbidden)
    for n in range(1, size_max + 1):
        block = _pocrims_of_size(n, True) + (
            _pocrims_of_size(n, False) if n >= 3 else []
        )
        for alg in block:
            flags = check_class(alg).flags
            if required <= flags and not (forbidden & flags):
                yield alg


def theory_class(t: TheoryId) -> frozenset[str]:
    req = {"pocrim"}
    if t.base == "lukasiewicz":
        req.add("hoop")
    elif t.base == "full":
        req.add("idempotent")
    if t.level in ("intuitionistic", "classical"):
        req.add("bounded")
    if t.level == "classical":
        req.add("involutive")
    return frozenset(req)


def find_countermodel(
    s: Sequent, t: TheoryId, size_max: int
) -> tuple[FiniteAlgebra, Assignment] | None:
    """First algebra of t's class (by the enumeration order) falsifying s."""
    needs_top = t.level != "minimal"
    for alg in enumerate_algebras(size_max, theory_class(t)):
        if needs_top and alg.top is None:
            continue
        v = falsifying_assignment(s, alg)
        if v is not None:
            return alg, v
    return None


# Plain-text algebra files: `size n`, optional `top i`, `add:` rows, `res:` rows.


def format_algebra(m: FiniteAlgebra) -> str:
    lines = [f"size {m.size}"]
    if m.top is not None:
        lines.append(f"top {m.top}")
    lines.append("add:")
    lines.extend(" ".join(str(x) for x in row) for row in m.add)
    lines.append("res:")
    lines.extend(" ".join(str(x) for x in row) for row in m.res)
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> FiniteAlgebra:
    size = None
    top = None
    add: list[tuple[int, ...]] = []
    res: list[tuple[int, ...]] = []
    target = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("size"):
            size = int(line.split()[1])
        elif line.startswith("top"):
            top = int(line.split()[1])
        elif line == "add:":
            target = add
        elif line == "res:":
            target = res
        else:
            if target is None:
                raise FormulaError(f"unexpected algebra line {line!r}")
            target.append(tuple(int(x) for x in line.split()))
    if size is None or len(add) != size or len(res) != size:
        raise FormulaError("malformed algebra file")
    return FiniteAlgebra(size, tuple(add), tuple(res), top)
