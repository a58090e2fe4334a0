"""hooplog: a proof workbench for affine and Lukasiewicz logics."""

from .syntax import (
    Formula,
    Var,
    Imp,
    Tensor,
    Neg,
    WConj,
    SDisj,
    SImp,
    Nor,
    ONE,
    ZERO,
    parse_formula,
    format_formula,
    expand_derived,
    substitute,
)
from .theories import (
    TheoryId,
    theory_by_name,
    ALL_THEORIES,
    ALm,
    ALi,
    ALc,
    LLm,
    LLi,
    LLc,
    ML,
    IL,
    BL,
)
from .sequent import (
    Sequent,
    ProofTree,
    check_proof,
    weaken,
    bounded_prove,
    parse_sequent,
)
from .eqengine import (
    EqScript,
    LemmaEntry,
    LemmaRegistry,
    ac_normalize,
    apply_rewrite,
    check_script,
    parse_script,
)
from .hilbert import (
    check_derivation,
    curry_sequent,
    hilbert_to_sequent,
    rose_rosser_embed,
    sequent_to_hilbert,
)
from .algebra import (
    FiniteAlgebra,
    check_class,
    enumerate_algebras,
    eval_formula,
    find_countermodel,
    lukasiewicz_chain,
    valid,
)
from .translate import check_dns, translate
from .corpus import generate_k_contradiction, run_corpus

__all__ = [
    "Formula",
    "Var",
    "Imp",
    "Tensor",
    "Neg",
    "WConj",
    "SDisj",
    "SImp",
    "Nor",
    "ONE",
    "ZERO",
    "parse_formula",
    "format_formula",
    "expand_derived",
    "substitute",
    "TheoryId",
    "theory_by_name",
    "ALL_THEORIES",
    "ALm",
    "ALi",
    "ALc",
    "LLm",
    "LLi",
    "LLc",
    "ML",
    "IL",
    "BL",
    "Sequent",
    "ProofTree",
    "check_proof",
    "weaken",
    "bounded_prove",
    "parse_sequent",
    "EqScript",
    "LemmaEntry",
    "LemmaRegistry",
    "ac_normalize",
    "apply_rewrite",
    "check_script",
    "parse_script",
    "check_derivation",
    "curry_sequent",
    "hilbert_to_sequent",
    "rose_rosser_embed",
    "sequent_to_hilbert",
    "FiniteAlgebra",
    "check_class",
    "enumerate_algebras",
    "eval_formula",
    "find_countermodel",
    "lukasiewicz_chain",
    "valid",
    "check_dns",
    "translate",
    "generate_k_contradiction",
    "run_corpus",
]
