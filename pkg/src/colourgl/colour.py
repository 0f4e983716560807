"""The Z2xZ2-graded algebra gl(m1,m2|n1,n2) and the check that the Klein lift realises it."""

from __future__ import annotations

from itertools import product

from .exact import graded_bracket
from .grading import GradedSignature, dot22, pair_degree22
from .klein import WeightDiagonalRep, realise
from .report import VerificationReport
from .superalg import LinearCombination, apply_rep, bracket_form, super_sign


def colour_sign(sig: GradedSignature, i: int, j: int, k: int, l: int) -> int:
    """Exponent d~_ij . d~_kl selecting commutator (0) or anticommutator (1)."""
    return dot22(pair_degree22(sig, i, j), pair_degree22(sig, k, l))


def colour_structure(sig: GradedSignature, i: int, j: int, k: int, l: int) -> LinearCombination:
    for x in (i, j, k, l):
        sig.check_index(x)
    return bracket_form(i, j, k, l, colour_sign(sig, i, j, k, l))


def bracket_flip_table(sig: GradedSignature) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Quadruples where gl(m1,m2|n1,n2) and gl(m|n) disagree on commutator vs anticommutator."""
    idx = sig.indices()
    return [
        ((i, j), (k, l))
        for i, j, k, l in product(idx, repeat=4)
        if colour_sign(sig, i, j, k, l) != super_sign(sig, i, j, k, l)
    ]


def verify_colour_relations(
    rep: WeightDiagonalRep,
    sig: GradedSignature,
    quadruples=None,
) -> VerificationReport:
    """Sweep the colour enveloping relations over lifted generators.

    ``quadruples`` restricts the sweep to an iterable of (i, j, k, l);
    by default all r**4 are checked.
    """
    rep.check_signature(sig)
    report = VerificationReport("colour", str(sig), rep.label)
    if quadruples is None:
        quadruples = product(sig.indices(), repeat=4)

    def lift(p: int, q: int):
        return realise(rep, sig, p, q)

    for i, j, k, l in quadruples:
        lhs = graded_bracket(lift(i, j), lift(k, l), colour_sign(sig, i, j, k, l))
        rhs = apply_rep(lift, rep.dim, colour_structure(sig, i, j, k, l))
        report.checked += 1
        if lhs != rhs:
            report.record((i, j, k, l), lhs - rhs)
    return report.finalize()
