"""The Z2-graded Lie superalgebra gl(m|n) on its standard basis E_ij."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Mapping

from .exact import ExactMatrix, graded_bracket
from .grading import GradedSignature, pair_degree
from .report import VerificationReport

Basis = tuple[int, int]
LinearCombination = dict[Basis, Fraction]
Structure = Callable[[GradedSignature, int, int, int, int], LinearCombination]


def combine(terms) -> LinearCombination:
    """Sum (coeff, basis) pairs, dropping zero coefficients."""
    out: LinearCombination = {}
    for coeff, basis in terms:
        total = out.get(basis, 0) + coeff
        if total:
            out[basis] = Fraction(total)
        else:
            out.pop(basis, None)
    return out


def bracket_form(i: int, j: int, k: int, l: int, sign: int) -> LinearCombination:
    """delta_jk E_il - (-1)**sign delta_il E_kj."""
    terms = []
    if j == k:
        terms.append((1, (i, l)))
    if i == l:
        terms.append((1 if sign else -1, (k, j)))
    return combine(terms)


def super_sign(sig: GradedSignature, i: int, j: int, k: int, l: int) -> int:
    return pair_degree(sig, i, j) & pair_degree(sig, k, l)


def super_structure(sig: GradedSignature, i: int, j: int, k: int, l: int) -> LinearCombination:
    for x in (i, j, k, l):
        sig.check_index(x)
    return bracket_form(i, j, k, l, super_sign(sig, i, j, k, l))


def h_element(sig: GradedSignature, k: int) -> LinearCombination:
    """H_k = E_11 + ... + E_kk."""
    sig.check_index(k)
    return {(i, i): Fraction(1) for i in range(1, k + 1)}


def h_bracket_sign(k: int, i: int, j: int) -> int:
    """s with [H_k, E_ij] = s E_ij."""
    if i <= k < j:
        return 1
    if j <= k < i:
        return -1
    return 0


def lc_bracket(structure: Structure, sig: GradedSignature, x: Mapping, y: Mapping) -> LinearCombination:
    """Bilinear extension of a basis bracket."""
    terms = []
    for (i, j), a in x.items():
        for (k, l), b in y.items():
            for basis, c in structure(sig, i, j, k, l).items():
                terms.append((a * b * c, basis))
    return combine(terms)


def lc_scale(x: Mapping, c) -> LinearCombination:
    return combine((c * v, b) for b, v in x.items())


def lc_add(*parts: Mapping) -> LinearCombination:
    return combine((v, b) for part in parts for b, v in part.items())


def jacobi_defect(
    structure: Structure,
    degree_dot: Callable[[Basis, Basis], int],
    sig: GradedSignature,
    x: Basis,
    y: Basis,
    z: Basis,
) -> LinearCombination:
    """[[x,y],z] - [x,[y,z]] + (-1)^{x.y} [y,[x,z]]; empty when Jacobi holds."""
    bx, by, bz = ({x: Fraction(1)}, {y: Fraction(1)}, {z: Fraction(1)})
    left = lc_bracket(structure, sig, lc_bracket(structure, sig, bx, by), bz)
    mid = lc_bracket(structure, sig, bx, lc_bracket(structure, sig, by, bz))
    right = lc_bracket(structure, sig, by, lc_bracket(structure, sig, bx, bz))
    sign = -1 if degree_dot(x, y) else 1
    return lc_add(left, lc_scale(mid, -1), lc_scale(right, sign))


def apply_rep(generator: Callable[[int, int], ExactMatrix], size: int, x: Mapping) -> ExactMatrix:
    out = ExactMatrix.zeros(size)
    for (p, q), c in sorted(x.items()):
        out = out.add_scaled(generator(p, q), c)
    return out


def verify_super_relations(rep, label: str | None = None) -> VerificationReport:
    """Check ρ(E_ij)ρ(E_kl) ∓ ρ(E_kl)ρ(E_ij) = ρ(⟦E_ij, E_kl⟧) for every quadruple."""
    sig = rep.super_sig
    report = VerificationReport("super", label or f"{sig.m}|{sig.n}", rep.label)
    idx = sig.indices()
    for i, j, k, l in product(idx, repeat=4):
        lhs = graded_bracket(rep.generator(i, j), rep.generator(k, l), super_sign(sig, i, j, k, l))
        rhs = apply_rep(rep.generator, rep.dim, super_structure(sig, i, j, k, l))
        report.checked += 1
        if lhs != rhs:
            report.record((i, j, k, l), lhs - rhs)
    return report.finalize()
