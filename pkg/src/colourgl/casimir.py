"""Quadratic Casimir candidates for the colour algebra and a brute-force centrality test.

Three sign conventions for sum_ij (-1)^e(i,j) E~_ij E~_ji are offered; the
centrality sweep decides which of them is actually central on a given
representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exact import ExactMatrix, format_scalar
from .grading import GradedSignature, dot22, pair_degree22, z22_degree
from .klein import WeightDiagonalRep, realise
from .report import VerificationReport

VARIANTS = ("paper-literal", "column-degree", "row-degree")


def casimir_exponent(sig: GradedSignature, variant: str, i: int, j: int) -> int:
    if variant == "paper-literal":
        d = pair_degree22(sig, i, j)
    elif variant == "column-degree":
        d = z22_degree(sig, j)
    elif variant == "row-degree":
        d = z22_degree(sig, i)
    else:
        raise ValueError(f"unknown Casimir variant {variant!r}; choose from {', '.join(VARIANTS)}")
    return dot22(d, d)


def casimir_matrix(rep: WeightDiagonalRep, sig: GradedSignature, variant: str) -> ExactMatrix:
    rep.check_signature(sig)
    out = ExactMatrix.zeros(rep.dim)
    for i, j in product(sig.indices(), repeat=2):
        term = realise(rep, sig, i, j) @ realise(rep, sig, j, i)
        out = out.add_scaled(term, -1 if casimir_exponent(sig, variant, i, j) else 1)
    return out


def centrality_report(rep: WeightDiagonalRep, sig: GradedSignature, variant: str, casimir: ExactMatrix | None = None) -> VerificationReport:
    """Generators (k, l) whose lift fails to commute with the Casimir matrix."""
    c = casimir_matrix(rep, sig, variant) if casimir is None else casimir
    report = VerificationReport(f"casimir:{variant}", str(sig), rep.label)
    for k, l in product(sig.indices(), repeat=2):
        g = realise(rep, sig, k, l)
        diff = (c @ g) - (g @ c)
        report.checked += 1
        if not diff.is_zero():
            report.record((k, l), diff)
    return report.finalize()


def hw_eigenvalue(sig: GradedSignature, top_row: Sequence[int]) -> Fraction:
    """Casimir eigenvalue on the highest weight module with the given top row."""
    if len(top_row) != sig.r:
        raise ValueError(f"top row must have length {sig.r}, got {len(top_row)}")
    m, n = sig.m, sig.n
    even = sum(mu * (mu + m - n - 2 * i + 1) for i, mu in enumerate(top_row[:m], start=1))
    odd = sum(mu * (mu + m + n - 2 * k + 1) for k, mu in enumerate(top_row[m:], start=1))
    return Fraction(even - odd)


@dataclass(frozen=True)
class CasimirSummary:
    sig: GradedSignature
    variant: str
    rep: str
    central: bool
    scalar: Fraction | None
    hw_formula: Fraction
    report: VerificationReport

    def to_json(self) -> dict:
        return {
            "sig": str(self.sig),
            "variant": self.variant,
            "rep": self.rep,
            "central": self.central,
            "scalar": None if self.scalar is None else format_scalar(self.scalar),
            "hw_formula": format_scalar(self.hw_formula),
            "non_commuting": [list(v.indices) for v in self.report.violations],
        }


def casimir_summary(rep: WeightDiagonalRep, sig: GradedSignature, variant: str) -> CasimirSummary:
    """Centrality verdict plus scalar value (when the matrix is c * I) and the highest-weight formula for λ=(1)."""
    c = casimir_matrix(rep, sig, variant)
    report = centrality_report(rep, sig, variant, casimir=c)
    top = (1,) + (0,) * (sig.r - 1)
    return CasimirSummary(sig, variant, rep.label, report.passed, c.scalar_value(), hw_eigenvalue(sig, top), report)
