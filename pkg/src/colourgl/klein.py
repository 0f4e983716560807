"""Klein operators B_k = (-1)^{H_k} and the lift E_ij -> colour generators.

Everything here is representation-level: B_k only exists as the diagonal
sign matrix it induces on an integer-weight basis, which is its own
inverse.  Left and right placement of the Klein factors is still kept
literally, since left and right multiplication by a diagonal differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Mapping

from .exact import ExactMatrix, NotAnEigencolumn, diagonal_from
from .grading import GradedSignature, classify_region
from .report import VerificationReport


@dataclass(frozen=True, eq=False)
class WeightDiagonalRep:
    """A gl(m|n) representation on a weight basis.

    ``weights[v - 1]`` is the integer weight (w_1, ..., w_r) of basis vector
    v, meaning ρ(E_ii) e_v = w_i e_v.  Only integrality is enforced on
    construction; :meth:`weight_errors` checks the diagonal data against
    the matrices so that deliberately inconsistent reps can still be built
    as negative controls.
    """

    label: str
    m: int
    n: int
    weights: tuple[tuple[int, ...], ...]
    generators: Mapping[tuple[int, int], ExactMatrix]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        r = self.m + self.n
        object.__setattr__(self, "weights", tuple(tuple(w) for w in self.weights))
        for v, w in enumerate(self.weights, start=1):
            if len(w) != r:
                raise ValueError(f"weight of basis vector {v} has length {len(w)}, expected {r}")
            for x in w:
                if isinstance(x, bool) or not isinstance(x, int):
                    if isinstance(x, Fraction) and x.denominator == 1:
                        continue
                    raise ValueError(f"non-integer weight {x!r} on basis vector {v}")
        object.__setattr__(self, "weights", tuple(tuple(int(x) for x in w) for w in self.weights))
        missing = [(i, j) for i, j in product(range(1, r + 1), repeat=2) if (i, j) not in self.generators]
        if missing:
            raise ValueError(f"rep {self.label!r} lacks generators {missing[:4]}...")
        for mat in self.generators.values():
            if mat.shape != (self.dim, self.dim):
                raise ValueError(f"generator of shape {mat.shape} in a rep of dimension {self.dim}")

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def r(self) -> int:
        return self.m + self.n

    @property
    def super_sig(self) -> GradedSignature:
        return GradedSignature(self.m, 0, self.n, 0)

    def generator(self, i: int, j: int) -> ExactMatrix:
        return self.generators[i, j]

    def vector_degree(self, v: int) -> int:
        """Z2 degree of basis vector v: parity of its odd-index weights."""
        return sum(self.weights[v - 1][self.m:]) & 1

    def weight_errors(self) -> list[tuple[int, int]]:
        """(i, v) pairs where ρ(E_ii) e_v differs from w_i e_v."""
        bad = []
        for i in range(1, self.r + 1):
            mat = self.generators[i, i]
            for v in range(1, self.dim + 1):
                try:
                    ok = mat.eigenvalue_on_basis_vector(v) == self.weights[v - 1][i - 1]
                except NotAnEigencolumn:
                    ok = False
                if not ok:
                    bad.append((i, v))
        return bad

    def with_generator(self, i: int, j: int, mat: ExactMatrix, label: str | None = None) -> "WeightDiagonalRep":
        gens = dict(self.generators)
        gens[i, j] = mat
        return replace(self, generators=gens, label=label or self.label, _cache={})

    def with_weights(self, weights, label: str | None = None) -> "WeightDiagonalRep":
        return replace(self, weights=tuple(weights), label=label or self.label, _cache={})

    def check_signature(self, sig: GradedSignature) -> None:
        if (sig.m, sig.n) != (self.m, self.n):
            raise ValueError(f"signature {sig} needs a gl({sig.m}|{sig.n}) rep, got gl({self.m}|{self.n})")


def b_matrix(rep: WeightDiagonalRep, k: int) -> ExactMatrix:
    """Diagonal of (-1)^{w_1 + ... + w_k}; B_0 is the identity."""
    if not 0 <= k <= rep.r:
        raise IndexError(f"Klein index {k} outside [0, {rep.r}]")
    key = ("B", k)
    cached = rep._cache.get(key)
    if cached is None:
        cached = diagonal_from(-1 if sum(w[:k]) & 1 else 1 for w in rep.weights)
        rep._cache[key] = cached
    return cached


def b_sign(sig: GradedSignature, k: int, i: int, j: int) -> int:
    """s with B_k E_ij = s E_ij B_k: -1 exactly when k separates i from j."""
    if k != 0:
        sig.check_index(k)
    sig.check_index(i)
    sig.check_index(j)
    return -1 if (i <= k < j or j <= k < i) else 1


def realise(rep: WeightDiagonalRep, sig: GradedSignature, i: int, j: int) -> ExactMatrix:
    """Colour generator with indices (i, j) built from ρ(E_ij) and Klein factors."""
    rep.check_signature(sig)
    key = ("lift", sig, i, j)
    cached = rep._cache.get(key)
    if cached is not None:
        return cached
    region = classify_region(sig, i, j)
    e = rep.generator(i, j)
    b1 = b_matrix(rep, sig.m1)
    bm = b_matrix(rep, sig.m)
    if region == "a":
        out = e
    elif region == "b":
        out = e @ b1
    elif region == "c":
        out = e @ bm
    elif region == "d":
        out = e @ b1 @ bm
    elif region == "e":
        out = b1 @ e
    elif region == "f":
        out = bm @ e
    else:
        out = b1 @ bm @ e
    rep._cache[key] = out
    return out


def verify_b_commutation(rep: WeightDiagonalRep, label: str | None = None) -> VerificationReport:
    """B_k ρ(E_ij) - b_sign ρ(E_ij) B_k = 0 for all k in [1, r] and all (i, j)."""
    sig = rep.super_sig
    report = VerificationReport("klein", label or f"{rep.m}|{rep.n}", rep.label)
    idx = sig.indices()
    for k in idx:
        bk = b_matrix(rep, k)
        for i, j in product(idx, repeat=2):
            e = rep.generator(i, j)
            diff = (bk @ e).add_scaled(e @ bk, -b_sign(sig, k, i, j))
            report.checked += 1
            if not diff.is_zero():
                report.record((k, i, j), diff)
    return report.finalize()
