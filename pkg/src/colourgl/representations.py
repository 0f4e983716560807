"""Concrete weight-basis representations and Gelfand-Zetlin sign data.

The defining representation and its graded tensor powers are built as
explicit sparse matrices.  GZ patterns are modelled only as far as the
colour lift needs them: their shape and row sums.  Admissibility of a
pattern for a given highest weight is the caller's business.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Protocol, Sequence

from .exact import ExactMatrix, as_scalar, elementary
from .grading import GradedSignature, pair_degree
from .klein import WeightDiagonalRep

MAX_TENSOR_DIM = 4096


def defining_rep(sig: GradedSignature) -> WeightDiagonalRep:
    r = sig.r
    gens = {(i, j): elementary(r, i, j) for i, j in product(range(1, r + 1), repeat=2)}
    weights = [tuple(int(k == v) for k in range(1, r + 1)) for v in range(1, r + 1)]
    return WeightDiagonalRep("defining", sig.m, sig.n, weights, gens)


def graded_tensor_product(a: WeightDiagonalRep, b: WeightDiagonalRep, label: str | None = None) -> WeightDiagonalRep:
    """a ⊗ b with E_ij acting as ρ_a(E_ij) ⊗ 1 + (-1)^{d_ij d(x)} 1 ⊗ ρ_b(E_ij).

    Basis e_x ⊗ e_y is ordered lexicographically, i.e. it has index
    (x - 1) * dim(b) + y.
    """
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError("tensor factors must be representations of the same gl(m|n)")
    if a.dim * b.dim > MAX_TENSOR_DIM:
        raise ValueError(f"tensor product dimension {a.dim * b.dim} exceeds {MAX_TENSOR_DIM}")
    nb = b.dim
    sig = a.super_sig
    a_odd = [a.vector_degree(x) for x in range(1, a.dim + 1)]
    gens = {}
    for i, j in product(sig.indices(), repeat=2):
        odd = pair_degree(sig, i, j)
        entries = []
        for x, x2, c in a.generator(i, j).entries():
            for y in range(1, nb + 1):
                entries.append(((x - 1) * nb + y, (x2 - 1) * nb + y, c))
        ebj = list(b.generator(i, j).entries())
        for x in range(1, a.dim + 1):
            sign = -1 if (odd and a_odd[x - 1]) else 1
            base = (x - 1) * nb
            for y, y2, c in ebj:
                entries.append((base + y, base + y2, sign * c))
        gens[i, j] = ExactMatrix(a.dim * nb, a.dim * nb, entries)
    weights = [tuple(p + q for p, q in zip(wa, wb)) for wa in a.weights for wb in b.weights]
    return WeightDiagonalRep(label or f"{a.label}*{b.label}", a.m, a.n, weights, gens)


def graded_tensor_square(rep: WeightDiagonalRep) -> WeightDiagonalRep:
    return graded_tensor_product(rep, rep, label="tensor:2" if rep.label == "defining" else None)


def graded_tensor_power(rep: WeightDiagonalRep, k: int) -> WeightDiagonalRep:
    if k < 1:
        raise ValueError("tensor power must be at least 1")
    if rep.dim ** k > MAX_TENSOR_DIM:
        raise ValueError(f"tensor power dimension {rep.dim}**{k} exceeds {MAX_TENSOR_DIM}")
    out = rep
    for p in range(2, k + 1):
        out = graded_tensor_product(out, rep, label=f"tensor:{p}" if rep.label == "defining" else None)
    return out


def build_rep(sig: GradedSignature, spec: str) -> WeightDiagonalRep:
    """Parse 'defining' or 'tensor:k'."""
    base = defining_rep(sig)
    if spec == "defining":
        return base
    if spec.startswith("tensor:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad rep spec {spec!r}") from None
        if not 1 <= k <= 3:
            raise ValueError("tensor power must be between 1 and 3")
        return graded_tensor_power(base, k)
    raise ValueError(f"unknown rep spec {spec!r}; expected 'defining' or 'tensor:k'")


# -- Gelfand-Zetlin patterns ---------------------------------------------


@dataclass(frozen=True)
class GZPattern:
    """Triangular array, top row (length r) first, bottom row (length 1) last."""

    sig: GradedSignature
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        r = self.sig.r
        if len(rows) != r:
            raise ValueError(f"pattern needs {r} rows, got {len(rows)}")
        for t, row in enumerate(rows):
            if len(row) != r - t:
                raise ValueError(f"row {t + 1} from the top has length {len(row)}, expected {r - t}")
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                    raise ValueError(f"pattern entries must be non-negative integers, got {x!r}")

    def row(self, i: int) -> tuple[int, ...]:
        """Row i of length i (1 <= i <= r)."""
        self.sig.check_index(i)
        return self.rows[self.sig.r - i]

    def row_sum(self, i: int) -> int:
        if i == 0:
            return 0
        return sum(self.row(i))

    @property
    def top_row(self) -> tuple[int, ...]:
        return self.rows[0]

    def to_json(self) -> dict:
        return {"sig": str(self.sig), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "GZPattern":
        return cls(GradedSignature.parse(obj["sig"]), tuple(tuple(row) for row in obj["rows"]))


def gz_row_sums(p: GZPattern) -> tuple[int, ...]:
    """(|μ_1|, ..., |μ_r|)."""
    return tuple(p.row_sum(i) for i in p.sig.indices())


def gz_cartan_eigenvalue(p: GZPattern, i: int) -> int:
    return p.row_sum(i) - p.row_sum(i - 1)


def gz_b_sign(p: GZPattern, k: int) -> int:
    return -1 if p.row_sum(k) & 1 else 1


def colour_diagonal_action(p: GZPattern, i: int) -> int:
    # the colour Cartan generators act exactly as the gl(m|n) ones
    return gz_cartan_eigenvalue(p, i)


def row_sum_pattern(sig: GradedSignature, row_sums: Sequence[int]) -> GZPattern:
    """Pattern whose row i is (|μ_i|, 0, ..., 0).

    For the defining representation this is exactly the λ=(1) GZ label.
    """
    r = sig.r
    if len(row_sums) != r:
        raise ValueError(f"need {r} row sums")
    return GZPattern(sig, tuple((row_sums[i - 1],) + (0,) * (i - 1) for i in range(r, 0, -1)))


def defining_pattern(sig: GradedSignature, k: int) -> GZPattern:
    """λ=(1) pattern labelling e_k: |μ_i| = 1 for i >= k, else 0."""
    sig.check_index(k)
    return row_sum_pattern(sig, [int(i >= k) for i in sig.indices()])


def _chevalley_index(sig: GradedSignature, generator: tuple[int, int]) -> tuple[int, bool]:
    i, j = generator
    if not (1 <= i <= sig.r and 1 <= j <= sig.r) or abs(i - j) != 1:
        raise ValueError(f"{generator} is not a Chevalley generator of a rank-{sig.r} algebra")
    return min(i, j), i < j


def sign_lift_factor(sig: GradedSignature, generator: tuple[int, int], mu: GZPattern, mu_prime: GZPattern | None = None) -> int:
    """Sign relating (μ'| colour E |μ) to (μ'| E |μ) for a Chevalley generator.

    The sign is read from the pattern the Klein operator sees: the ket μ
    for raising generators, the bra μ' for lowering ones.  Without
    ``mu_prime`` the ket is used in both cases, which agrees with the Klein
    lift except for lowering generators at i = m when m2 = 0 and at
    i = m + n1 when n1 = 0.
    """
    s, raising = _chevalley_index(sig, generator)
    seen = mu if raising or mu_prime is None else mu_prime
    factor = 1
    if s == sig.m:
        factor *= gz_b_sign(seen, sig.m1)
    if s == sig.m + sig.n1:
        factor *= gz_b_sign(seen, sig.m)
    return factor


def sign_lift_matrix_element(
    sig: GradedSignature,
    generator: tuple[int, int],
    raw,
    mu: GZPattern,
    mu_prime: GZPattern | None = None,
) -> Fraction:
    return as_scalar(raw) * sign_lift_factor(sig, generator, mu, mu_prime)


class MatrixElementProvider(Protocol):
    """Source of gl(m|n) Chevalley matrix elements on a GZ-labelled basis."""

    sig: GradedSignature

    def patterns(self) -> list[GZPattern]: ...

    def matrix_element(self, mu_prime: GZPattern, generator: tuple[int, int], mu: GZPattern) -> Fraction: ...

    def diagonal(self, mu: GZPattern, i: int) -> int: ...


class WeightRepProvider:
    """Matrix elements read off a weight-basis representation.

    Basis vector v is labelled by :func:`row_sum_pattern` of its weight.
    On the defining representation these labels are the λ=(1) GZ
    patterns; on larger reps they only carry row sums and may repeat, so
    lookups go through basis positions rather than patterns.
    """

    def __init__(self, rep: WeightDiagonalRep, sig: GradedSignature):
        rep.check_signature(sig)
        self.rep = rep
        self.sig = sig
        self._patterns = []
        for w in rep.weights:
            sums, total = [], 0
            for x in w:
                total += x
                sums.append(total)
            self._patterns.append(row_sum_pattern(sig, sums))

    def patterns(self) -> list[GZPattern]:
        return list(self._patterns)

    def pattern(self, v: int) -> GZPattern:
        return self._patterns[v - 1]

    def element_at(self, u: int, generator: tuple[int, int], v: int) -> Fraction:
        return self.rep.generator(*generator)[u, v]

    def matrix_element(self, mu_prime: GZPattern, generator: tuple[int, int], mu: GZPattern) -> Fraction:
        u = self._patterns.index(mu_prime) + 1
        v = self._patterns.index(mu) + 1
        return self.element_at(u, generator, v)

    def diagonal(self, mu: GZPattern, i: int) -> int:
        return gz_cartan_eigenvalue(mu, i)

    def lifted_chevalley(self, generator: tuple[int, int], use_bra: bool = True) -> ExactMatrix:
        """Colour Chevalley matrix assembled entrywise by the sign rule."""
        mat = self.rep.generator(*generator)
        entries = []
        for u, v, raw in mat.entries():
            bra = self.pattern(u) if use_bra else None
            entries.append((u, v, sign_lift_matrix_element(self.sig, generator, raw, self.pattern(v), bra)))
        return ExactMatrix(mat.rows, mat.cols, entries)
