"""Block signatures and the two gradings of gl(m1,m2|n1,n2).

Indices are 1-based everywhere.  A signature splits [1, r] into four
consecutive blocks of widths m1, m2, n1, n2; any of them may be empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

Degree22 = tuple[int, int]

REGIONS = ("a", "b", "c", "d", "e", "f", "g")

_SIG_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*\|\s*(\d+)\s*,\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class GradedSignature:
    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self) -> None:
        for name in ("m1", "m2", "n1", "n2"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
        if self.r < 1:
            raise ValueError("signature must have at least one nonempty block")

    @property
    def m(self) -> int:
        return self.m1 + self.m2

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def r(self) -> int:
        return self.m1 + self.m2 + self.n1 + self.n2

    @classmethod
    def parse(cls, text: str) -> "GradedSignature":
        """Parse ``"m1,m2|n1,n2"``."""
        match = _SIG_RE.match(text)
        if match is None:
            raise ValueError(f"cannot parse signature {text!r}; expected 'm1,m2|n1,n2'")
        return cls(*(int(g) for g in match.groups()))

    def __str__(self) -> str:
        return f"{self.m1},{self.m2}|{self.n1},{self.n2}"

    def indices(self) -> range:
        return range(1, self.r + 1)

    def check_index(self, i: int) -> int:
        if not 1 <= i <= self.r:
            raise IndexError(f"index {i} outside [1, {self.r}] for signature {self}")
        return i


def all_signatures(max_rank: int, min_rank: int = 1) -> Iterator[GradedSignature]:
    """Every 4-composition (zero parts allowed) with min_rank <= r <= max_rank."""
    for r in range(max(min_rank, 1), max_rank + 1):
        for m1 in range(r + 1):
            for m2 in range(r - m1 + 1):
                for n1 in range(r - m1 - m2 + 1):
                    yield GradedSignature(m1, m2, n1, r - m1 - m2 - n1)


def z2_degree(sig: GradedSignature, i: int) -> int:
    sig.check_index(i)
    return int(i > sig.m)


def z22_degree(sig: GradedSignature, i: int) -> Degree22:
    sig.check_index(i)
    if i <= sig.m1:
        return (0, 0)
    if i <= sig.m:
        return (1, 1)
    if i <= sig.m + sig.n1:
        return (1, 0)
    return (0, 1)


def add22(x: Degree22, y: Degree22) -> Degree22:
    return (x[0] ^ y[0], x[1] ^ y[1])


def dot22(x: Degree22, y: Degree22) -> int:
    return (x[0] & y[0]) ^ (x[1] & y[1])


def pair_degree(sig: GradedSignature, i: int, j: int) -> int:
    """Z2 degree d_ij of E_ij."""
    return z2_degree(sig, i) ^ z2_degree(sig, j)


def pair_degree22(sig: GradedSignature, i: int, j: int) -> Degree22:
    """Z2xZ2 degree of the colour generator with indices (i, j)."""
    return add22(z22_degree(sig, i), z22_degree(sig, j))


def _block3(sig: GradedSignature, i: int) -> int:
    # 0: [1, m], 1: (m, m+n1], 2: (m+n1, r]
    if i <= sig.m:
        return 0
    if i <= sig.m + sig.n1:
        return 1
    return 2


_REGION_TABLE = {
    (0, 0): "a", (1, 1): "a", (2, 2): "a",
    (0, 1): "b", (1, 2): "c", (0, 2): "d",
    (1, 0): "e", (2, 1): "f", (2, 0): "g",
}


def classify_region(sig: GradedSignature, i: int, j: int) -> str:
    """Label in 'a'..'g' deciding which Klein factors dress E_ij."""
    sig.check_index(i)
    sig.check_index(j)
    return _REGION_TABLE[_block3(sig, i), _block3(sig, j)]


def region_grid(sig: GradedSignature) -> list[list[str]]:
    return [[classify_region(sig, i, j) for j in sig.indices()] for i in sig.indices()]
