#!/usr/bin/env python3
"""
(2|2) supermatrices over the Weyl algebra.

Rows and columns 1, 2 are even and 3, 4 are odd; entries are addressed
1-based as (row, col). Internally a matrix is a TermMap keyed by
(row, col, t_exp, d_pow).
"""

import logging
from typing import Dict, List, Mapping, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient
from ..arithmetic.term_map import TermMap, accumulate
from ..errors import MixedParity
from ..grassmann.lambda_algebra import EVEN, MIXED, ODD
from .weyl_algebra import WeylElement, weyl_mul

logger = logging.getLogger(__name__)

SIZE = 4
ODD_INDICES = (3, 4)


def index_parity(index: int) -> int:
    return 1 if index in ODD_INDICES else 0


class WeylSuperMatrix(TermMap):
    """4x4 matrix with WeylElement entries."""

    @classmethod
    def from_entries(cls, entries: Mapping[Tuple[int, int], WeylElement]) -> "WeylSuperMatrix":
        terms: Dict[tuple, Coefficient] = {}
        for (i, j), element in entries.items():
            if not (1 <= i <= SIZE and 1 <= j <= SIZE):
                raise IndexError(f"Entry ({i}, {j}) outside a {SIZE}x{SIZE} matrix")
            for (a, k), value in element.items():
                accumulate(terms, (i, j, a, k), value)
        return cls(terms)

    @classmethod
    def diagonal(cls, *entries: WeylElement) -> "WeylSuperMatrix":
        return cls.from_entries({(i + 1, i + 1): e for i, e in enumerate(entries)})

    @classmethod
    def identity(cls, scalar: Scalar = 1, t: int = 0) -> "WeylSuperMatrix":
        entry = WeylElement.monomial(as_coefficient(scalar), t, 0)
        return cls.diagonal(entry, entry, entry, entry)

    @classmethod
    def zero(cls) -> "WeylSuperMatrix":
        return cls({})

    def entry(self, i: int, j: int) -> WeylElement:
        return WeylElement({(a, k): value for (r, c, a, k), value in self.items() if r == i and c == j})

    def entries(self) -> Dict[Tuple[int, int], WeylElement]:
        out: Dict[Tuple[int, int], Dict] = {}
        for (r, c, a, k), value in self.items():
            out.setdefault((r, c), {})[(a, k)] = value
        return {key: WeylElement(terms) for key, terms in out.items()}

    def parity(self) -> str:
        parities = {index_parity(r) ^ index_parity(c) for (r, c, _, _) in self._terms}
        if not parities:
            return EVEN
        if len(parities) > 1:
            return MIXED
        return ODD if parities.pop() else EVEN

    def parity_bit(self) -> int:
        parity = self.parity()
        if parity == MIXED:
            raise MixedParity(f"Supermatrix mixes even and odd blocks:\n{self}")
        return 1 if parity == ODD else 0

    def __matmul__(self, other: "WeylSuperMatrix") -> "WeylSuperMatrix":
        left = self.entries()
        right = other.entries()
        result: Dict[Tuple[int, int], WeylElement] = {}
        for (i, k), x in left.items():
            for (k2, j), y in right.items():
                if k != k2:
                    continue
                product = weyl_mul(x, y)
                result[(i, j)] = result[(i, j)] + product if (i, j) in result else product
        return WeylSuperMatrix.from_entries(result)

    def __mul__(self, other):
        if isinstance(other, WeylSuperMatrix):
            return self @ other
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def rows(self) -> List[List[str]]:
        return [[str(self.entry(i, j)) for j in range(1, SIZE + 1)] for i in range(1, SIZE + 1)]

    def __str__(self) -> str:
        rows = self.rows()
        width = max(len(cell) for row in rows for cell in row)
        lines = []
        for i, row in enumerate(rows):
            cells = [cell.rjust(width) for cell in row]
            lines.append(f"[ {cells[0]}  {cells[1]} | {cells[2]}  {cells[3]} ]")
            if i == 1:
                lines.append("-" * len(lines[0]))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"WeylSuperMatrix({self.rows()})"


def supermatrix_bracket(first: WeylSuperMatrix, second: WeylSuperMatrix) -> WeylSuperMatrix:
    """[M1, M2] = M1 M2 - (-1)^(p1 p2) M2 M1."""
    p1, p2 = first.parity_bit(), second.parity_bit()
    forward = first @ second
    backward = second @ first
    if p1 and p2:
        return forward + backward
    return forward - backward
