#!/usr/bin/env python3
"""
Incremental row reduction over the Coefficient field.

SpanBasis keeps an echelon basis of the vectors fed to it together with the
combination of original inputs each echelon row stands for, so membership
tests also return coordinates in terms of the labeled inputs.
"""

import logging
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

from .coefficient import Coefficient, as_coefficient
from .term_map import TermMap, accumulate

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Coefficient]


def _as_vector(element) -> Vector:
    if isinstance(element, TermMap):
        return element.coordinates()
    return {key: as_coefficient(value) for key, value in element.items() if value}


class SpanBasis:
    """
    Echelon basis of a growing set of labeled vectors.

    Example:
        basis = SpanBasis()
        basis.add(x, label="E1")
        basis.decompose(2 * x)   # {"E1": 2}
    """

    def __init__(self):
        self._rows: List[Tuple[Hashable, Vector, Vector]] = []
        self.labels: List[Hashable] = []

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Vector) -> Tuple[Vector, Vector]:
        residual = dict(vector)
        combination: Vector = {}
        for pivot, row, row_combination in self._rows:
            factor = residual.get(pivot)
            if factor is None:
                continue
            for key, value in row.items():
                accumulate(residual, key, -(factor * value))
            for key, value in row_combination.items():
                accumulate(combination, key, -(factor * value))
        return residual, combination

    def add(self, element, label: Optional[Hashable] = None) -> bool:
        """Insert a vector; returns False when it already lies in the span."""
        residual, combination = self._reduce(_as_vector(element))
        if not residual:
            return False
        index = len(self.labels)
        self.labels.append(index if label is None else label)
        accumulate(combination, index, Coefficient(1))
        pivot = min(residual)
        scale = residual[pivot].inverse()
        row = {key: value * scale for key, value in residual.items()}
        row_combination = {key: value * scale for key, value in combination.items()}
        self._rows.append((pivot, row, row_combination))
        return True

    def contains(self, element) -> bool:
        residual, _ = self._reduce(_as_vector(element))
        return not residual

    def residual(self, element) -> Vector:
        """The part of ``element`` outside the span (empty when inside)."""
        return self._reduce(_as_vector(element))[0]

    def decompose(self, element) -> Optional[Dict[Hashable, Coefficient]]:
        """Coordinates of ``element`` in the added vectors, or None when outside."""
        residual, combination = self._reduce(_as_vector(element))
        if residual:
            return None
        coordinates: Dict[Hashable, Coefficient] = {}
        for index, value in combination.items():
            coordinates[self.labels[index]] = -value
        return {label: value for label, value in coordinates.items() if not value.is_zero()}


def rank(elements: Iterable) -> int:
    basis = SpanBasis()
    for element in elements:
        basis.add(element)
    return basis.dimension


def is_independent(elements: Iterable) -> bool:
    elements = list(elements)
    return rank(elements) == len(elements)
