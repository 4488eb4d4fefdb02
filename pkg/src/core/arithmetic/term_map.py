#!/usr/bin/env python3
"""
Immutable finite maps from hashable term keys to nonzero Coefficients.

Every algebra element in the engine (Grassmann, symbol, vector field,
Weyl, matrix, representation vector) is a TermMap subclass that adds its own
product; this base owns the linear structure and canonical merging.
"""

from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, TypeVar

from .coefficient import Coefficient, Scalar, as_coefficient

T = TypeVar("T", bound="TermMap")


def accumulate(target: Dict[Hashable, Coefficient], key: Hashable, value: Coefficient):
    """Add ``value`` into ``target[key]``, dropping the key on cancellation."""
    if value.is_zero():
        return
    current = target.get(key)
    if current is None:
        target[key] = value
        return
    total = current + value
    if total.is_zero():
        del target[key]
    else:
        target[key] = total


class TermMap:
    """Linear combination of keyed terms with canonical (zero-free) storage."""

    def __init__(self, terms: Optional[Mapping[Hashable, Scalar]] = None):
        clean: Dict[Hashable, Coefficient] = {}
        for key, value in (terms or {}).items():
            accumulate(clean, key, as_coefficient(value))
        self._terms = clean

    def _derive(self: T, terms: Dict[Hashable, Coefficient]) -> T:
        """Same kind of element (same extra attributes) with new terms."""
        new = object.__new__(type(self))
        new.__dict__.update(self.__dict__)
        new._terms = terms
        return new

    # -- inspection ----------------------------------------------------

    def terms(self) -> Iterable[Tuple[Hashable, Coefficient]]:
        """Terms in deterministic key order."""
        return sorted(self._terms.items(), key=lambda item: item[0])

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coordinates(self) -> Dict[Hashable, Coefficient]:
        return dict(self._terms)

    def coefficient(self, key: Hashable) -> Coefficient:
        return self._terms.get(key, Coefficient(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    # -- linear structure ----------------------------------------------

    def _check_compatible(self, other: "TermMap"):
        if type(other) is not type(self):
            raise TypeError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self: T, other: T) -> T:
        if not isinstance(other, TermMap):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            accumulate(terms, key, value)
        return self._derive(terms)

    def __neg__(self: T) -> T:
        return self._derive({key: -value for key, value in self._terms.items()})

    def __sub__(self: T, other: T) -> T:
        if not isinstance(other, TermMap):
            return NotImplemented
        return self + (-other)

    def scale(self: T, factor: Scalar) -> T:
        factor = as_coefficient(factor)
        if factor.is_zero():
            return self._derive({})
        if factor.is_one():
            return self
        terms = {}
        for key, value in self._terms.items():
            accumulate(terms, key, value * factor)
        return self._derive(terms)

    def map_keys(self: T, fn: Callable[[Hashable], Optional[Tuple[Hashable, Scalar]]]) -> T:
        """Re-key every term; ``fn`` returns (new_key, factor) or None to drop."""
        terms: Dict[Hashable, Coefficient] = {}
        for key, value in self._terms.items():
            mapped = fn(key)
            if mapped is None:
                continue
            new_key, factor = mapped
            accumulate(terms, new_key, value * as_coefficient(factor))
        return self._derive(terms)

    def map_coefficients(self: T, fn: Callable[[Coefficient], Coefficient]) -> T:
        terms: Dict[Hashable, Coefficient] = {}
        for key, value in self._terms.items():
            accumulate(terms, key, fn(value))
        return self._derive(terms)

    def evaluate(self: T, assignment: Mapping[str, Any]) -> T:
        """Specialize parameters in every coefficient."""
        if not assignment:
            return self
        return self.map_coefficients(lambda value: value.evaluate(assignment))

    def parameters(self) -> frozenset:
        used = set()
        for value in self._terms.values():
            used |= value.parameters()
        return frozenset(used)

    # -- comparison ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TermMap) or type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))


def linear_combination(elements: Iterable[Tuple[Scalar, T]], zero: T) -> T:
    """Sum of ``coefficient * element`` starting from ``zero``."""
    terms = dict(zero._terms)
    for factor, element in elements:
        factor = as_coefficient(factor)
        if factor.is_zero():
            continue
        for key, value in element._terms.items():
            accumulate(terms, key, value * factor)
    return zero._derive(terms)
