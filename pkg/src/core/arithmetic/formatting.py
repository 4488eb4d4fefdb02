#!/usr/bin/env python3
"""
Canonical text rendering shared by every algebra.

Terms print as ``coefficient factor factor ...`` (juxtaposition is product)
joined by `` + `` / `` - ``, which the expression parser reads back.
"""

from typing import Iterable, List, Sequence, Tuple

from .coefficient import Scalar, as_coefficient


def power(name: str, exponent: int) -> str:
    if exponent == 1:
        return name
    return f"{name}^{exponent}"


def _signed_body(coefficient: Scalar, factors: Sequence[str]) -> Tuple[bool, str]:
    coefficient = as_coefficient(coefficient)
    if coefficient.needs_parentheses():
        text = f"({coefficient})"
        if not factors:
            text = str(coefficient)
        return False, " ".join([text] + list(factors))
    text = str(coefficient)
    negative = text.startswith("-")
    magnitude = text[1:] if negative else text
    if not factors:
        return negative, magnitude
    if magnitude == "1":
        return negative, " ".join(factors)
    return negative, " ".join([magnitude] + list(factors))


def format_linear(terms: Iterable[Tuple[Scalar, Sequence[str]]]) -> str:
    """Join (coefficient, factor list) pairs into one deterministic string."""
    pieces: List[Tuple[bool, str]] = [_signed_body(c, f) for c, f in terms]
    if not pieces:
        return "0"
    negative, body = pieces[0]
    text = ("-" if negative else "") + body
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text
