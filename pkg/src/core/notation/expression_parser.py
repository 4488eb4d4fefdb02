#!/usr/bin/env python3
"""
Text grammar shared by the calculi.

Expressions are read with sympy's parser (``^`` for powers, juxtaposition
for products) and the resulting expression tree is folded into the target
algebra. Odd generators and the Weyl letters are declared non-commutative so
the written factor order survives parsing.
"""

import logging
import re
import tokenize
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Tuple

from sympy import Add, Integer, Mul, Pow, Rational, S, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from ..arithmetic.coefficient import REGISTRY, Coefficient, canonical_name, declare_parameter
from ..contact.superfunction import SuperFunction
from ..errors import AlgebraError, DivisionByZero, ParseError
from ..grassmann.lambda_algebra import OddSpace
from ..symbols.psymbol import PSymbol
from ..weyl.weyl_algebra import WeylElement

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication)

_IDENTIFIER = re.compile(r"[^\W\d]\w*")
_ALLOWED = re.compile(r"[\w\s+\-*/^().]")


class Grammar:
    """
    Vocabulary of one calculus and the hooks that fold a sympy tree into it.

    Subclasses provide ``atom`` (a named generator raised to an integer power),
    ``scalar`` (embed a Coefficient) and ``as_scalar`` (the Coefficient of a
    constant element, else None).
    """

    name = "coefficient"
    letters: Tuple[str, ...] = ()
    noncommutative: Tuple[str, ...] = ()

    def vocabulary(self) -> Dict[str, Symbol]:
        names = {name: Symbol(name) for name in REGISTRY.names}
        names["w"] = Symbol("w")
        for letter in self.letters:
            names[letter] = Symbol(letter, commutative=letter not in self.noncommutative)
        return names

    def scalar(self, value: Coefficient):
        return value

    def as_scalar(self, element) -> Optional[Coefficient]:
        return element

    def atom(self, name: str, exponent: int, position: int, text: str):
        return Coefficient.parameter(name) ** exponent

    def multiply(self, left, right):
        return left * right


class SymbolGrammar(Grammar):
    """P(2N) symbols: t, tau, odd tokens, juxtaposition = supercommutative product."""

    name = "symbol"

    def __init__(self, space: Optional[OddSpace] = None):
        self.space = space or OddSpace(2)
        odd = tuple(self.space.generator_name(bit) for bit in range(self.space.size))
        self.letters = ("t", "tau") + odd
        self.noncommutative = odd

    def scalar(self, value: Coefficient) -> PSymbol:
        return PSymbol.monomial(value, space=self.space)

    def as_scalar(self, element: PSymbol) -> Optional[Coefficient]:
        if any(key != (0, 0, 0) for key in element.keys()):
            return None
        return element.coefficient((0, 0, 0))

    def atom(self, name: str, exponent: int, position: int, text: str) -> PSymbol:
        if name == "t":
            return PSymbol.monomial(1, exponent, 0, 0, self.space)
        if name == "tau":
            return PSymbol.monomial(1, 0, exponent, 0, self.space)
        if name in self.noncommutative:
            if exponent < 0:
                raise ParseError(f"Negative power of odd generator {name}", position, text)
            if exponent == 0:
                return self.scalar(Coefficient(1))
            if exponent > 1:
                return PSymbol.zero(self.space)
            return PSymbol.monomial(1, 0, 0, 1 << self.space.bit_for_name(name), self.space)
        return self.scalar(Coefficient.parameter(name) ** exponent)


class FunctionGrammar(SymbolGrammar):
    """Contact Hamiltonians in Λ(1, 2N): t and odd tokens, no tau."""

    name = "superfunction"

    def __init__(self, space: Optional[OddSpace] = None):
        super().__init__(space)
        self.letters = tuple(letter for letter in self.letters if letter != "tau")

    def scalar(self, value: Coefficient) -> SuperFunction:
        return SuperFunction.monomial(value, space=self.space)

    def as_scalar(self, element: SuperFunction) -> Optional[Coefficient]:
        if any(key != (0, 0) for key in element.keys()):
            return None
        return element.coefficient((0, 0))

    def atom(self, name: str, exponent: int, position: int, text: str) -> SuperFunction:
        symbol = super().atom(name, exponent, position, text)
        return SuperFunction({(t, mask): value for (t, _, mask), value in symbol.items()}, self.space)


class WeylGrammar(Grammar):
    """Weyl algebra words in t^a and d^k (d = t d/dt), order preserved."""

    name = "weyl"
    letters = ("t", "d")
    noncommutative = ("t", "d")

    def scalar(self, value: Coefficient) -> WeylElement:
        return WeylElement.scalar(value)

    def as_scalar(self, element: WeylElement) -> Optional[Coefficient]:
        if any(key != (0, 0) for key in element.keys()):
            return None
        return element.coefficient((0, 0))

    def atom(self, name: str, exponent: int, position: int, text: str) -> WeylElement:
        if name == "t":
            return WeylElement.t_power(exponent)
        if name == "d":
            if exponent < 0:
                raise ParseError("d has no inverse in the Weyl algebra", position, text)
            return WeylElement.d_power(exponent)
        return WeylElement.scalar(Coefficient.parameter(name) ** exponent)


GRAMMARS: Dict[str, Callable[[], Grammar]] = {
    "coefficient": Grammar,
    "symbol": SymbolGrammar,
    "superfunction": FunctionGrammar,
    "weyl": WeylGrammar,
}


def _normalize_names(text: str, grammar: Grammar, vocabulary: Dict[str, Symbol]) -> str:
    """Rewrite aliases (α, ω, xi1, ...) to canonical names; reject unknown ones."""
    for position, character in enumerate(text):
        if not _ALLOWED.match(character) and not character.isalpha():
            raise ParseError(f"Unexpected character {character!r}", position, text)

    depth = 0
    for position, character in enumerate(text):
        if character == "(":
            depth += 1
        elif character == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("Unbalanced ')'", position, text)
    if depth:
        raise ParseError("Missing ')'", len(text), text)

    def replace(match: re.Match) -> str:
        word = match.group(0)
        if word in vocabulary:
            return word
        name = canonical_name(word)
        if name in vocabulary:
            return name
        space = getattr(grammar, "space", None)
        if space is not None:
            try:
                return space.generator_name(space.bit_for_name(word))
            except (ParseError, ValueError):
                pass
        raise ParseError(f"Unknown name {word!r} in {grammar.name} expression", match.start(), text)

    return _IDENTIFIER.sub(replace, text)


def _fold(node, grammar: Grammar, text: str):
    if isinstance(node, (Integer, Rational)):
        return grammar.scalar(Coefficient(Fraction(int(node.p), int(node.q))))
    if isinstance(node, Symbol):
        return grammar.atom(node.name, 1, _locate(node.name, text), text)
    if isinstance(node, Add):
        terms = [_fold(arg, grammar, text) for arg in node.args]
        total = terms[0]
        for term in terms[1:]:
            total = total + term
        return total
    if isinstance(node, Mul):
        product = grammar.scalar(Coefficient(1))
        for arg in node.args:
            product = grammar.multiply(product, _fold(arg, grammar, text))
        return product
    if isinstance(node, Pow):
        base, exponent = node.args
        if not isinstance(exponent, Integer):
            raise ParseError(f"Exponent {exponent} is not an integer", _locate("^", text), text)
        exponent = int(exponent)
        if isinstance(base, Symbol):
            return grammar.atom(base.name, exponent, _locate(base.name, text), text)
        value = _fold(base, grammar, text)
        if exponent < 0:
            scalar = grammar.as_scalar(value)
            if scalar is None:
                raise ParseError(f"Cannot invert {base}", _locate("^", text), text)
            return grammar.scalar(scalar ** exponent)
        result = grammar.scalar(Coefficient(1))
        for _ in range(exponent):
            result = grammar.multiply(result, value)
        return result
    raise ParseError(f"Unsupported expression {node}", 0, text)


def _locate(token: str, text: str) -> int:
    position = text.find(token)
    return max(position, 0)


def _declare(parameters: Iterable[str], grammar: Grammar, text: str) -> None:
    """Register extra formal parameters; they may not shadow a letter of the grammar."""
    space = getattr(grammar, "space", None)
    for raw in parameters:
        name = canonical_name(raw)
        clash = name in grammar.letters or name == "w"
        if space is not None and not clash:
            try:
                space.bit_for_name(name)
                clash = True
            except (ParseError, ValueError):
                pass
        if clash:
            raise ParseError(f"Parameter {raw!r} shadows a {grammar.name} generator", 0, text)
        try:
            declare_parameter(name)
        except ValueError as exc:
            raise ParseError(str(exc), 0, text) from None


def parse_expression(text: str, calculus: str = "coefficient", space: Optional[OddSpace] = None,
                     parameters: Iterable[str] = ()):
    """
    Parse ``text`` in the grammar of ``calculus``.

    Names outside the grammar's letters must be registered parameters: alpha,
    h, mu, sigma1..sigma3 (aliases α, a, μ, σ1..σ3, s1..s3) plus ``w`` for
    omega. ``parameters`` declares further formal parameters first; they stay
    registered for the rest of the session.

    Returns:
        A Coefficient, PSymbol, SuperFunction or WeylElement.
    """
    try:
        factory = GRAMMARS[calculus]
    except KeyError:
        raise ParseError(f"Unknown grammar {calculus!r}; expected one of {', '.join(GRAMMARS)}") from None
    grammar = factory(space) if space is not None and calculus in ("symbol", "superfunction") else factory()

    if not text or not text.strip():
        raise ParseError("Empty expression", 0, text)
    _declare(parameters, grammar, text)
    vocabulary = grammar.vocabulary()
    source = _normalize_names(text, grammar, vocabulary)
    if "." in source:
        raise ParseError("Decimal numbers are not exact; write p/q", source.index("."), text)

    try:
        tree = parse_expr(source, local_dict=dict(vocabulary), transformations=TRANSFORMATIONS)
    except (SyntaxError, tokenize.TokenError) as exc:
        offset = getattr(exc, "offset", None) or len(text)
        raise ParseError(f"Malformed {grammar.name} expression", min(offset - 1, len(text)), text) from None
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"Malformed {grammar.name} expression: {exc}", 0, text) from None
    if tree.has(S.ComplexInfinity, S.NaN):
        raise DivisionByZero(f"Division by zero in '{text}'")

    try:
        result = _fold(tree, grammar, text)
    except ParseError:
        raise
    except AlgebraError as exc:
        raise ParseError(str(exc), 0, text) from exc
    logger.debug(f"Parsed {grammar.name} '{text}' -> {result}")
    return result


def parse_coefficient(text: str, parameters: Iterable[str] = ()) -> Coefficient:
    return parse_expression(text, "coefficient", parameters=parameters)


def parse_symbol(text: str, space: Optional[OddSpace] = None, parameters: Iterable[str] = ()) -> PSymbol:
    return parse_expression(text, "symbol", space, parameters)


def parse_superfunction(text: str, space: Optional[OddSpace] = None,
                        parameters: Iterable[str] = ()) -> SuperFunction:
    return parse_expression(text, "superfunction", space, parameters)


def parse_weyl(text: str, parameters: Iterable[str] = ()) -> WeylElement:
    return parse_expression(text, "weyl", parameters=parameters)
