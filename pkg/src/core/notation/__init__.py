"""Text grammar for coefficients, symbols, superfunctions and Weyl words."""

from .expression_parser import (
    GRAMMARS,
    FunctionGrammar,
    Grammar,
    SymbolGrammar,
    WeylGrammar,
    parse_coefficient,
    parse_expression,
    parse_superfunction,
    parse_symbol,
    parse_weyl,
)

__all__ = [
    'GRAMMARS',
    'FunctionGrammar',
    'Grammar',
    'SymbolGrammar',
    'WeylGrammar',
    'parse_coefficient',
    'parse_expression',
    'parse_superfunction',
    'parse_symbol',
    'parse_weyl',
]
