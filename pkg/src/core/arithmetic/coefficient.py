#!/usr/bin/env python3
"""
Exact coefficient field for every calculus in the engine.

A Coefficient is a reduced fraction of polynomials over QQ in the generator
``w`` (with w^2 = -2) and the formal parameters alpha, h, mu, sigma1..3 plus
any user-declared names. Polynomials come from ``sympy.polys.rings`` with a
graded-lexicographic order; the normal form keeps ``w`` out of the
denominator and makes the denominator monic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring as polynomial_ring

from ..errors import DivisionByZero, EvaluationPole, UnknownLabel

logger = logging.getLogger(__name__)

OMEGA = "w"
BASE_PARAMETERS: Tuple[str, ...] = ("alpha", "h", "mu", "sigma1", "sigma2", "sigma3")

# Spellings accepted on input; output always uses the ASCII names.
PARAMETER_ALIASES: Dict[str, str] = {
    "α": "alpha",
    "a": "alpha",
    "μ": "mu",
    "σ1": "sigma1",
    "σ2": "sigma2",
    "σ3": "sigma3",
    "s1": "sigma1",
    "s2": "sigma2",
    "s3": "sigma3",
    "ω": OMEGA,
}

Scalar = Union[int, Fraction, "BaseScalar", "Coefficient"]


def canonical_name(name: str) -> str:
    """Map an alias (α, σ1, ...) to the registered parameter name."""
    name = name.strip()
    return PARAMETER_ALIASES.get(name, name)


class ParameterRegistry:
    """
    Ordered set of parameter names and the polynomial ring built over them.

    Declaring a parameter rebuilds the ring; coefficients created under an
    older ring are lifted on their next operation.
    """

    def __init__(self, names: Iterable[str] = BASE_PARAMETERS):
        self._names = list(names)
        self._build()

    def _build(self):
        symbols = [OMEGA] + self._names
        self.ring, *generators = polynomial_ring(symbols, QQ, grlex)
        self.omega = generators[0]
        self.generators = dict(zip(self._names, generators[1:]))
        logger.debug(f"Coefficient ring rebuilt over {', '.join(symbols)}")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self._names)

    def declare(self, name: str) -> "Parameter":
        name = canonical_name(name)
        if not name.isidentifier() or name == OMEGA:
            raise ValueError(f"Invalid parameter name: {name!r}")
        if name not in self._names:
            self._names.append(name)
            self._build()
        return Parameter(name)

    def generator(self, name: str):
        name = canonical_name(name)
        if name == OMEGA:
            return self.omega
        try:
            return self.generators[name]
        except KeyError:
            raise UnknownLabel(f"Unknown parameter: {name}") from None


REGISTRY = ParameterRegistry()


def declare_parameter(name: str) -> "Parameter":
    """Register a user parameter (placed after the built-in ones)."""
    return REGISTRY.declare(name)


@dataclass(frozen=True)
class Parameter:
    """A named formal parameter; commutes with everything."""

    name: str

    def __post_init__(self):
        object.__setattr__(self, "name", canonical_name(self.name))

    def coefficient(self) -> "Coefficient":
        return Coefficient.parameter(self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BaseScalar:
    """The number a + b*w with rational a, b and w^2 = -2."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __mul__(self, other: "BaseScalar") -> "BaseScalar":
        return BaseScalar(self.a * other.a - 2 * self.b * other.b, self.a * other.b + self.b * other.a)

    def __add__(self, other: "BaseScalar") -> "BaseScalar":
        return BaseScalar(self.a + other.a, self.b + other.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_coefficient(self) -> "Coefficient":
        return Coefficient(self)


# ----------------------------------------------------------------------
# polynomial helpers
# ----------------------------------------------------------------------

def _qq(value: Union[int, Fraction]):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _has_omega(poly) -> bool:
    return any(monom[0] for monom in poly.itermonoms())


def _reduce_omega(poly):
    """Rewrite w^e as (-2)^(e//2) * w^(e%2)."""
    if all(monom[0] < 2 for monom in poly.itermonoms()):
        return poly
    terms: Dict[tuple, object] = {}
    for monom, coeff in poly.iterterms():
        power = monom[0]
        if power >= 2:
            half, rest = divmod(power, 2)
            coeff = coeff * QQ(-2) ** half
            monom = (rest,) + monom[1:]
        terms[monom] = terms.get(monom, QQ.zero) + coeff
    return poly.ring.from_dict({m: c for m, c in terms.items() if c})


def _conjugate(poly):
    """Apply w -> -w."""
    return poly.ring.from_dict({m: (-c if m[0] % 2 else c) for m, c in poly.iterterms()})


def _normalize(num, den):
    """Reduced fraction with a w-free monic denominator."""
    ring = num.ring
    if not den:
        raise DivisionByZero("Denominator is zero")
    if not num:
        return ring.zero, ring.one
    num = _reduce_omega(num)
    den = _reduce_omega(den)
    if _has_omega(den):
        conjugate = _conjugate(den)
        num = _reduce_omega(num * conjugate)
        den = _reduce_omega(den * conjugate)
        if not num:
            return ring.zero, ring.one
    if den.is_ground:
        lead = den.LC
        if lead != 1:
            num = num.quo_ground(lead)
        return num, ring.one
    num, den = num.cancel(den)
    lead = den.LC
    if lead != 1:
        num = num.quo_ground(lead)
        den = den.quo_ground(lead)
    return num, den


def _lift(poly):
    ring = REGISTRY.ring
    if poly.ring is ring:
        return poly
    return poly.set_ring(ring)


class Coefficient:
    """
    Immutable element of the coefficient field.

    Construct from an int, Fraction, BaseScalar or Coefficient; use
    ``Coefficient.parameter(name)`` and ``Coefficient.omega()`` for generators.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value: Scalar = 0):
        ring = REGISTRY.ring
        if isinstance(value, Coefficient):
            self._num, self._den = _lift(value._num), _lift(value._den)
        elif isinstance(value, BaseScalar):
            self._num = ring.ground_new(_qq(value.a)) + ring.ground_new(_qq(value.b)) * REGISTRY.omega
            self._den = ring.one
        elif isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            self._num = ring.ground_new(_qq(value))
            self._den = ring.one
        else:
            raise TypeError(f"Cannot build a Coefficient from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "Coefficient":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def from_parts(cls, num, den=None) -> "Coefficient":
        """Build from ring polynomials, normalizing the fraction."""
        num = _lift(num)
        den = REGISTRY.ring.one if den is None else _lift(den)
        return cls._raw(*_normalize(num, den))

    @classmethod
    def parameter(cls, name: str) -> "Coefficient":
        return cls._raw(REGISTRY.generator(name), REGISTRY.ring.one)

    @classmethod
    def omega(cls) -> "Coefficient":
        return cls._raw(REGISTRY.omega, REGISTRY.ring.one)

    # -- accessors -----------------------------------------------------

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_one(self) -> bool:
        return self._num == self._num.ring.one and self._den == self._den.ring.one

    def is_constant(self) -> bool:
        """True for rational numbers (no parameters, no w)."""
        return self._num.is_ground and self._den.is_ground

    def is_polynomial(self) -> bool:
        return self._den.is_ground

    def parameters(self) -> FrozenSet[str]:
        used = set()
        for poly in (self._num, self._den):
            for monom in poly.itermonoms():
                for symbol, power in zip(poly.ring.symbols, monom):
                    if power:
                        used.add(str(symbol))
        used.discard(OMEGA)
        return frozenset(used)

    def depends_on(self, name: str) -> bool:
        return canonical_name(name) in self.parameters()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        value = self._num.LC if self._num else QQ.zero
        return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))

    # -- arithmetic ----------------------------------------------------

    def _pair(self, other: Scalar):
        if not isinstance(other, Coefficient):
            other = Coefficient(other)
        a_num, a_den, b_num, b_den = self._num, self._den, other._num, other._den
        if a_num.ring is not b_num.ring or a_num.ring is not REGISTRY.ring:
            a_num, a_den, b_num, b_den = (_lift(p) for p in (a_num, a_den, b_num, b_den))
        return a_num, a_den, b_num, b_den

    def __add__(self, other: Scalar) -> "Coefficient":
        try:
            a_num, a_den, b_num, b_den = self._pair(other)
        except TypeError:
            return NotImplemented
        if a_den == b_den:
            if a_den == a_den.ring.one:
                return Coefficient._raw(a_num + b_num, a_den)
            return Coefficient._raw(*_normalize(a_num + b_num, a_den))
        return Coefficient._raw(*_normalize(a_num * b_den + b_num * a_den, a_den * b_den))

    __radd__ = __add__

    def __neg__(self) -> "Coefficient":
        return Coefficient._raw(-self._num, self._den)

    def __sub__(self, other: Scalar) -> "Coefficient":
        try:
            return self + (-Coefficient(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Scalar) -> "Coefficient":
        return Coefficient(other) - self

    def __mul__(self, other: Scalar) -> "Coefficient":
        try:
            a_num, a_den, b_num, b_den = self._pair(other)
        except TypeError:
            return NotImplemented
        one = a_den.ring.one
        if a_den == one and b_den == one:
            return Coefficient._raw(_reduce_omega(a_num * b_num), one)
        if b_num.is_ground and b_den == one:
            if not b_num:
                return Coefficient._raw(a_num.ring.zero, one)
            return Coefficient._raw(a_num.mul_ground(b_num.LC), a_den)
        if a_num.is_ground and a_den == one:
            if not a_num:
                return Coefficient._raw(b_num.ring.zero, one)
            return Coefficient._raw(b_num.mul_ground(a_num.LC), b_den)
        return Coefficient._raw(*_normalize(a_num * b_num, a_den * b_den))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Coefficient":
        try:
            a_num, a_den, b_num, b_den = self._pair(other)
        except TypeError:
            return NotImplemented
        if not b_num:
            raise DivisionByZero(f"Division of {self} by zero")
        if b_num.is_ground and b_den == b_den.ring.one:
            return Coefficient._raw(a_num.quo_ground(b_num.LC), a_den)
        return Coefficient._raw(*_normalize(a_num * b_den, a_den * b_num))

    def __rtruediv__(self, other: Scalar) -> "Coefficient":
        return Coefficient(other) / self

    def inverse(self) -> "Coefficient":
        return Coefficient(1) / self

    def __pow__(self, exponent: int) -> "Coefficient":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Coefficient(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, bool):
            return NotImplemented
        if not isinstance(other, (Coefficient, int, Fraction, BaseScalar)):
            return NotImplemented
        a_num, a_den, b_num, b_den = self._pair(other)
        return a_num == b_num and a_den == b_den

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def _canonical_key(self) -> tuple:
        def key(poly):
            names = [str(s) for s in poly.ring.symbols]
            items = []
            for monom, coeff in poly.iterterms():
                powers = tuple((n, e) for n, e in zip(names, monom) if e)
                items.append((powers, str(coeff)))
            return tuple(sorted(items))

        return key(self._num), key(self._den)

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash(self._canonical_key())
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._num)

    # -- substitution --------------------------------------------------

    def evaluate(self, assignment: Mapping[Union[str, Parameter], Scalar]) -> "Coefficient":
        """
        Substitute values for parameters and renormalize.

        Unassigned parameters stay formal. Raises EvaluationPole when the
        denominator vanishes.
        """
        used = self.parameters()
        num, den = _lift(self._num), _lift(self._den)
        replacements = []
        for key, value in assignment.items():
            name = canonical_name(str(key))
            if name not in used:
                continue
            value = value if isinstance(value, Coefficient) else Coefficient(value)
            if not value.is_polynomial():
                # substitute a rational function by clearing its denominator per power
                return self._evaluate_rational(assignment)
            replacements.append((REGISTRY.generator(name), _lift(value._num).quo_ground(_lift(value._den).LC)))
        if not replacements:
            return self
        num = _reduce_omega(num.compose(replacements))
        den = _reduce_omega(den.compose(replacements))
        if not den:
            raise EvaluationPole(f"Denominator of {self} vanishes under {dict(assignment)}")
        return Coefficient._raw(*_normalize(num, den))

    def _evaluate_rational(self, assignment: Mapping) -> "Coefficient":
        values = {canonical_name(str(k)): (v if isinstance(v, Coefficient) else Coefficient(v)) for k, v in assignment.items()}

        def substitute(poly) -> "Coefficient":
            total = Coefficient(0)
            names = [str(s) for s in poly.ring.symbols]
            for monom, coeff in poly.iterterms():
                term = Coefficient._raw(poly.ring.ground_new(coeff), poly.ring.one)
                for symbol, power in zip(names, monom):
                    if not power:
                        continue
                    if symbol in values:
                        term = term * values[symbol] ** power
                    else:
                        term = term * Coefficient.parameter(symbol) ** power
                total = total + term
            return total

        den = substitute(_lift(self._den))
        if den.is_zero():
            raise EvaluationPole(f"Denominator of {self} vanishes under {dict(assignment)}")
        return substitute(_lift(self._num)) / den

    # -- printing ------------------------------------------------------

    def needs_parentheses(self) -> bool:
        """True when the printed form is a sum or a fraction."""
        return len(self._num) > 1 or not self._den.is_ground

    def __str__(self) -> str:
        num = format_polynomial(self._num)
        if self._den.is_ground:
            return num
        den = format_polynomial(self._den)
        if len(self._num) > 1:
            num = f"({num})"
        if len(self._den) > 1 or not _is_single_factor(self._den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Coefficient({self})"


def _is_single_factor(poly) -> bool:
    if len(poly) != 1:
        return False
    monom, coeff = next(iter(poly.iterterms()))
    return coeff == 1 and sum(1 for e in monom if e) == 1 and max(monom) == 1


def _format_rational(value) -> str:
    numer, denom = int(QQ.numer(value)), int(QQ.denom(value))
    return str(numer) if denom == 1 else f"{numer}/{denom}"


def format_polynomial(poly) -> str:
    """Deterministic text in the coefficient grammar (grlex, highest first)."""
    if not poly:
        return "0"
    names = [str(s) for s in poly.ring.symbols]
    pieces = []
    for monom, coeff in poly.terms():
        factors = []
        for name, power in zip(names, monom):
            if power == 1:
                factors.append(name)
            elif power:
                factors.append(f"{name}^{power}")
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if not factors:
            body = _format_rational(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_rational(magnitude)] + factors)
        pieces.append((negative, body))
    text = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text


ZERO = Coefficient(0)
ONE = Coefficient(1)


def as_coefficient(value: Scalar) -> Coefficient:
    return value if isinstance(value, Coefficient) else Coefficient(value)


def param(name: str) -> Coefficient:
    """Shorthand for ``Coefficient.parameter``."""
    return Coefficient.parameter(name)


def parse_scalar(text: str) -> Optional[Coefficient]:
    """Parse 'symbolic' (None), an integer or a rational 'p/q'."""
    text = text.strip()
    if text.lower() in ("symbolic", "formal", ""):
        return None
    return Coefficient(Fraction(text))
