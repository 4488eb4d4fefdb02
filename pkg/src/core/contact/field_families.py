#!/usr/bin/env python3
"""
The concrete labeled field families and their bracket closure.

- ``s2_basis``: the basis {L, E, H, F, h, p, x, y} of S'(2, 0) as vector fields.
- ``s_alpha_basis``: the two embedded copies of S'(2, alpha) in P(4) / P_h(4).
- ``k4_basis``: the sixteen fields spanning i_0(K'(4)) and i_h(K'(4)^).
- ``LabeledFamily``: caches elements per (label, mode), decomposes brackets
  in the span of the family at mode n + k.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.formatting import format_linear
from ..arithmetic.linear_algebra import SpanBasis
from ..arithmetic.term_map import TermMap
from ..errors import ClosureFailure, UndefinedMode, UnknownLabel
from ..grassmann.lambda_algebra import LambdaElement, OddSpace
from ..symbols.psymbol import DEFAULT_CUTOFF, PSymbol, circ_h, deformed_bracket, poisson_bracket
from .vector_field import VectorField, vf_bracket

logger = logging.getLogger(__name__)

P4 = OddSpace(2)
W2 = OddSpace(1)

ZERO_H, FORMAL_H = "zero", "formal"

S2_LABELS: Tuple[str, ...] = ("L", "E", "H", "F", "h", "p", "x", "y")
S2_PARITY: Dict[str, int] = {"L": 0, "E": 0, "H": 0, "F": 0, "h": 1, "p": 1, "x": 1, "y": 1}

K4_LABELS: Tuple[str, ...] = (
    "L", "Q", "X1", "X2", "Y1", "Y2", "R11", "R12", "R21", "R22", "Z1", "Z2", "G0", "G1", "G2", "G3",
)
K4_PARITY: Dict[str, int] = {
    "L": 0, "Q": 0, "X1": 1, "X2": 1, "Y1": 1, "Y2": 1,
    "R11": 0, "R12": 0, "R21": 0, "R22": 0, "Z1": 1, "Z2": 1,
    "G0": 0, "G1": 1, "G2": 1, "G3": 0,
}

S_ALPHA_LABELS: Dict[int, Tuple[str, ...]] = {
    1: ("L", "E3", "F3", "H3", "T1", "T2", "D1", "D2"),
    2: ("L", "E3", "F3", "H3", "T3", "T4", "D3", "D4"),
}
S_ALPHA_PARITY: Dict[str, int] = {
    "L": 0, "H1": 0, "H2": 0, "E3": 0, "F3": 0, "H3": 0,
    "T1": 1, "T2": 1, "T3": 1, "T4": 1, "D1": 1, "D2": 1, "D3": 1, "D4": 1,
}


def odd_word(names: str, space: OddSpace = P4, deformed: bool = False) -> LambdaElement:
    """Product of odd generators in the written order ('y1 y2 x2')."""
    result = LambdaElement.scalar(1, space)
    for name in names.split():
        generator = LambdaElement.generator(name, space)
        result = result * generator if deformed else result.wedge(generator)
    return result


def symbol(coefficient: Scalar, t: int, tau: int, names: str = "", deformed: bool = False,
           space: OddSpace = P4) -> PSymbol:
    """coefficient * t^t tau^tau * (odd word)."""
    word = odd_word(names, space, deformed).scale(as_coefficient(coefficient))
    return PSymbol.from_lambda(word, t, tau)


# ----------------------------------------------------------------------
# S'(2, 0) as vector fields on S^{1|1}
# ----------------------------------------------------------------------

def s2_basis(label: str, n: int) -> VectorField:
    """Basis field of S'(2, 0) with N = 1 (x1 at bit 0, y1 at bit 1)."""
    xi, eta = 1, 2
    d_t, d_xi, d_eta = 0, 1, 2
    both = xi | eta
    half = Fraction(n + 1, 2)
    table = {
        "L": {(d_t, n + 1, 0): -1, (d_xi, n, xi): -half, (d_eta, n, eta): -half},
        "E": {(d_xi, n, eta): 1},
        "H": {(d_eta, n, eta): 1, (d_xi, n, xi): -1},
        "F": {(d_eta, n, xi): 1},
        "h": {(d_t, n, eta): 1, (d_xi, n - 1, both): -n},
        "p": {(d_eta, n + 1, 0): 1},
        "x": {(d_xi, n + 1, 0): 1},
        "y": {(d_t, n, xi): 1, (d_eta, n - 1, both): n},
    }
    if label not in table:
        raise UnknownLabel(f"Unknown S'(2,0) label: {label}")
    return VectorField({key: Coefficient(value) for key, value in table[label].items()}, W2)


def codimension_element(space: OddSpace = W2) -> VectorField:
    """The field x1...yN d_t spanning the quotient S(2N, alpha)/S'(2N, alpha) (up to t^-alpha)."""
    return VectorField({(0, 0, space.full_mask): 1}, space)


# ----------------------------------------------------------------------
# S'(2, alpha) copies inside P(4) and P_h(4)
# ----------------------------------------------------------------------

def _gamma_fields(label: str, n: int, alpha: Coefficient, deformed_copy: bool) -> PSymbol:
    shift = alpha + n
    if label == "H1":
        return symbol(1, n + 1, 1)
    if label == "H2":
        return symbol(1, n, 0, "x1 y1") + symbol(1, n, 0, "x2 y2")
    if label == "E3":
        return symbol(1, n, 0, "x1 y2")
    if label == "F3":
        return symbol(1, n, 0, "x2 y1")
    if label == "H3":
        return symbol(1, n, 0, "x1 y1") - symbol(1, n, 0, "x2 y2")
    if label in ("T1", "T2"):
        return symbol(1, n + 1, 0, "y" + label[1])
    if label in ("T3", "T4"):
        return symbol(1, n + 1, 0, "x" + str(int(label[1]) - 2))
    if label == "D1":
        return symbol(1, n, 1, "x1") + symbol(shift, n - 1, 0, "x1 x2 y2")
    if label == "D2":
        return symbol(1, n, 1, "x2") - symbol(shift, n - 1, 0, "x1 x2 y1")
    if label == "D3":
        word = "y1 y2 x2" if deformed_copy else "x2 y1 y2"
        return symbol(1, n, 1, "y1") + symbol(shift, n - 1, 0, word, deformed=deformed_copy)
    if label == "D4":
        word = "y1 y2 x1" if deformed_copy else "x1 y1 y2"
        return symbol(1, n, 1, "y2") - symbol(shift, n - 1, 0, word, deformed=deformed_copy)
    raise UnknownLabel(f"Unknown S'(2,alpha) label: {label}")


def s_alpha_basis(copy: int, label: str, n: int, alpha: Optional[Scalar] = None,
                  h_deformed: bool = False) -> PSymbol:
    """
    Field of the copy S^1_alpha (copy=1) or S^2_alpha (copy=2).

    With ``h_deformed`` the second copy uses the Λ_h-ordered spellings
    (y_i before x_j); the first copy is the same in P(4) and P_h(4).
    """
    if copy not in S_ALPHA_LABELS:
        raise UnknownLabel(f"Unknown S'(2,alpha) copy: {copy}")
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    if label not in S_ALPHA_LABELS[copy] and label not in ("H1", "H2"):
        raise UnknownLabel(f"Label {label} is not in copy {copy}")
    deformed_copy = h_deformed and copy == 2
    if label != "L":
        return _gamma_fields(label, n, alpha, deformed_copy)
    half = (alpha + n + 1) / 2
    if copy == 1:
        return _gamma_fields("H1", n, alpha, False) + _gamma_fields("H2", n, alpha, False).scale(half)
    if deformed_copy:
        return symbol(1, n + 1, 1) + (symbol(1, n, 0, "y1 x1", True) + symbol(1, n, 0, "y2 x2", True)).scale(half)
    return _gamma_fields("H1", n, alpha, False) - _gamma_fields("H2", n, alpha, False).scale(half)


# ----------------------------------------------------------------------
# K'(4) fields in P(4) (h = 0) and P_h(4) (h formal)
# ----------------------------------------------------------------------

_TAU_INVERSE = PSymbol.monomial(1, 0, -1, 0, P4)


def k4_basis(label: str, n: int, h: str = ZERO_H, cutoff: int = DEFAULT_CUTOFF) -> PSymbol:
    """One of the sixteen K'(4) fields at mode n."""
    if label not in K4_PARITY:
        raise UnknownLabel(f"Unknown K'(4) label: {label}")
    if h not in (ZERO_H, FORMAL_H):
        raise ValueError(f"h must be '{ZERO_H}' or '{FORMAL_H}', got {h!r}")
    if label == "L":
        return symbol(1, n + 1, 1)
    if label == "Q":
        return symbol(1, n + 1, 1, "x1 x2")
    if label in ("X1", "X2"):
        return symbol(1, n + 1, 1, "x" + label[1])
    if label in ("Y1", "Y2"):
        return symbol(1, n, 0, "y" + label[1])
    if label.startswith("R"):
        return symbol(1, n, 0, f"x{label[1]} y{label[2]}")
    if label in ("Z1", "Z2"):
        return symbol(1, n, 0, "x1 x2 y" + label[1])
    # G fields
    if h == ZERO_H:
        if label == "G0":
            return symbol(1, n - 1, -1, "y1 y2")
        if label in ("G1", "G2"):
            return symbol(1, n - 1, -1, f"x{label[1]} y1 y2")
        if n == 0:
            raise UndefinedMode("G3 at mode 0 is not a field of K'(4)")
        return symbol(n, n - 1, -1, "x1 x2 y1 y2")
    if label == "G0":
        return circ_h(_TAU_INVERSE, symbol(1, n - 1, 0, "y1 y2", True), cutoff)
    if label in ("G1", "G2"):
        return circ_h(_TAU_INVERSE, symbol(1, n - 1, 0, f"y1 y2 x{label[1]}", True), cutoff)
    central = symbol(param("h"), n, 0)
    if n == 0:
        return central
    return circ_h(_TAU_INVERSE, symbol(n, n - 1, 0, "y1 y2 x1 x2", True), cutoff) + central


# ----------------------------------------------------------------------
# labeled families
# ----------------------------------------------------------------------

Member = Tuple[str, int]


class LabeledFamily:
    """
    A family {a_n} of elements indexed by (label, mode) with a bracket.

    Brackets [a_n, b_k] are decomposed in the span of the family at mode
    n + k; anything outside raises ClosureFailure.
    """

    def __init__(self, name: str, labels: Sequence[str], builder: Callable[[str, int], TermMap],
                 bracket: Callable[[TermMap, TermMap], TermMap], parity: Mapping[str, int],
                 excluded: Optional[Callable[[str, int], bool]] = None):
        self.name = name
        self.labels = tuple(labels)
        self._builder = builder
        self._bracket = bracket
        self._parity = dict(parity)
        self._excluded = excluded or (lambda label, n: False)
        self._elements: Dict[Member, TermMap] = {}
        self._spans: Dict[int, SpanBasis] = {}
        self._decompositions: Dict[Tuple[Member, Member], Dict[Member, Coefficient]] = {}

    def parity(self, label: str) -> int:
        try:
            return self._parity[label]
        except KeyError:
            raise UnknownLabel(f"Unknown label {label} in {self.name}") from None

    def exists(self, label: str, n: int) -> bool:
        return label in self._parity and not self._excluded(label, n)

    def element(self, label: str, n: int) -> TermMap:
        key = (label, n)
        cached = self._elements.get(key)
        if cached is not None:
            return cached
        if label not in self._parity:
            raise UnknownLabel(f"Unknown label {label} in {self.name}")
        if self._excluded(label, n):
            raise UndefinedMode(f"{label}[{n}] is not defined in {self.name}")
        element = self._builder(label, n)
        self._elements[key] = element
        return element

    def members(self, mode: int) -> List[Member]:
        return [(label, mode) for label in self.labels if self.exists(label, mode)]

    def members_in_range(self, mode_range: int) -> List[Member]:
        return [m for n in range(-mode_range, mode_range + 1) for m in self.members(n)]

    def span(self, mode: int) -> SpanBasis:
        basis = self._spans.get(mode)
        if basis is None:
            basis = SpanBasis()
            for member in self.members(mode):
                if not basis.add(self.element(*member), label=member):
                    logger.warning(f"{self.name}: {member} is dependent on earlier fields at mode {mode}")
            self._spans[mode] = basis
        return basis

    def bracket(self, a: Member, b: Member) -> TermMap:
        return self._bracket(self.element(*a), self.element(*b))

    def decompose(self, element: TermMap, mode: int) -> Optional[Dict[Member, Coefficient]]:
        return self.span(mode).decompose(element)

    def decompose_bracket(self, a: Member, b: Member) -> Dict[Member, Coefficient]:
        key = (a, b)
        cached = self._decompositions.get(key)
        if cached is not None:
            return cached
        result = self.bracket(a, b)
        mode = a[1] + b[1]
        coordinates = self.decompose(result, mode)
        if coordinates is None:
            raise ClosureFailure(
                f"[{a[0]}[{a[1]}], {b[0]}[{b[1]}]] leaves the span of {self.name} at mode {mode}",
                element=result,
            )
        self._decompositions[key] = coordinates
        return coordinates

    def closure_failures(self, mode_range: int) -> List[Tuple[Member, Member, str]]:
        """Every pair within the mode range whose bracket leaves the family."""
        failures = []
        members = self.members_in_range(mode_range)
        for a in members:
            for b in members:
                try:
                    self.decompose_bracket(a, b)
                except ClosureFailure as e:
                    failures.append((a, b, str(e)))
        return failures


def format_member(member: Member) -> str:
    return f"{member[0]}[{member[1]}]"


def format_combination(coordinates: Mapping[Member, Scalar]) -> str:
    """Deterministic rendering of a decomposition such as 'L[1] + 2 R11[1]'."""
    ordered = sorted(coordinates.items(), key=lambda item: (item[0][1], item[0][0]))
    return format_linear((as_coefficient(value), [format_member(member)]) for member, value in ordered)


def s2_family() -> LabeledFamily:
    return LabeledFamily("S'(2,0)", S2_LABELS, s2_basis, vf_bracket, S2_PARITY)


def k4_family() -> LabeledFamily:
    return LabeledFamily(
        "K'(4)", K4_LABELS, lambda label, n: k4_basis(label, n, ZERO_H), poisson_bracket, K4_PARITY,
        excluded=lambda label, n: label == "G3" and n == 0,
    )


def s_alpha_family(copy: int, alpha: Optional[Scalar] = None, h_deformed: bool = False,
                   cutoff: int = DEFAULT_CUTOFF) -> LabeledFamily:
    """S^copy_alpha with the Poisson bracket, or (1/h)[,]_h when deformed."""
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    if h_deformed:
        def bracket(a, b):
            return deformed_bracket(a, b, cutoff)
    else:
        bracket = poisson_bracket
    return LabeledFamily(
        f"S{copy}_alpha" + ("_h" if h_deformed else ""),
        S_ALPHA_LABELS[copy],
        lambda label, n: s_alpha_basis(copy, label, n, alpha, h_deformed),
        bracket,
        S_ALPHA_PARITY,
    )
