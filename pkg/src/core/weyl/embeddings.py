#!/usr/bin/env python3
"""
Matrix realizations of K'(4)^ and of Γ(2, -1-α, α-1) over the Weyl algebra.

- ``embed_I``: the sixteen fields as (2|2) matrices; I(G3[0]) is the central element.
- ``embed_J``: the second embedding written through ``embed_I``.
- ``gamma_matrix``: the seventeen Γ generators as explicit matrices.
- ``gamma_matrix_from_dictionary``: the same generators as I-combinations.
- ``grading_component``: block-shape verdict for degree-zero matrices.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from ..arithmetic.coefficient import Coefficient, Scalar, as_coefficient, param
from ..arithmetic.linear_algebra import SpanBasis
from ..contact.cocycles import CocycleTable, k4_cocycle_table
from ..contact.field_families import K4_LABELS, LabeledFamily, Member, format_member, k4_family
from ..errors import ShapeViolation, UnknownLabel
from .supermatrix import WeylSuperMatrix, supermatrix_bracket
from .weyl_algebra import WeylElement

logger = logging.getLogger(__name__)

GAMMA_LABELS: Tuple[str, ...] = (
    "E1", "F1", "H1", "E2", "F2", "H2", "E3", "F3", "H3",
    "T1", "T2", "T3", "T4", "D1", "D2", "D3", "D4",
)


def _t(n: int, scalar: Scalar = 1) -> WeylElement:
    return WeylElement.monomial(as_coefficient(scalar), n, 0)


def _td(n: int, shift: Scalar = 0, scalar: Scalar = 1) -> WeylElement:
    """scalar * t^n (d + shift)."""
    scalar = as_coefficient(scalar)
    return WeylElement({(n, 1): scalar, (n, 0): scalar * as_coefficient(shift)})


def _dt(n: int) -> WeylElement:
    """d t^n = t^n d + n t^n."""
    return _td(n, n)


def _matrix(entries: Mapping[Tuple[int, int], WeylElement]) -> WeylSuperMatrix:
    return WeylSuperMatrix.from_entries(entries)


def central_element() -> WeylSuperMatrix:
    return WeylSuperMatrix.identity()


def embed_I(label: str, n: int) -> WeylSuperMatrix:
    """Image of label[n] under the first matrix embedding."""
    t = _t(n)
    if label == "L":
        return WeylSuperMatrix.diagonal(_dt(n), _td(n), _td(n), _td(n))
    if label == "G3":
        return WeylSuperMatrix.identity(1, n)
    table: Dict[str, Dict[Tuple[int, int], WeylElement]] = {
        "R11": {(2, 2): t, (3, 3): t},
        "R22": {(2, 2): t, (4, 4): t},
        "R12": {(3, 4): t},
        "R21": {(4, 3): t},
        "G0": {(1, 2): -t},
        "Q": {(2, 1): t},
        "Y1": {(1, 3): _dt(n), (4, 2): t},
        "Y2": {(1, 4): _dt(n), (3, 2): -t},
        "X1": {(2, 4): _td(n), (3, 1): t},
        "X2": {(2, 3): -_td(n), (4, 1): t},
        "G1": {(1, 4): -t},
        "G2": {(1, 3): t},
        "Z1": {(2, 3): t},
        "Z2": {(2, 4): t},
    }
    if label not in table:
        raise UnknownLabel(f"Unknown K'(4) label: {label}")
    return _matrix(table[label])


# label -> [(source label, factor as a function of n)]
J_DICTIONARY: Dict[str, List[Tuple[str, Callable[[int], int]]]] = {
    "L": [("L", lambda n: 1), ("G3", lambda n: -n), ("R11", lambda n: n), ("R22", lambda n: n)],
    "Q": [("G0", lambda n: 1)],
    "R11": [("G3", lambda n: 1), ("R11", lambda n: -1)],
    "R22": [("G3", lambda n: 1), ("R22", lambda n: -1)],
    "R12": [("R21", lambda n: -1)],
    "R21": [("R12", lambda n: -1)],
    "G0": [("Q", lambda n: 1)],
    "G3": [("G3", lambda n: 1)],
    "Y1": [("X1", lambda n: 1), ("Z2", lambda n: n)],
    "Y2": [("X2", lambda n: 1), ("Z1", lambda n: -n)],
    "X1": [("Y1", lambda n: 1), ("G2", lambda n: -n)],
    "X2": [("Y2", lambda n: 1), ("G1", lambda n: n)],
    "G1": [("Z1", lambda n: 1)],
    "G2": [("Z2", lambda n: 1)],
    "Z1": [("G1", lambda n: 1)],
    "Z2": [("G2", lambda n: 1)],
}


def embed_J(label: str, n: int) -> WeylSuperMatrix:
    """Image of label[n] under the second embedding, expanded through I."""
    if label not in J_DICTIONARY:
        raise UnknownLabel(f"Unknown K'(4) label: {label}")
    result = WeylSuperMatrix.zero()
    for source, factor in J_DICTIONARY[label]:
        scale = factor(n)
        if scale:
            result = result + embed_I(source, n).scale(scale)
    return result


def embed_combination(coordinates: Mapping[Member, Coefficient],
                      embedding: Callable[[str, int], WeylSuperMatrix] = embed_I) -> WeylSuperMatrix:
    result = WeylSuperMatrix.zero()
    for (label, n), value in coordinates.items():
        result = result + embedding(label, n).scale(value)
    return result


def gamma_matrix(label: str, alpha: Optional[Scalar] = None) -> WeylSuperMatrix:
    """Explicit (2|2) matrix of a Γ(2, -1-α, α-1) generator."""
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    one = _t(0)
    table: Dict[str, Callable[[], WeylSuperMatrix]] = {
        "T1": lambda: _matrix({(1, 3): _td(1, 1), (4, 2): _t(1)}),
        "T2": lambda: _matrix({(1, 4): _td(1, 1), (3, 2): -_t(1)}),
        "T3": lambda: _matrix({(2, 4): _td(1, 1), (3, 1): _t(1)}),
        "T4": lambda: _matrix({(2, 3): -_td(1, 1), (4, 1): _t(1)}),
        "D1": lambda: _matrix({(2, 4): _td(-1, alpha), (3, 1): _t(-1)}),
        "D2": lambda: _matrix({(2, 3): -_td(-1, alpha), (4, 1): _t(-1)}),
        "D3": lambda: _matrix({(1, 3): _td(-1, alpha), (4, 2): _t(-1)}),
        "D4": lambda: _matrix({(1, 4): _td(-1, alpha), (3, 2): -_t(-1)}),
        "E1": lambda: WeylSuperMatrix.diagonal(_td(2, 2), _td(2, 2), _td(2, 1), _td(2, 1)),
        "F1": lambda: WeylSuperMatrix.diagonal(
            _td(-2, alpha - 1), _td(-2, alpha - 1), _td(-2, alpha), _td(-2, alpha)),
        "H1": lambda: WeylSuperMatrix.diagonal(*[_td(0, (alpha + 1) / 2)] * 4),
        "E2": lambda: _matrix({(2, 1): one}),
        "F2": lambda: _matrix({(1, 2): -one}),
        "H2": lambda: _matrix({(1, 1): -one, (2, 2): one}),
        "E3": lambda: _matrix({(3, 4): one}),
        "F3": lambda: _matrix({(4, 3): one}),
        "H3": lambda: _matrix({(3, 3): one, (4, 4): -one}),
    }
    if label not in table:
        raise UnknownLabel(f"Unknown Γ label: {label}")
    return table[label]()


def gamma_dictionary(alpha: Optional[Scalar] = None) -> Dict[str, List[Tuple[Member, Coefficient]]]:
    """Each Γ generator as a combination of I-images; ("G3", 0) is the central element."""
    alpha = param("alpha") if alpha is None else as_coefficient(alpha)
    one = Coefficient(1)
    return {
        "T1": [(("Y1", 1), one)],
        "T2": [(("Y2", 1), one)],
        "T3": [(("X1", 1), one), (("Z2", 1), one)],
        "T4": [(("X2", 1), one), (("Z1", 1), -one)],
        "D1": [(("X1", -1), one), (("Z2", -1), alpha)],
        "D2": [(("X2", -1), one), (("Z1", -1), -alpha)],
        "D3": [(("Y1", -1), one), (("G2", -1), alpha + 1)],
        "D4": [(("Y2", -1), one), (("G1", -1), -(alpha + 1))],
        "E1": [(("L", 2), one), (("R11", 2), one), (("R22", 2), one)],
        "F1": [(("L", -2), one), (("G3", -2), alpha + 1), (("R11", -2), -one), (("R22", -2), -one)],
        "H1": [(("L", 0), one), (("G3", 0), (alpha + 1) / 2)],
        "E2": [(("Q", 0), one)],
        "F2": [(("G0", 0), one)],
        "H2": [(("R11", 0), one), (("R22", 0), one), (("G3", 0), -one)],
        "E3": [(("R12", 0), one)],
        "F3": [(("R21", 0), one)],
        "H3": [(("R11", 0), one), (("R22", 0), -one)],
    }


def gamma_matrix_from_dictionary(label: str, alpha: Optional[Scalar] = None) -> WeylSuperMatrix:
    combination = gamma_dictionary(alpha).get(label)
    if combination is None:
        raise UnknownLabel(f"Unknown Γ label: {label}")
    result = WeylSuperMatrix.zero()
    for (source, n), value in combination:
        result = result + embed_I(source, n).scale(value)
    return result


# ----------------------------------------------------------------------
# embedding checks
# ----------------------------------------------------------------------

@dataclass
class EmbeddingFailure:
    """A pair where [E(a), E(b)] differs from E([a, b]) + c(a, b) C."""

    a: Member
    b: Member
    residual: Optional[WeylSuperMatrix] = None
    message: str = ""

    def __str__(self) -> str:
        head = f"[{format_member(self.a)}, {format_member(self.b)}]"
        return f"{head}: {self.message}" if self.message else head


def central_embedding_check(mode_range: int,
                            embedding: Callable[[str, int], WeylSuperMatrix] = embed_I,
                            family: Optional[LabeledFamily] = None,
                            table: Optional[CocycleTable] = None) -> List[EmbeddingFailure]:
    """
    For all label pairs with modes in [-mode_range, mode_range] compare the
    matrix superbracket with the image of the field bracket plus the central term.
    """
    family = family or k4_family()
    table = table or k4_cocycle_table()
    central = embedding("G3", 0)
    members = family.members_in_range(mode_range)
    images = {member: embedding(*member) for member in members}
    failures: List[EmbeddingFailure] = []
    for a in members:
        for b in members:
            actual = supermatrix_bracket(images[a], images[b])
            expected = embed_combination(family.decompose_bracket(a, b), embedding)
            central_value = table.value(a, b)
            if not central_value.is_zero():
                expected = expected + central.scale(central_value)
            residual = actual - expected
            if not residual.is_zero():
                failures.append(EmbeddingFailure(a, b, residual, "bracket mismatch"))
    logger.info(f"Embedding check over {len(members)} fields: {len(failures)} failures")
    return failures


def same_image_check(mode_range: int) -> List[str]:
    """Every I(a[n]) lies in the span of the J images at mode n, and conversely."""
    problems: List[str] = []
    for n in range(-mode_range, mode_range + 1):
        labels = [label for label in K4_LABELS if not (label == "G3" and n == 0)]
        extra = ["G3"] if n == 0 else []
        for source, target, name in ((embed_J, embed_I, "I"), (embed_I, embed_J, "J")):
            span = SpanBasis()
            for label in labels + extra:
                span.add(source(label, n), label=(label, n))
            for label in labels + extra:
                if not span.contains(target(label, n)):
                    problems.append(f"{name}({label}[{n}]) is outside the other image at mode {n}")
    return problems


# ----------------------------------------------------------------------
# degree-zero block shape
# ----------------------------------------------------------------------

@dataclass
class ShapeVerdict:
    """Decomposition of a degree-zero matrix into A, B, C, D blocks and a d*1 part."""

    a: Dict[Tuple[int, int], Coefficient] = field(default_factory=dict)
    b: Dict[Tuple[int, int], Coefficient] = field(default_factory=dict)
    c: Dict[Tuple[int, int], Coefficient] = field(default_factory=dict)
    d: Dict[Tuple[int, int], Coefficient] = field(default_factory=dict)
    central: Coefficient = field(default_factory=lambda: Coefficient(0))
    conforms: bool = True


def _c_tilde(c: Mapping[Tuple[int, int], Coefficient]) -> Dict[Tuple[int, int], Coefficient]:
    """E_ii -> E_jj (i != j), E_ij -> -E_ij (i != j), extended linearly."""
    zero = Coefficient(0)
    return {
        (1, 1): c.get((2, 2), zero),
        (2, 2): c.get((1, 1), zero),
        (1, 2): -c.get((1, 2), zero),
        (2, 1): -c.get((2, 1), zero),
    }


def grading_component(matrix: WeylSuperMatrix) -> ShapeVerdict:
    """
    Verify that a degree-zero matrix has the form [[A, B + d C~], [C, D]] + λ d 1
    with A, B, C, D constant and tr A = tr D.

    Raises:
        ShapeViolation: naming the offending entry.
    """
    zero = Coefficient(0)
    for (i, j, a, k), value in matrix.items():
        if a != 0:
            raise ShapeViolation(f"Entry ({i}, {j}) has t-degree {a}, expected 0", entry=(i, j))
        if k > 1:
            raise ShapeViolation(f"Entry ({i}, {j}) contains d^{k}", entry=(i, j))

    def part(i: int, j: int, k: int) -> Coefficient:
        return matrix.coefficient((i, j, 0, k))

    central = part(1, 1, 1)
    for i in range(1, 5):
        if part(i, i, 1) != central:
            raise ShapeViolation(f"Diagonal d-part at ({i}, {i}) differs from the central d*1 term", entry=(i, i))
    verdict = ShapeVerdict(central=central)
    for i in range(1, 5):
        for j in range(1, 5):
            even_rows, even_cols = i <= 2, j <= 2
            block_index = ((i - 1) % 2 + 1, (j - 1) % 2 + 1)
            if i != j and part(i, j, 1) != zero and not (even_rows and not even_cols):
                raise ShapeViolation(f"Entry ({i}, {j}) has a d-part outside the B block", entry=(i, j))
            value = part(i, j, 0)
            if value.is_zero():
                continue
            if even_rows and even_cols:
                verdict.a[block_index] = value
            elif even_rows:
                verdict.b[block_index] = value
            elif even_cols:
                verdict.c[block_index] = value
            else:
                verdict.d[block_index] = value
    expected_tilde = _c_tilde(verdict.c)
    for (bi, bj), value in expected_tilde.items():
        actual = part(bi, bj + 2, 1)
        if actual != value:
            raise ShapeViolation(
                f"d-part of entry ({bi}, {bj + 2}) is {actual}, expected {value} from the C block",
                entry=(bi, bj + 2),
            )
    trace_a = verdict.a.get((1, 1), zero) + verdict.a.get((2, 2), zero)
    trace_d = verdict.d.get((1, 1), zero) + verdict.d.get((2, 2), zero)
    if trace_a != trace_d:
        raise ShapeViolation(f"tr A = {trace_a} differs from tr D = {trace_d}", entry=(1, 1))
    return verdict
