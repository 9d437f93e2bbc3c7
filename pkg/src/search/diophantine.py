"""
The numerical condition for a fake quadric to sit in P^4 with hyperplane
class D, and its reductions to one-variable quadratics on the boundary lines
of the ample cone.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, List
import logging

from sympy import Expr, Poly, Symbol, expand, symbols, sympify

from ..models.certificate import EdgeCase
from ..models.errors import ConsistencyFault
from ..models.lattice import DivisorClass, SurfaceModel
from ..theory.intersection import k_dot, self_intersection
from ..utils.helpers import is_perfect_square, quadratic_integer_roots

logger = logging.getLogger(__name__)

X, Y = symbols("x y", integer=True)

EVEN_EQUATION_ID = "even: 2x^2y^2 - 10xy - 5x - 5y - 2 = 0"
ODD_EQUATION_ID = "odd: (x^2 - y^2 - 5)^2 - 5(3x + y) - 29 = 0"


def equation_id(model: SurfaceModel) -> str:
    return EVEN_EQUATION_ID if model.is_even else ODD_EQUATION_ID


def double_point_residual(model: SurfaceModel, d: DivisorClass) -> int:
    """
    Left side of the double point formula for a surface in P^4,
    d^2 - 10d - 5 D.K - 2K^2 + 12 + 12 p_a(S), with d = D^2 and
    p_a(S) = chi(O_S) - 1 = 0. Zero iff D passes the numerical test.
    """
    degree = self_intersection(model, d)
    surface_genus = model.chi_structure_sheaf - 1
    return degree * degree - 10 * degree - 5 * k_dot(model, d) - 2 * model.k_squared + 12 + 12 * surface_genus


def specialized_residual(model: SurfaceModel, d: DivisorClass) -> int:
    """
    The double point residual written in coordinates: halved on the even
    model, verbatim on the odd model.
    """
    x, y = d.x, d.y
    if model.is_even:
        return 2 * x * x * y * y - 10 * x * y - 5 * x - 5 * y - 2
    u = x * x - y * y - 5
    return u * u - 5 * (3 * x + y) - 29


def residual_expression(model: SurfaceModel) -> Expr:
    """specialized_residual as a sympy polynomial in x and y."""
    if model.is_even:
        return 2 * X**2 * Y**2 - 10 * X * Y - 5 * X - 5 * Y - 2
    return (X**2 - Y**2 - 5)**2 - 5 * (3 * X + Y) - 29


@dataclass(frozen=True)
class EdgeLine:
    """A boundary line of the ample cone, given by a substitution that leaves one free variable."""
    constraint: str
    variable: Symbol
    substitution: Dict[Symbol, Expr]

    def class_at(self, value: int) -> DivisorClass:
        """The divisor class on this line whose free coordinate equals `value`."""
        point = {self.variable: value}
        x = sympify(self.substitution.get(X, X)).subs(point)
        y = sympify(self.substitution.get(Y, Y)).subs(point)
        return DivisorClass(int(x), int(y))


def edge_lines(model: SurfaceModel) -> List[EdgeLine]:
    """
    Ample classes not covered by the finite region. The even equation is
    symmetric in x and y, so the lines y = 1 and y = 2 repeat x = 1 and x = 2.
    """
    if model.is_even:
        return [
            EdgeLine("x = 1 (y = 1 by symmetry)", Y, {X: 1}),
            EdgeLine("x = 2 (y = 2 by symmetry)", Y, {X: 2}),
        ]
    return [
        EdgeLine("x + y = 1", X, {Y: 1 - X}),
        EdgeLine("x - y = 1", X, {Y: X - 1}),
        EdgeLine("x - y = 2", X, {Y: X - 2}),
    ]


def reduce_edge(model: SurfaceModel, line: EdgeLine) -> EdgeCase:
    """
    Restrict the embedding equation to one boundary line and test the
    resulting quadratic for integer roots.

    The discriminant is taken of the primitive part (coefficients divided by
    their gcd); the removed content is recorded alongside it.

    Raises:
        ConsistencyFault: If the restriction is not a quadratic.
    """
    poly = Poly(expand(residual_expression(model).subs(line.substitution)), line.variable)
    if poly.degree() != 2:
        raise ConsistencyFault("edge_reduction_degree", 2, poly.degree(), detail=line.constraint)

    content, primitive = poly.primitive()
    raw = tuple(int(c) for c in poly.all_coeffs())
    reduced = tuple(int(c) for c in primitive.all_coeffs())
    discriminant = int(primitive.discriminant())
    square = is_perfect_square(discriminant)
    integer_roots = quadratic_integer_roots(*reduced) if square else []

    logger.debug(f"Edge {line.constraint}: {reduced} disc={discriminant} square={square}")
    return EdgeCase(
        constraint=line.constraint,
        variable=str(line.variable),
        raw_coefficients=raw,
        content=int(content),
        reduced_coefficients=reduced,
        discriminant=discriminant,
        is_perfect_square=square,
        integer_roots=tuple(integer_roots),
    )


def edge_reductions(model: SurfaceModel) -> List[EdgeCase]:
    return [reduce_edge(model, line) for line in edge_lines(model)]
