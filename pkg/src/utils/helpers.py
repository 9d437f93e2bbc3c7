from __future__ import annotations
from typing import List, Tuple
import re

from sympy import integer_nthroot

from ..models.errors import ClassArgumentError
from ..models.lattice import DivisorClass

_CLASS_PATTERN = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def exact_sqrt(n: int) -> Tuple[int, bool]:
    """
    Integer square root without floating point.

    Returns:
        (floor(sqrt(n)), True if n is a perfect square). Negative n gives (0, False).
    """
    if n < 0:
        return 0, False
    root, exact = integer_nthroot(n, 2)
    return int(root), bool(exact)


def is_perfect_square(n: int) -> bool:
    return exact_sqrt(n)[1]


def quadratic_integer_roots(a: int, b: int, c: int) -> List[int]:
    """Sorted integer solutions of a*t^2 + b*t + c = 0, a != 0."""
    root, square = exact_sqrt(b * b - 4 * a * c)
    if not square:
        return []
    return sorted(n // (2 * a) for n in {-b - root, -b + root} if n % (2 * a) == 0)


def ceil_sqrt(n: int) -> int:
    """Smallest m >= 0 with m*m >= n."""
    if n <= 0:
        return 0
    root, exact = exact_sqrt(n)
    return root if exact else root + 1


def parse_class_arg(text: str) -> DivisorClass:
    """
    Parse a divisor class written as "x,y" (e.g. "3,-1").

    Raises:
        ClassArgumentError: If the text is not two comma-separated integers.
    """
    match = _CLASS_PATTERN.match(text or "")
    if not match:
        raise ClassArgumentError(f"Expected a class written as 'x,y' with integer x and y, got '{text}'")
    return DivisorClass(int(match.group(1)), int(match.group(2)))


def in_consistency_sample(d: DivisorClass, mode: str, stride: int) -> bool:
    """Whether the generic-formula cross-check runs for this class under the given mode."""
    if mode == "always":
        return True
    if mode == "off":
        return False
    return (31 * d.x + d.y) % stride == 0
