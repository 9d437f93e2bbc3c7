from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple, Union

from .errors import ClassArgumentError, PreconditionError

Number = Union[int, Fraction]
GramMatrix = Tuple[Tuple[int, int], Tuple[int, int]]


class LatticeType(Enum):
    """The two possible Neron-Severi lattices of a fake quadric."""
    EVEN = "even"  # hyperbolic plane U
    ODD = "odd"    # <1> + <-1>

    @property
    def gram(self) -> GramMatrix:
        """Gram matrix in the basis (H, F)."""
        if self is LatticeType.EVEN:
            return ((0, 1), (1, 0))
        return ((1, 0), (0, -1))

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.gram
        return a * d - b * c

    def pairing(self, ax: Number, ay: Number, bx: Number, by: Number) -> Number:
        """Evaluate (ax, ay) G (bx, by)^T exactly; works for int and Fraction entries."""
        (g11, g12), (g21, g22) = self.gram
        return ax * (g11 * bx + g12 * by) + ay * (g21 * bx + g22 * by)

    @classmethod
    def from_name(cls, name: str) -> LatticeType:
        """Parse "even" / "odd" (case-insensitive)."""
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise PreconditionError(f"Unknown lattice type '{name}'. Expected 'even' or 'odd'.")


@dataclass(frozen=True, order=True)
class DivisorClass:
    """
    A numerical divisor class x*H + y*F.
    Ordering is lexicographic on (x, y), which is the canonical sort order
    for every list the toolkit emits.
    """
    x: int
    y: int

    def __post_init__(self):
        if isinstance(self.x, bool) or isinstance(self.y, bool) \
                or not isinstance(self.x, int) or not isinstance(self.y, int):
            raise ClassArgumentError(f"Divisor class coefficients must be integers, got ({self.x!r}, {self.y!r})")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x - other.x, self.y - other.y)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.x, -self.y)

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return DivisorClass(k * self.x, k * self.y)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    @classmethod
    def zero(cls) -> DivisorClass:
        return cls(0, 0)

    @classmethod
    def from_dict(cls, data: Dict) -> DivisorClass:
        """Create a class from its wire form {"x": int, "y": int}."""
        try:
            return cls(data["x"], data["y"])
        except (KeyError, TypeError) as e:
            raise ClassArgumentError(f"Invalid divisor class object {data!r}: {e}")

    def to_dict(self) -> Dict[str, int]:
        return {"x": self.x, "y": self.y}

    def label(self) -> str:
        """Human-readable form in the (H, F) basis, e.g. "2H-F" or "0"."""
        if self.is_zero:
            return "0"
        parts = []
        for coefficient, symbol in ((self.x, "H"), (self.y, "F")):
            if coefficient == 0:
                continue
            magnitude = "" if abs(coefficient) == 1 else str(abs(coefficient))
            sign = "-" if coefficient < 0 else "+"
            parts.append((sign, f"{magnitude}{symbol}"))
        text = "".join(f"{sign}{term}" for sign, term in parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class RationalClass:
    """A class with rational coefficients; only produced by the even-to-odd embedding."""
    x: Fraction
    y: Fraction

    def __post_init__(self):
        # Fraction normalises its denominator on construction.
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def to_divisor_class(self) -> DivisorClass:
        """Convert to an integral class; raises if a denominator is not 1."""
        if not self.is_integral:
            raise PreconditionError(f"Class ({self.x}, {self.y}) is not integral")
        return DivisorClass(int(self.x), int(self.y))

    def to_dict(self) -> Dict[str, str]:
        return {"x": str(self.x), "y": str(self.y)}


# Canonical classes fixed by the choice of basis in each lattice.
_CANONICAL = {
    LatticeType.EVEN: DivisorClass(2, 2),
    LatticeType.ODD: DivisorClass(3, -1),
}


@dataclass(frozen=True)
class SurfaceModel:
    """
    The numerical data of a fake quadric: its lattice type and the invariants
    q = p_g = 0, chi(O) = 1, K^2 = 8, c2 = 4, Delta = 3*c2 - K^2 = 4.

    Construct through `SurfaceModel.even()`, `SurfaceModel.odd()` or
    `SurfaceModel.for_type()`; any other field combination is rejected.
    """
    lattice: LatticeType
    canonical: DivisorClass
    k_squared: int = 8
    chi_structure_sheaf: int = 1
    c2: int = 4
    delta: int = 4
    irregularity: int = 0
    geometric_genus: int = 0

    def __post_init__(self):
        expected = _CANONICAL[self.lattice]
        if self.canonical != expected:
            raise PreconditionError(
                f"{self.lattice.value} model requires canonical class {expected}, got {self.canonical}")
        k = self.canonical
        k_squared = self.lattice.pairing(k.x, k.y, k.x, k.y)
        if self.k_squared != 8 or k_squared != self.k_squared:
            raise PreconditionError(f"K^2 must be 8 (field {self.k_squared}, computed {k_squared})")
        if self.irregularity != 0 or self.geometric_genus != 0:
            raise PreconditionError("A fake quadric has q = p_g = 0")
        if self.chi_structure_sheaf != 1 - self.irregularity + self.geometric_genus:
            raise PreconditionError("chi(O_S) must equal 1 - q + p_g = 1")
        if self.c2 != 12 * self.chi_structure_sheaf - self.k_squared:
            raise PreconditionError("Noether's formula requires c2 = 12*chi - K^2 = 4")
        if self.delta != 3 * self.c2 - self.k_squared:
            raise PreconditionError("Delta must equal 3*c2 - K^2 = 4")

    @classmethod
    def for_type(cls, lattice: LatticeType) -> SurfaceModel:
        return cls(lattice=lattice, canonical=_CANONICAL[lattice])

    @classmethod
    def even(cls) -> SurfaceModel:
        return cls.for_type(LatticeType.EVEN)

    @classmethod
    def odd(cls) -> SurfaceModel:
        return cls.for_type(LatticeType.ODD)

    @property
    def is_even(self) -> bool:
        return self.lattice is LatticeType.EVEN

    def to_dict(self) -> Dict:
        return {
            "lattice": self.lattice.value,
            "canonical": self.canonical.to_dict(),
            "k_squared": self.k_squared,
            "chi_structure_sheaf": self.chi_structure_sheaf,
            "c2": self.c2,
            "delta": self.delta,
            "irregularity": self.irregularity,
            "geometric_genus": self.geometric_genus,
        }
