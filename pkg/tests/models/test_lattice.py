import pytest
from fractions import Fraction

from src.models.errors import ClassArgumentError, PreconditionError
from src.models.lattice import DivisorClass, LatticeType, RationalClass, SurfaceModel


def test_gram_matrices():
    """Test the Gram matrices and determinants of both lattice types."""
    assert LatticeType.EVEN.gram == ((0, 1), (1, 0))
    assert LatticeType.ODD.gram == ((1, 0), (0, -1))
    assert LatticeType.EVEN.determinant == -1
    assert LatticeType.ODD.determinant == -1


def test_pairing_accepts_fractions():
    """Test that the pairing stays exact with rational entries."""
    assert LatticeType.ODD.pairing(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)) == 0
    assert LatticeType.EVEN.pairing(Fraction(1, 2), 0, 0, 3) == Fraction(3, 2)


@pytest.mark.parametrize("name,expected", [("even", LatticeType.EVEN), ("ODD", LatticeType.ODD), (" odd ", LatticeType.ODD)])
def test_lattice_from_name(name, expected):
    """Test parsing lattice names."""
    assert LatticeType.from_name(name) is expected


def test_lattice_from_unknown_name():
    """Test that an unknown lattice name is rejected."""
    with pytest.raises(PreconditionError):
        LatticeType.from_name("hyperbolic")


def test_divisor_class_arithmetic():
    """Test addition, subtraction, negation and scaling of classes."""
    h, f = DivisorClass(1, 0), DivisorClass(0, 1)
    assert h + f == DivisorClass(1, 1)
    assert 2 * (h - f) == DivisorClass(2, -2)
    assert (h - f) * 3 == DivisorClass(3, -3)
    assert -h == DivisorClass(-1, 0)
    assert DivisorClass.zero().is_zero


def test_divisor_class_ordering_is_lexicographic():
    """Test the canonical sort order."""
    classes = [DivisorClass(1, 1), DivisorClass(0, 3), DivisorClass(1, -1), DivisorClass(2, -2)]
    assert sorted(classes) == [DivisorClass(0, 3), DivisorClass(1, -1), DivisorClass(1, 1), DivisorClass(2, -2)]


@pytest.mark.parametrize("x,y", [(1.5, 0), (0, "2"), (True, 1)])
def test_divisor_class_rejects_non_integers(x, y):
    """Test that only integer coefficients are accepted."""
    with pytest.raises(ClassArgumentError):
        DivisorClass(x, y)


@pytest.mark.parametrize("x,y,label", [
    (0, 0, "0"),
    (1, 0, "H"),
    (0, 1, "F"),
    (1, -1, "H-F"),
    (2, -1, "2H-F"),
    (2, 2, "2H+2F"),
    (0, -3, "-3F"),
    (-1, 2, "-H+2F"),
])
def test_divisor_class_label(x, y, label):
    """Test the human-readable (H, F) form."""
    assert DivisorClass(x, y).label() == label


def test_divisor_class_dict_round_trip():
    """Test the wire form of a class."""
    d = DivisorClass(3, -1)
    assert d.to_dict() == {"x": 3, "y": -1}
    assert DivisorClass.from_dict(d.to_dict()) == d
    assert str(d) == "(3,-1)"


def test_divisor_class_from_bad_dict():
    """Test that a malformed wire object is rejected."""
    with pytest.raises(ClassArgumentError):
        DivisorClass.from_dict({"x": 1})


def test_rational_class_integrality():
    """Test conversion between rational and integral classes."""
    half = RationalClass(Fraction(1, 2), Fraction(1, 2))
    assert not half.is_integral
    with pytest.raises(PreconditionError):
        half.to_divisor_class()
    assert RationalClass(2, -1).to_divisor_class() == DivisorClass(2, -1)
    assert half.to_dict() == {"x": "1/2", "y": "1/2"}


def test_surface_models(even_model, odd_model):
    """Test the invariants recorded on each model."""
    assert even_model.canonical == DivisorClass(2, 2)
    assert odd_model.canonical == DivisorClass(3, -1)
    for model in (even_model, odd_model):
        assert model.k_squared == 8
        assert model.chi_structure_sheaf == 1
        assert model.c2 == 4
        assert model.delta == 4
        assert model.irregularity == model.geometric_genus == 0
    assert even_model.is_even and not odd_model.is_even
    assert SurfaceModel.for_type(LatticeType.ODD) == odd_model


def test_surface_model_rejects_wrong_canonical():
    """Test that a model with the wrong canonical class cannot be built."""
    with pytest.raises(PreconditionError):
        SurfaceModel(lattice=LatticeType.EVEN, canonical=DivisorClass(3, -1))


def test_surface_model_rejects_wrong_invariants():
    """Test that inconsistent invariants are rejected."""
    with pytest.raises(PreconditionError):
        SurfaceModel(lattice=LatticeType.ODD, canonical=DivisorClass(3, -1), c2=5)
    with pytest.raises(PreconditionError):
        SurfaceModel(lattice=LatticeType.ODD, canonical=DivisorClass(3, -1), geometric_genus=1)


def test_surface_model_to_dict(odd_model):
    """Test the serialized model."""
    data = odd_model.to_dict()
    assert data["lattice"] == "odd"
    assert data["canonical"] == {"x": 3, "y": -1}
    assert data["delta"] == 4
