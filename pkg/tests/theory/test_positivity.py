import pytest

from src.models.errors import ModelMismatchError, PreconditionError
from src.models.lattice import DivisorClass
from src.theory.intersection import k_dot, self_intersection
from src.theory.positivity import (
    cone_rays,
    curve_class_admissible,
    effective_necessary,
    is_ample,
    is_big,
    is_nef,
    low_canonical_degree_classes,
    nef_not_ample_rays,
    negative_curve_hypothesis,
    positivity_verdict,
    rational_curve_exclusion,
)
from src.theory.riemann_roch import arithmetic_genus

BOX = 40


def box_classes():
    return [DivisorClass(x, y) for x in range(-BOX, BOX + 1) for y in range(-BOX, BOX + 1)]


@pytest.mark.parametrize("lattice,x,y,expected", [
    ("even", -1, 3, False),
    ("even", 0, 1, True),
    ("even", 1, 0, True),
    ("even", 0, 0, False),
    ("odd", 1, -1, True),
    ("odd", 2, 3, False),
    ("odd", 0, 1, False),
    ("odd", 0, 0, False),
])
def test_curve_class_admissible(even_model, odd_model, lattice, x, y, expected):
    """Test admissibility of individual classes."""
    model = even_model if lattice == "even" else odd_model
    assert curve_class_admissible(model, DivisorClass(x, y)) is expected


def test_admissible_iff_numerical_conditions(model):
    """Test admissible <=> p_a >= 1, K.C > 0 and C^2 >= 0 over a box."""
    for c in box_classes():
        numerical = (arithmetic_genus(model, c) >= 1 and k_dot(model, c) > 0 and self_intersection(model, c) >= 0)
        assert curve_class_admissible(model, c) == numerical, c


def test_admissible_classes_have_genus_at_least_two(model):
    """Test the genus floor p_a >= 2 on admissible classes."""
    for c in box_classes():
        if curve_class_admissible(model, c):
            assert arithmetic_genus(model, c) >= 2, c


@pytest.mark.parametrize("lattice,x,y,k_dot_value", [
    ("even", -1, 2, 2),
    ("odd", 0, 2, 2),
    ("odd", 1, 3, 6),
])
def test_rational_curve_exclusion(even_model, odd_model, lattice, x, y, k_dot_value):
    """Test that genus-zero classes with K.C > 0 are excluded by the bound K.C <= 0."""
    model = even_model if lattice == "even" else odd_model
    report = rational_curve_exclusion(model, DivisorClass(x, y))
    assert report.p_a == 0
    assert report.k_dot == k_dot_value
    assert report.lm95_bound == 0
    assert report.to_dict()["lm95_bound"] == 0
    assert report.excluded


def test_rational_curve_exclusion_requires_genus_zero(odd_model):
    """Test that classes with p_a != 0 are rejected; (1,2) has p_a = 2."""
    with pytest.raises(PreconditionError):
        rational_curve_exclusion(odd_model, DivisorClass(1, 2))


def test_rational_curve_exclusion_not_excluded(even_model):
    """Test a genus-zero class with K.C <= 0 is reported but not excluded."""
    report = rational_curve_exclusion(even_model, DivisorClass(-1, -1))
    assert report.p_a == 0
    assert report.k_dot == -4
    assert not report.excluded
    assert report.to_dict()["class"] == {"x": -1, "y": -1}


@pytest.mark.parametrize("lattice,x,y,expected", [
    ("even", 2, 2, True),
    ("even", 0, 0, True),
    ("even", -1, 4, False),
    ("odd", 1, -2, False),
    ("odd", 3, -1, True),
    ("odd", 0, 0, True),
])
def test_effective_necessary(even_model, odd_model, lattice, x, y, expected):
    """Test the necessary condition for effectiveness."""
    model = even_model if lattice == "even" else odd_model
    assert effective_necessary(model, DivisorClass(x, y)) is expected


@pytest.mark.parametrize("lattice,x,y,ample,nef,big", [
    ("even", 2, 2, True, True, True),
    ("even", 0, 5, False, True, False),
    ("even", 1, 0, False, True, False),
    ("even", 1, 1, True, True, True),
    ("even", 3, 0, False, True, False),
    ("odd", 3, -1, True, True, True),
    ("odd", 1, 1, False, True, False),
    ("odd", 0, 1, False, False, False),
    ("odd", 2, 1, True, True, True),
])
def test_ample_nef_big(even_model, odd_model, lattice, x, y, ample, nef, big):
    """Test the positivity notions on individual classes."""
    model = even_model if lattice == "even" else odd_model
    d = DivisorClass(x, y)
    assert is_ample(model, d) is ample
    assert is_nef(model, d) is nef
    assert is_big(model, d) is big


def test_zero_class_conventions(model):
    """Test the zero class is effective and nef but neither big, ample nor admissible."""
    zero = DivisorClass.zero()
    verdict = positivity_verdict(model, zero)
    assert verdict.effective_necessary and verdict.nef
    assert not verdict.big and not verdict.ample
    assert not curve_class_admissible(model, zero)


def test_ample_iff_nef_and_big(model):
    """Test ample <=> nef and big over a box."""
    for d in box_classes():
        assert is_ample(model, d) == (is_nef(model, d) and is_big(model, d)), d


def test_nef_ray_test_matches_closed_form(even_model, odd_model):
    """Test the ray test against x, y >= 0 (even) and x >= |y| (odd)."""
    for d in box_classes():
        assert is_nef(even_model, d) == (d.x >= 0 and d.y >= 0)
        assert is_nef(odd_model, d) == (d.x >= abs(d.y))


def test_positivity_verdict(even_model, odd_model):
    """Test the verdict and its rule tag."""
    verdict = positivity_verdict(even_model, DivisorClass(2, 2))
    assert verdict.ample and verdict.nef and verdict.big and verdict.effective_necessary
    assert verdict.governing_rule == "thm-2.2-ii"
    assert positivity_verdict(odd_model, DivisorClass(3, -1)).to_dict()["governing_rule"] == "thm-3.8-ii"


@pytest.mark.parametrize("lattice, x, y, expected", [
    ("even", 2, 2, "thm-2.2-ii"),
    ("even", 0, 3, "thm-2.2-ii"),
    ("even", 0, 0, "thm-2.2-ii"),
    ("even", -1, 3, "thm-2.2-i"),
    ("even", 3, -1, "thm-2.2-i"),
    ("odd", 3, -1, "thm-3.8-ii"),
    ("odd", 1, 1, "thm-3.8-ii"),
    ("odd", 1, 2, "thm-3.8-i"),
    ("odd", -1, 0, "thm-3.8-i"),
])
def test_governing_rule(even_model, odd_model, lattice, x, y, expected):
    """Test the rule tag names the effectiveness part when it fails and the ampleness part otherwise."""
    model = even_model if lattice == "even" else odd_model
    assert positivity_verdict(model, DivisorClass(x, y)).governing_rule == expected


def test_canonical_class_is_ample(model):
    """Test that K is ample on both models."""
    assert is_ample(model, model.canonical)


def test_cone_rays(even_model, odd_model):
    """Test the effective and nef cone rays."""
    even = cone_rays(even_model)
    assert set(even.effective_rays) == {DivisorClass(1, 0), DivisorClass(0, 1)}
    assert even.nef_rays == even.effective_rays
    odd = cone_rays(odd_model)
    assert set(odd.effective_rays) == {DivisorClass(1, 1), DivisorClass(1, -1)}
    assert odd.nef_rays == odd.effective_rays
    for model, rays in ((even_model, even), (odd_model, odd)):
        assert all(self_intersection(model, r) == 0 for r in rays.effective_rays)


def test_nef_not_ample_rays(model):
    """Test every nef, non-ample class in the box is a multiple of a listed ray."""
    rays = nef_not_ample_rays(model)
    assert rays == cone_rays(model).nef_rays
    for d in box_classes():
        if is_nef(model, d) and not is_ample(model, d):
            assert d.is_zero or any(d == k * r for r in rays for k in range(1, 2 * BOX + 1)), d


@pytest.mark.parametrize("x0,self_int,p_a", [(0, -1, 1), (1, -3, 2), (5, -11, 6)])
def test_negative_curve_hypothesis(odd_model, x0, self_int, p_a):
    """Test the contradiction for a hypothetical negative curve x0*H + (x0+1)*F."""
    report = negative_curve_hypothesis(odd_model, x0)
    assert report.divisor == DivisorClass(x0, x0 + 1)
    assert report.self_int == self_int
    assert report.p_a == p_a
    assert report.contradiction


def test_negative_curve_hypothesis_errors(even_model, odd_model):
    """Test model and argument validation."""
    with pytest.raises(ModelMismatchError):
        negative_curve_hypothesis(even_model, 0)
    with pytest.raises(PreconditionError):
        negative_curve_hypothesis(odd_model, -1)


def test_low_canonical_degree_classes(even_model, odd_model):
    """Test the curve classes with K.C <= 2."""
    assert low_canonical_degree_classes(even_model) == [DivisorClass(0, 1), DivisorClass(1, 0)]
    assert low_canonical_degree_classes(odd_model) == [DivisorClass(1, -1)]
    assert low_canonical_degree_classes(odd_model, max_k_dot=4) == [
        DivisorClass(1, -1), DivisorClass(1, 0), DivisorClass(1, 1), DivisorClass(2, -2)]
    with pytest.raises(PreconditionError):
        low_canonical_degree_classes(even_model, max_k_dot=-1)
