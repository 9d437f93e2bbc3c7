import pytest

from src.models.errors import ConsistencyFault
from src.models.lattice import DivisorClass
from src.theory import riemann_roch
from src.theory.riemann_roch import (
    arithmetic_genus,
    euler_characteristic,
    generic_arithmetic_genus,
    generic_euler_characteristic,
    genus_report,
)

BOX = 30


@pytest.mark.parametrize("x,y,chi,p_a", [
    (1, 0, 0, 2),
    (0, 1, 0, 2),
    (2, 2, 1, 9),
    (3, 3, 4, 16),
    (2, 3, 2, 12),
    (0, 3, -2, 4),
    (-1, 2, -2, 0),
])
def test_even_values(even_model, x, y, chi, p_a):
    """Test chi = (x-1)(y-1) and p_a = (x+1)(y+1)."""
    d = DivisorClass(x, y)
    assert euler_characteristic(even_model, d) == chi
    assert arithmetic_genus(even_model, d) == p_a


@pytest.mark.parametrize("x,y,chi,p_a", [
    (0, 0, 1, 1),
    (3, -1, 1, 9),
    (1, -1, 0, 2),
    (4, -1, 3, 14),
    (6, 0, 10, 28),
    (3, 2, -2, 9),
    (1, 3, -6, 0),
])
def test_odd_values(odd_model, x, y, chi, p_a):
    """Test chi = (x+y-1)(x-y-2)/2 and p_a = (x+y+1)(x-y+2)/2."""
    d = DivisorClass(x, y)
    assert euler_characteristic(odd_model, d) == chi
    assert arithmetic_genus(odd_model, d) == p_a


def test_closed_forms_match_generic_formulas(model):
    """Test the closed forms against Riemann-Roch and adjunction over a box."""
    for x in range(-BOX, BOX + 1):
        for y in range(-BOX, BOX + 1):
            d = DivisorClass(x, y)
            assert euler_characteristic(model, d, consistency="off") == generic_euler_characteristic(model, d)
            assert arithmetic_genus(model, d, consistency="off") == generic_arithmetic_genus(model, d)


def test_serre_duality_symmetry(model):
    """Test chi(D) = chi(K - D)."""
    for x in range(-BOX, BOX + 1):
        for y in range(-BOX, BOX + 1):
            d = DivisorClass(x, y)
            assert euler_characteristic(model, d) == euler_characteristic(model, model.canonical - d)


def test_even_swap_symmetry(even_model):
    """Test that chi and p_a are symmetric in x and y on the even model."""
    for x in range(-10, 11):
        for y in range(-10, 11):
            d, swapped = DivisorClass(x, y), DivisorClass(y, x)
            assert euler_characteristic(even_model, d) == euler_characteristic(even_model, swapped)
            assert arithmetic_genus(even_model, d) == arithmetic_genus(even_model, swapped)


def test_odd_genus_minimum(odd_model):
    """Test that p_a(H - F) = 2 is the smallest genus with x >= |y| and K.D > 0."""
    values = [
        arithmetic_genus(odd_model, DivisorClass(x, y))
        for x in range(0, BOX + 1) for y in range(-x, x + 1)
        if 3 * x + y > 0
    ]
    assert min(values) == 2
    assert arithmetic_genus(odd_model, DivisorClass(1, -1)) == 2


def test_genus_report(even_model, odd_model):
    """Test the bundled genus report."""
    assert genus_report(even_model, DivisorClass(1, 0)).to_dict() == {"p_a": 2, "chi": 0, "k_dot": 2, "self_int": 0}
    assert genus_report(even_model, DivisorClass(0, 1)).to_dict() == {"p_a": 2, "chi": 0, "k_dot": 2, "self_int": 0}
    assert genus_report(odd_model, DivisorClass(0, 0)).to_dict() == {"p_a": 1, "chi": 1, "k_dot": 0, "self_int": 0}


def test_consistency_fault_on_disagreement(monkeypatch, odd_model):
    """Test that a disagreeing generic formula raises a ConsistencyFault naming both values."""
    monkeypatch.setattr(riemann_roch, "generic_euler_characteristic", lambda model, d: 99)
    with pytest.raises(ConsistencyFault) as excinfo:
        euler_characteristic(odd_model, DivisorClass(4, -1), consistency="always")
    assert excinfo.value.closed_form == 3
    assert excinfo.value.generic == 99
    assert "3" in str(excinfo.value) and "99" in str(excinfo.value)


def test_consistency_check_can_be_disabled(monkeypatch, odd_model):
    """Test that mode "off" skips the cross-check."""
    monkeypatch.setattr(riemann_roch, "generic_arithmetic_genus", lambda model, d: 99)
    assert arithmetic_genus(odd_model, DivisorClass(4, -1), consistency="off") == 14


def test_sampled_consistency_check(monkeypatch, odd_model):
    """Test that mode "sampled" only checks classes in the deterministic sample."""
    monkeypatch.setattr(riemann_roch, "generic_euler_characteristic", lambda model, d: 99)
    # 31*1 + 4 = 35 is a multiple of the default stride 7; 31*1 + 0 is not.
    with pytest.raises(ConsistencyFault):
        euler_characteristic(odd_model, DivisorClass(1, 4), consistency="sampled")
    assert euler_characteristic(odd_model, DivisorClass(1, 0), consistency="sampled") == 0
