import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinodiff.errors import CatalogError
from trinodiff.expr import parse

ODD_M = st.sampled_from([3, 5, 7, 9, 11, 13, 15, 17, 19])


def test_exact_arithmetic():
    e = parse("(2**m + 19)//3")
    assert e.evaluate(5) == (17, 17)
    assert e.evaluate(7) == (49, 49)


def test_sigma_symbol():
    assert parse("s").evaluate(5) == (8, 8)
    assert parse("s + 1").evaluate(7) == (17, 17)


def test_modular_division():
    # -(s-1)/2 at m=5: -7 * 16 mod 31 = 12
    assert parse("-(s-1)/2").evaluate(5) == (12, None)
    assert parse("-s/2").evaluate(5) == (27, None)


def test_negative_integer():
    assert parse("-3").evaluate(5) == (28, -3)


def test_int_passthrough_and_identity():
    e = parse(6)
    assert parse(e) is e
    assert e.residue(9) == 6


def test_shifted():
    e = parse("2**m - 5").shifted(-1)
    assert e.evaluate(5) == (26, 26)
    assert str(parse("3").shifted(2)) == "(3) + 2"


@pytest.mark.parametrize("text", ["x + 1", "3**m", "m % 2", "2**m / k", "f(m)", "2 ** -m"])
def test_rejects_unsupported(text):
    with pytest.raises(CatalogError):
        parse(text).evaluate(5)


def test_inexact_floor_division_rejected():
    assert parse("(2**m + 1)//3").evaluate(5) == (11, 11)
    with pytest.raises(CatalogError, match="not divisible"):
        parse("(2**m)//3").evaluate(5)


def test_negative_power_of_two_rejected():
    with pytest.raises(CatalogError):
        parse("2**(m-4)").evaluate(3)


def test_syntax_error():
    with pytest.raises(CatalogError):
        parse("2**(")


@given(ODD_M, st.integers(-10**6, 10**6))
def test_division_inverts_multiplication(m, k):
    order = (1 << m) - 1  # odd and prime to 3 when m is odd
    assert (parse(f"({k})/3").residue(m) * 3 - k) % order == 0
    assert (parse(f"({k})/2").residue(m) * 2 - k) % order == 0


@given(ODD_M)
def test_sigma_squared_is_two(m):
    s = parse("s").residue(m)
    assert s * s % ((1 << m) - 1) == 2
