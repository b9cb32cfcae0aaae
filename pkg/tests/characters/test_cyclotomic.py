import itertools
from fractions import Fraction

import pytest

from core.characters import Cyclotomic, cyc_add, cyc_mul, cyc_neg, parse_cyclotomic
from core.utils import CyclotomicError

"""Z[ζ_N] 的精確運算"""


def z(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(n, k)


# === 環運算 ===
def test_basic_products() -> None:
    assert cyc_mul(z(2), z(2)) == Cyclotomic.from_int(1, 2)
    assert z(4) ** 2 == Cyclotomic.from_int(-1, 4)  # Φ_4 = x^2 + 1
    assert cyc_add(1 + z(3), 1 + z(3, 2)) == Cyclotomic.from_int(1, 3)  # 1 + ζ + ζ^2 = 0
    assert cyc_neg(z(4)) == z(4, 3)


def test_canonical_form() -> None:
    assert len(z(8).coeffs) == 4  # φ(8)
    assert z(3, 2) == Cyclotomic(3, [-1, -1])
    assert z(6, 3) == Cyclotomic.from_int(-1, 6)
    assert z(4, 5) == z(4, 1)


def test_hash_ignores_modulus() -> None:
    written_in_six: Cyclotomic = z(6, 2)  # ζ_3 = ζ_6 - 1

    assert written_in_six.coeffs == (-1, 1)
    assert written_in_six == z(3)
    assert hash(written_in_six) == hash(z(3))
    assert len({written_in_six, z(3), z(12, 4)}) == 1
    assert written_in_six.normalized().modulus == 3
    assert z(6, 3).normalized() == Cyclotomic.from_int(-1)
    assert z(6, 3).normalized().modulus == 1


def test_mixed_moduli_are_lifted() -> None:
    total: Cyclotomic = z(2) + z(4)

    assert total.modulus == 4
    assert total == Cyclotomic(4, [-1, 1])
    assert z(2).lift(4) == z(4, 2)
    with pytest.raises(CyclotomicError):
        z(4).lift(6)


@pytest.mark.parametrize("n", [2, 3, 4, 8])
def test_ring_axioms(n: int) -> None:
    samples = [z(n, k) * c + d for k, c, d in [(0, 1, 0), (1, 2, -1), (n - 1, -1, 3), (n // 2, 1, 1)]]
    for a, b, c in itertools.product(samples, repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Cyclotomic.from_int(0, n)


# === Galois 作用 ===
def test_galois_power() -> None:
    assert z(4).galois_power(2) == Cyclotomic.from_int(-1, 4)
    assert z(3).galois_power(3) == Cyclotomic.from_int(1, 3)
    assert (1 + z(8) * 2).galois_power(3) == 1 + z(8, 3) * 2
    assert z(4).conj() == -z(4)


@pytest.mark.parametrize("n, k", [(4, 3), (8, 3), (8, 5), (3, 2)])
def test_galois_power_is_multiplicative(n: int, k: int) -> None:
    a, b = 1 + z(n) * 2, z(n, 2) - 3
    assert (a * b).galois_power(k) == a.galois_power(k) * b.galois_power(k)
    assert (a + b).galois_power(k) == a.galois_power(k) + b.galois_power(k)


def test_rational_trace() -> None:
    assert z(4).rational_trace() == 0
    assert Cyclotomic.from_int(5, 8).rational_trace() == 5
    assert (z(3) * z(3).conj()).rational_trace() == 1
    assert (1 + z(4)).rational_trace() == Fraction(1)


# === 文字格式 ===
def test_print_and_parse() -> None:
    value: Cyclotomic = Cyclotomic(4, [2, -1])

    assert str(value) == "2 - z"
    assert str(Cyclotomic(4, [0, 3])) == "3*z"
    assert str(Cyclotomic(4, [-1, 0])) == "-1"
    assert str(Cyclotomic.from_int(0, 4)) == "0"
    assert parse_cyclotomic(str(value), 4) == value
    assert parse_cyclotomic("1 + z^2", 4) == Cyclotomic.from_int(0, 4)


def test_parse_rejects_garbage() -> None:
    with pytest.raises(CyclotomicError):
        parse_cyclotomic("1 + w", 4)
    with pytest.raises(CyclotomicError):
        parse_cyclotomic("", 4)
