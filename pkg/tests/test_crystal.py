import math
import random
from fractions import Fraction
from itertools import product

import pytest

from pisotdyn.crystal import (
    MIDDLE_THIRD,
    CantorSpec,
    allowed_orders,
    alphabet_transition,
    cantor_function_value,
    euler_phi,
    factorize,
    hausdorff_dimension,
    hiller,
    hiller_table,
    numeric_value,
    representation,
    staircase_value,
)
from pisotdyn.words import Alphabet, Word

TERNARY = Alphabet(("0", "1", "2"))
DECIMAL = Alphabet(tuple(str(i) for i in range(10)))


class TestEulerPhi:
    def test_convention(self):
        assert euler_phi(1) == 1

    def test_twelve(self):
        assert euler_phi(12) == 4

    def test_primes(self):
        for p in (2, 3, 5, 7, 11, 97):
            assert euler_phi(p) == p - 1

    def test_multiplicative(self):
        assert euler_phi(35) == euler_phi(5) * euler_phi(7)


class TestFactorize:
    def test_basic(self):
        assert factorize(360) == [(2, 3), (3, 2), (5, 1)]

    def test_large_prime(self):
        assert factorize(10**9 + 7) == [(10**9 + 7, 1)]


class TestHiller:
    def test_spot_values(self):
        assert hiller(5) == 4
        assert hiller(12) == 4
        assert hiller(36) == 8

    def test_edge(self):
        assert hiller(1) == 0 and hiller(2) == 0

    def test_odd_prime_powers(self):
        for p, a in ((3, 2), (5, 1), (7, 2)):
            assert hiller(p**a) == euler_phi(p**a)

    def test_two_powers(self):
        assert hiller(2) == 0
        for a in (2, 3, 4, 5):
            assert hiller(2**a) == euler_phi(2**a)


class TestAllowedOrders:
    def test_dimension_three(self):
        assert allowed_orders(3, 36) == {1, 2, 3, 4, 6}

    def test_dimension_four(self):
        assert allowed_orders(4, 12) == {1, 2, 3, 4, 5, 6, 8, 10, 12}

    def test_dimension_zero(self):
        assert allowed_orders(0, 10) == {1, 2}


class TestNumericValue:
    def test_binary_half(self):
        b = Alphabet(("0", "1"))
        assert numeric_value(b, b.word("1")) == Fraction(1, 2)

    def test_decimal(self):
        assert numeric_value(DECIMAL, DECIMAL.word("2,5")) == Fraction(1, 4)

    def test_ternary(self):
        assert numeric_value(TERNARY, TERNARY.word("202")) == Fraction(20, 27)

    def test_empty(self):
        with pytest.raises(ValueError):
            numeric_value(TERNARY, Word(TERNARY, ()))


class TestRepresentation:
    def test_binary_nonterminating(self):
        b = Alphabet(("0", "1"))
        assert str(representation(b, Fraction(1, 2), 4)) == "0111"

    def test_decimal_nonterminating(self):
        assert str(representation(DECIMAL, Fraction(1, 5), 3)) == "199"

    def test_zero(self):
        assert str(representation(TERNARY, Fraction(0), 5)) == "00000"

    def test_round_trip_bound(self):
        rng = random.Random(11)
        for _ in range(100):
            den = rng.randint(2, 999)
            q = Fraction(rng.randint(0, den), den)
            digits = rng.randint(3, 20)
            word = representation(TERNARY, q, digits)
            back = numeric_value(TERNARY, word)
            assert q - Fraction(1, 3**digits) <= back <= q


class TestAlphabetTransition:
    def test_binary_to_ternary(self):
        b = Alphabet(("0", "1"))
        word, bound = alphabet_transition(b, TERNARY, b.word("1"), 3)
        assert str(word) == "111"
        assert bound == Fraction(1, 2)

    def test_ternary_to_binary(self):
        b = Alphabet(("0", "1"))
        word, _ = alphabet_transition(TERNARY, b, TERNARY.word("202"), 8)
        assert numeric_value(b, word) <= Fraction(20, 27)


class TestHausdorff:
    def test_middle_third(self):
        assert hausdorff_dimension(MIDDLE_THIRD) == pytest.approx(
            math.log(2) / math.log(3), abs=1e-12
        )

    def test_four(self):
        spec = CantorSpec(Alphabet(("0", "1", "2", "3")), 1)
        assert hausdorff_dimension(spec) == pytest.approx(math.log(3) / math.log(4))

    def test_monotone_in_size(self):
        dims = [
            hausdorff_dimension(
                CantorSpec(Alphabet(tuple(str(i) for i in range(k))), 1)
            )
            for k in range(3, 11)
        ]
        assert dims == sorted(dims) and dims[-1] < 1


class TestCantorFunction:
    def test_single_letter(self):
        assert cantor_function_value(MIDDLE_THIRD, TERNARY.word("0")) == Fraction(1, 2)

    def test_monotone_per_length(self):
        bsub = MIDDLE_THIRD.sub_alphabet
        for length in range(1, 7):
            words_vals = []
            for letters in product(range(2), repeat=length):
                w = Word(bsub, letters)
                words_vals.append(
                    (numeric_value(bsub, w), cantor_function_value(MIDDLE_THIRD, w))
                )
            words_vals.sort()
            vals = [v for _, v in words_vals]
            assert vals == sorted(vals)

    def test_excluded_letter_rejected(self):
        with pytest.raises(ValueError):
            cantor_function_value(MIDDLE_THIRD, TERNARY.word("010"))

    def test_plateau(self):
        # every x in the removed middle interval shares the staircase value
        vals = {
            staircase_value(MIDDLE_THIRD, Fraction(num, 24))
            for num in range(9, 16)  # 9/24=3/8 .. 15/24=5/8, inside (1/3, 2/3)
        }
        assert vals == {Fraction(1, 2)}

    def test_staircase_classical_points(self):
        assert staircase_value(MIDDLE_THIRD, Fraction(0)) == 0
        assert staircase_value(MIDDLE_THIRD, Fraction(1, 3)) == Fraction(1, 2)
        assert staircase_value(MIDDLE_THIRD, Fraction(2, 9)) == Fraction(1, 4)

    def test_interior_hypothesis(self):
        spec = CantorSpec(TERNARY, 0)
        with pytest.raises(ValueError):
            cantor_function_value(spec, TERNARY.word("1"))
