"""Crystallographic restriction (Euler phi, Hiller's function) and the
generalized Cantor machinery: value maps, nonterminating representations,
alphabet transitions, Hausdorff dimension and Cantor function values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .words import Alphabet, Word

MAX_N = 2**63 - 1


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list:
    """(prime, exponent) pairs; trial division with a primality shortcut."""
    if not 1 <= n <= MAX_N:
        raise ValueError("n out of supported range")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    d = 5
    while d * d <= n:
        if _is_prime(n):
            break
        for p in (d, d + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        d += 6
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    """Euler's totient, with phi(1) = 1 by the standard convention."""
    if n < 1:
        raise ValueError("n must be >= 1")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def hiller(n: int) -> int:
    """Hil(n): sum of phi(p^a) over the prime powers of n, skipping the
    prime power 2 itself; Hil(1) = Hil(2) = 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in (1, 2):
        return 0
    total = 0
    for p, a in factorize(n):
        if p == 2 and a == 1:
            continue
        total += euler_phi(p**a)
    return total


def hiller_table(n_max: int) -> list:
    return [(n, hiller(n)) for n in range(1, n_max + 1)]


def allowed_orders(d: int, n_max: int) -> set:
    """Rotation orders realizable by integer matrices in dimension d:
    {n <= n_max : Hil(n) <= d}."""
    if d < 0:
        raise ValueError("dimension must be >= 0")
    return {n for n in range(1, n_max + 1) if hiller(n) <= d}


# ---------------------------------------------------------------------------
# value maps and representations

def numeric_value(alphabet: Alphabet, prefix: Word) -> Fraction:
    """v_A of a finite prefix: sum lex(x_n) / |A|^n, exact."""
    if len(prefix) == 0:
        raise ValueError("empty prefix")
    if prefix.alphabet != alphabet:
        raise ValueError("word over a different alphabet")
    b = alphabet.size
    acc = Fraction(0)
    power = 1
    for c in prefix.letters:
        power *= b
        acc += Fraction(c, power)
    return acc


def representation(alphabet: Alphabet, q: Fraction, digits: int) -> Word:
    """First `digits` letters of the nonterminating base-|A| expansion of q.

    For q = 0 the expansion is all first-letter digits; for terminating
    fractions the trailing representation ...a_i a_max a_max... is chosen,
    matching the non-injectivity of the value map.
    """
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise ValueError("q must lie in [0, 1]")
    b = alphabet.size
    out = []
    rem = q
    for _ in range(digits):
        rem *= b
        digit = math.floor(rem)
        rem -= digit
        if rem == 0 and digit > 0:
            # terminating: borrow one so the tail becomes (b-1) repeated
            digit -= 1
            rem = Fraction(1)
        if digit >= b:  # only possible when q == 1
            digit = b - 1
            rem = Fraction(1)
        out.append(digit)
    return Word(alphabet, tuple(out))


def alphabet_transition(a1: Alphabet, a2: Alphabet, prefix: Word, digits: int):
    """r_{A2}(v_{A1}(prefix)) truncated to `digits` letters.

    Returns (word, error_bound) with the truncation error |A1|^-|prefix|
    inherited from the finite input prefix.
    """
    if len(prefix) == 0:
        raise ValueError("empty prefix")
    value = numeric_value(a1, prefix)
    bound = Fraction(1, a1.size ** len(prefix))
    return representation(a2, value, digits), bound


# ---------------------------------------------------------------------------
# generalized Cantor sets

@dataclass(frozen=True)
class CantorSpec:
    alphabet: Alphabet
    excluded: int  # letter index removed from A

    def __post_init__(self):
        if not 0 <= self.excluded < self.alphabet.size:
            raise ValueError("excluded letter out of range")

    @property
    def interior(self) -> bool:
        """The paper-hypothesis case 0 < lex(a) < |A|-1."""
        return 0 < self.excluded < self.alphabet.size - 1

    @property
    def sub_alphabet(self) -> Alphabet:
        return Alphabet(
            tuple(
                s for i, s in enumerate(self.alphabet.symbols) if i != self.excluded
            )
        )


MIDDLE_THIRD = CantorSpec(Alphabet(("0", "1", "2")), 1)


def hausdorff_dimension(spec: CantorSpec) -> float:
    """log(|A| - 1) / log |A|."""
    size = spec.alphabet.size
    if size < 3:
        raise ValueError("alphabet size must be >= 3")
    return math.log(size - 1) / math.log(size)


def cantor_function_value(spec: CantorSpec, prefix: Word, digits: int = 0) -> Fraction:
    """f_{A,a}(w) = v_B(w) + |B| / |B|^(|w|+1) for a finite B-word w."""
    if not spec.interior:
        raise ValueError("excluded letter must be interior: 0 < lex(a) < |A|-1")
    bsub = spec.sub_alphabet
    if prefix.alphabet == spec.alphabet:
        if spec.excluded in prefix.letters:
            raise ValueError("prefix uses the excluded letter")
        prefix = Word(
            bsub,
            tuple(c if c < spec.excluded else c - 1 for c in prefix.letters),
        )
    elif prefix.alphabet != bsub:
        raise ValueError("prefix over an unrelated alphabet")
    if len(prefix) == 0:
        raise ValueError("empty prefix")
    nb = bsub.size
    return numeric_value(bsub, prefix) + Fraction(nb, nb ** (len(prefix) + 1))


def staircase_value(spec: CantorSpec, x: Fraction, digits: int = 64) -> Fraction:
    """Classical Cantor staircase at x in [0, 1] for the middle-excluded
    construction: read base-|A| digits of x until the excluded letter
    appears, map surviving digits into base |B|."""
    if not spec.interior:
        raise ValueError("excluded letter must be interior")
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    base = spec.alphabet.size
    nb = base - 1
    acc = Fraction(0)
    rem = x
    for k in range(1, digits + 1):
        rem *= base
        digit = math.floor(rem)
        rem -= digit
        if digit >= base:
            digit = base - 1
        if digit == spec.excluded:
            acc += Fraction(_b_digit(digit, spec), nb**k)
            break
        acc += Fraction(_b_digit(digit, spec), nb**k)
    return acc


def _b_digit(digit: int, spec: CantorSpec) -> int:
    """Map an A-digit to its B-position (the excluded digit rounds up)."""
    if digit < spec.excluded:
        return digit
    if digit == spec.excluded:
        return digit  # plateau: the removed interval maps to a constant
    return digit - 1
