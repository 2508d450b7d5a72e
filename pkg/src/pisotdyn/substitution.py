"""Substitutions, fixed-point streaming, incidence matrices and the
Pisot-type classification report."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebraic import (
    IntMatrix,
    IntPolynomial,
    RealApprox,
    RootCount,
    char_poly,
    dominant_root_interval,
    irreducible_over_q,
    is_primitive,
    refine_root,
    schur_cohn,
    sturm_count,
)
from .words import Alphabet, PrefixStream, Word, entropy_estimate


class FixedPointError(ValueError):
    """Raised when sigma(a) does not begin with a; carries the smallest
    power p <= |A|+1 (if any) such that sigma^p(a) starts with a."""

    def __init__(self, message, suggested_power: Optional[int] = None):
        super().__init__(message)
        self.suggested_power = suggested_power


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    rules: tuple  # one Word per letter, lex order

    def __post_init__(self):
        if len(self.rules) != self.alphabet.size:
            raise ValueError("rules must cover every letter exactly once")
        for w in self.rules:
            if w.alphabet != self.alphabet:
                raise ValueError("rule image over a different alphabet")
            if len(w) == 0:
                raise ValueError("rule images must be nonempty")
        object.__setattr__(self, "rules", tuple(self.rules))

    @classmethod
    def from_rules(cls, alphabet: Alphabet, rule_map: dict) -> "Substitution":
        missing = [s for s in alphabet.symbols if s not in rule_map]
        if missing:
            raise ValueError(f"missing rules for letters: {missing}")
        extra = [s for s in rule_map if s not in alphabet.symbols]
        if extra:
            raise ValueError(f"rules for unknown letters: {extra}")
        return cls(alphabet, tuple(alphabet.word(rule_map[s]) for s in alphabet.symbols))

    @classmethod
    def from_json(cls, text: str) -> "Substitution":
        data = json.loads(text)
        alphabet = Alphabet(tuple(data["alphabet"]))
        return cls.from_rules(alphabet, data["rules"])

    def to_json(self) -> str:
        return json.dumps(
            {
                "alphabet": list(self.alphabet.symbols),
                "rules": {
                    s: str(self.rules[i]) for i, s in enumerate(self.alphabet.symbols)
                },
            }
        )

    def image(self, letter: int) -> Word:
        return self.rules[letter]

    def compose(self, other: "Substitution") -> "Substitution":
        """self after other: (self.compose(other))(a) = self(other(a))."""
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        return Substitution(
            self.alphabet, tuple(apply(self, w) for w in other.rules)
        )

    def power(self, k: int) -> "Substitution":
        if k < 1:
            raise ValueError("power must be >= 1")
        out = self
        for _ in range(k - 1):
            out = self.compose(out)
        return out


def apply(sigma: Substitution, w: Word) -> Word:
    if w.alphabet != sigma.alphabet:
        raise ValueError("word over a different alphabet")
    out = []
    for c in w.letters:
        out.extend(sigma.rules[c].letters)
    return Word(sigma.alphabet, tuple(out))


def iterate(sigma: Substitution, letter: int, k: int) -> Word:
    if k < 1:
        raise ValueError("k must be >= 1")
    w = Word(sigma.alphabet, (letter,))
    for _ in range(k):
        w = apply(sigma, w)
    return w


def incidence_matrix(sigma: Substitution) -> IntMatrix:
    """(i, j) entry counts letter a_i in sigma(a_j)."""
    d = sigma.alphabet.size
    cols = []
    for j in range(d):
        col = [0] * d
        for c in sigma.rules[j].letters:
            col[c] += 1
        cols.append(col)
    return IntMatrix(tuple(tuple(cols[j][i] for j in range(d)) for i in range(d)))


def letter_counts(sigma: Substitution, letter: int, k: int) -> tuple:
    """Exact per-letter counts of sigma^k(letter) via the abelianization;
    works far past the point where the word could be materialized."""
    if k < 0:
        raise ValueError("k must be >= 0")
    m = incidence_matrix(sigma)
    v = tuple(int(i == letter) for i in range(sigma.alphabet.size))
    for _ in range(k):
        v = m.apply(v)
    return v


def iterate_length(sigma: Substitution, letter: int, k: int) -> int:
    return sum(letter_counts(sigma, letter, k))


def fixed_point_prefix(sigma: Substitution, letter: int, length: int) -> PrefixStream:
    """Stream of the fixed point sigma-bar(letter).

    Requires sigma(letter) to start with letter and have length >= 2;
    otherwise raises FixedPointError suggesting a power that works.
    """
    img = sigma.rules[letter]
    if img.letters[0] != letter or len(img) < 2:
        suggestion = None
        for p in range(2, sigma.alphabet.size + 2):
            w = iterate(sigma, letter, p)
            if w.letters[0] == letter and len(w) >= 2:
                suggestion = p
                break
        raise FixedPointError(
            f"sigma({sigma.alphabet.symbols[letter]}) does not admit a fixed point"
            + (f"; sigma^{suggestion} does" if suggestion else ""),
            suggested_power=suggestion,
        )

    return PrefixStream(sigma.alphabet, lambda: _fixed_point_source(sigma, letter))


def _fixed_point_source(sigma: Substitution, letter: int):
    """Generate sigma-bar(letter): x = sigma(x[0]) sigma(x[1]) ... with
    x[0] = letter; valid because sigma(letter) starts with letter."""
    buf = list(sigma.rules[letter].letters)
    emitted = 0
    expanded = 1  # buf currently equals sigma(x[0..expanded-1])
    while True:
        if emitted < len(buf):
            yield buf[emitted]
            emitted += 1
        else:
            # need more: expand the image of the next fixed-point letter
            buf.extend(sigma.rules[buf[expanded]].letters)
            expanded += 1


@dataclass(frozen=True)
class PisotReport:
    primitive: bool
    char_poly: IntPolynomial
    leading_eigenvalue: RealApprox
    conjugate_moduli_bound: RealApprox
    root_counts: RootCount
    irreducible: Optional[bool]
    pisot_loose: bool
    pisot_strict: bool
    frequencies: tuple  # per-letter floats summing to ~1 (empty if not primitive)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "primitive": self.primitive,
            "char_poly": list(self.char_poly.coefficients),
            "leading_eigenvalue": [
                float(self.leading_eigenvalue.lower),
                float(self.leading_eigenvalue.upper),
            ],
            "conjugate_moduli_bound": float(self.conjugate_moduli_bound.upper),
            "root_counts": {
                "inside": self.root_counts.inside,
                "on_circle": self.root_counts.on_circle,
                "outside": self.root_counts.outside,
            },
            "irreducible": self.irreducible,
            "pisot_loose": self.pisot_loose,
            "pisot_strict": self.pisot_strict,
            "frequencies": list(self.frequencies),
        }


def perron_frequencies(m: IntMatrix, tol: float = 1e-14, n_max: int = 10000) -> tuple:
    """Perron eigenvector of a primitive matrix, normalized to sum 1,
    by power iteration on floats (cross-checked symbolically in tests)."""
    d = m.dimension
    v = [1.0 / d] * d
    for _ in range(n_max):
        w = [sum(m.entries[i][k] * v[k] for k in range(d)) for i in range(d)]
        s = sum(w)
        w = [x / s for x in w]
        if max(abs(a - b) for a, b in zip(w, v)) < tol:
            return tuple(w)
        v = w
    return tuple(v)


def _conjugate_bound(p: IntPolynomial, lam: RealApprox) -> RealApprox:
    """Upper bound on the conjugate moduli: (|p(0)| / lambda_lower)^(1/(d-1))
    would need care; use the simple bound from |prod conj| = |a0|/lambda and
    the fact all conjugates lie inside the unit circle -> report the
    geometric-mean bound capped at 1."""
    d = p.degree
    if d <= 1:
        return RealApprox(Fraction(0), Fraction(0))
    a0 = abs(p.coefficients[0])
    if a0 == 0 or lam.lower <= 0:
        return RealApprox(Fraction(0), Fraction(1))
    prod = Fraction(a0) / lam.lower  # product of conjugate moduli, upper bound
    val = min(1.0, float(prod) ** (1.0 / (d - 1)))
    fr = Fraction(val).limit_denominator(10**12)
    return RealApprox(Fraction(0), max(fr, Fraction(0)))


def classify_pisot(sigma: Substitution, mode: str = "strict") -> PisotReport:
    """Pisot-type classification of sigma's incidence matrix.

    Loose mode follows the literal eigenvalue layout (one simple real
    eigenvalue > 1, all others of modulus < 1); strict mode additionally
    requires the characteristic polynomial irreducible over Q.
    """
    if mode not in ("loose", "strict"):
        raise ValueError("mode must be 'loose' or 'strict'")
    m = incidence_matrix(sigma)
    p = char_poly(m)
    primitive = is_primitive(m)

    sf = p.squarefree_part()
    counts = schur_cohn(sf)
    loose = False
    lam = RealApprox(Fraction(0), Fraction(0))
    if counts.outside == 1 and counts.on_circle == 0:
        # verify the outside root is real, simple and > 1
        if sturm_count(p.coefficients, Fraction(1), p.cauchy_bound()) == 1:
            # simple: must not be a repeated root of the full char poly
            if p.is_squarefree() or sturm_count(
                sf.coefficients, Fraction(1), sf.cauchy_bound()
            ) == 1:
                loose = True
                lam = dominant_root_interval(sf)
    irr = irreducible_over_q(p)
    # reducible polynomials can still be loose-Pisot (Thue-Morse); but any
    # repeated factor other than the Perron root is fine only if its roots
    # stay inside the disk — squarefree_part covered that above.
    strict = bool(loose and irr)
    freqs = perron_frequencies(m) if primitive else ()
    bound = _conjugate_bound(sf, lam) if loose else RealApprox(Fraction(0), Fraction(1))
    return PisotReport(
        primitive=primitive,
        char_poly=p,
        leading_eigenvalue=lam,
        conjugate_moduli_bound=bound,
        root_counts=counts,
        irreducible=irr,
        pisot_loose=loose,
        pisot_strict=strict,
        frequencies=freqs,
    )


def substitution_entropy_estimate(sigma: Substitution, n: int, prefix_len: int):
    """Finite-n estimator of the topological entropy of sigma: the sum of
    entropy estimates over all letters admitting a fixed point.  Returns
    (value, flags); when no letter qualifies, flags['needs_power'] suggests
    the smallest power that does."""
    total = 0.0
    found = False
    flags = {}
    for a in range(sigma.alphabet.size):
        img = sigma.rules[a]
        if img.letters[0] == a and len(img) >= 2:
            found = True
            stream = fixed_point_prefix(sigma, a, prefix_len)
            total += entropy_estimate(stream.prefix(prefix_len), n)
    if not found:
        for p in range(2, sigma.alphabet.size + 2):
            sp = sigma.power(p)
            if any(
                sp.rules[a].letters[0] == a and len(sp.rules[a]) >= 2
                for a in range(sigma.alphabet.size)
            ):
                flags["needs_power"] = p
                break
        return None, flags
    return total, flags


# the three named substitutions
FIBONACCI_SUBST = Substitution.from_rules(Alphabet(("0", "1")), {"0": "01", "1": "0"})
PELL_SUBST = Substitution.from_rules(Alphabet(("0", "1")), {"0": "01", "1": "001"})
PADOVAN_SUBST = Substitution.from_rules(
    Alphabet(("0", "1", "2")), {"0": "12", "1": "2", "2": "0"}
)
