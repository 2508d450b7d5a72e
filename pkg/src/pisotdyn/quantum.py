"""Finite-dimensional simulation of the quantum substitution operators:
first-kind word relabeling, symmetric states, quantum complexity, the
second-kind incidence-matrix dynamics and measurement-driven spacing."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

from .algebraic import IntMatrix
from .geometry import TWO_PI, AngleList
from .substitution import Substitution, apply, classify_pisot, incidence_matrix
from .words import Alphabet, Word, complexity

SUPPORT_CAP = 2**20


@dataclass(frozen=True)
class QuantumState:
    """Finite complex superposition of words (orthonormal basis labels)."""

    amplitudes: tuple  # ((Word, complex), ...) sorted by letter tuple
    renormalized: bool = False  # set when a non-injective relabeling collided

    @classmethod
    def from_dict(cls, amps: dict, renormalized: bool = False) -> "QuantumState":
        amps = {w: complex(a) for w, a in amps.items() if a != 0}
        if not amps:
            raise ValueError("empty support")
        norm = math.sqrt(sum(abs(a) ** 2 for a in amps.values()))
        if abs(norm - 1.0) > 1e-12:
            amps = {w: a / norm for w, a in amps.items()}
        items = tuple(sorted(amps.items(), key=lambda kv: kv[0].letters))
        return cls(items, renormalized)

    def as_dict(self) -> dict:
        return dict(self.amplitudes)

    @property
    def support(self):
        return [w for w, _ in self.amplitudes]

    def amplitude(self, w: Word) -> complex:
        for word, a in self.amplitudes:
            if word.letters == w.letters:
                return a
        return 0j

    def serialize(self) -> list:
        return [[str(w), a.real, a.imag] for w, a in self.amplitudes]


def basis_state(w: Word) -> QuantumState:
    return QuantumState.from_dict({w: 1.0 + 0j})


def apply_first_kind(sigma: Substitution, psi: QuantumState) -> QuantumState:
    """sigma-hat |x> = |sigma(x)>, extended linearly.

    Colliding images (non-injective sigma on the support) add amplitudes;
    the state is renormalized and flagged.
    """
    out: dict = {}
    for w, a in psi.amplitudes:
        img = apply(sigma, w)
        key = img.letters
        if key in out:
            out[key] = (out[key][0], out[key][1] + a, True)
        else:
            out[key] = (img, a, False)
    collided = any(flag for _, _, flag in out.values())
    amps = {word: a for word, a, _ in out.values()}
    return QuantumState.from_dict(amps, renormalized=collided)


def symmetric_state(alphabet: Alphabet, n: int) -> QuantumState:
    """|S, n>: equal superposition of all length-n words."""
    if n < 1:
        raise ValueError("n must be >= 1")
    count = alphabet.size**n
    if count > SUPPORT_CAP:
        raise ValueError(f"support {count} exceeds cap {SUPPORT_CAP}")
    amp = 1.0 / math.sqrt(count)
    amps = {}
    from itertools import product

    for letters in product(range(alphabet.size), repeat=n):
        amps[Word(alphabet, letters)] = amp
    return QuantumState.from_dict(amps)


def quantum_complexity(psi: QuantumState, n: int) -> float:
    """Expectation of the classical complexity: sum |amp|^2 * p_n(word)."""
    for w, _ in psi.amplitudes:
        if len(w) < n:
            raise ValueError("support word shorter than n")
    return sum(abs(a) ** 2 * complexity(w, n) for w, a in psi.amplitudes)


def quantum_entropy_estimate(psi: QuantumState, n: int) -> float:
    base = psi.amplitudes[0][0].alphabet.size
    qc = quantum_complexity(psi, n)
    return math.log(qc, base) / n


# ---------------------------------------------------------------------------
# second kind: the incidence matrix on the letter space

def second_kind_step(m: IntMatrix, v: tuple) -> tuple:
    """M . v exactly (integer matrix on a complex/rational letter vector)."""
    if len(v) != m.dimension:
        raise ValueError("dimension mismatch")
    return m.apply(v)


def second_kind_limit(m: IntMatrix, start: int, n_max: int = 1000,
                      tol: float = 1e-13):
    """Normalized power iteration from the basis letter `start`.

    Returns (perron_vector, probabilities, iterations) with the vector
    normalized in l2 and Pr(a) = |<a|e_lambda>|^2.
    """
    from .algebraic import is_primitive

    if not is_primitive(m):
        raise ValueError("second_kind_limit requires a primitive matrix")
    d = m.dimension
    v = [float(i == start) for i in range(d)]
    its = 0
    for its in range(1, n_max + 1):
        w = [sum(m.entries[i][k] * v[k] for k in range(d)) for i in range(d)]
        norm = math.sqrt(sum(x * x for x in w))
        w = [x / norm for x in w]
        if max(abs(a - b) for a, b in zip(w, v)) < tol:
            v = w
            break
        v = w
    probs = tuple(x * x for x in v)
    return tuple(v), probs, its


# ---------------------------------------------------------------------------
# measurement-driven spacing (the classical simulation of the procedure)

@dataclass
class SpacingRun:
    angles: AngleList
    outcomes: tuple
    manifest: dict

    @property
    def letter_rates(self) -> tuple:
        n = len(self.outcomes)
        d = max(self.outcomes) + 1
        counts = [0] * d
        for o in self.outcomes:
            counts[o] += 1
        return tuple(c / n for c in counts)

    def manifest_json(self) -> str:
        return json.dumps(self.manifest, sort_keys=True)


def quantum_spacing_simulate(sigma: Substitution, beta0: float, beta1: float,
                             n_steps: int, seed: int) -> SpacingRun:
    """At step n, sample a letter from the measurement distribution of the
    normalized n-th power iterate M^n e_start, then advance the angle by
    beta0 or beta1 (mod 2*pi).  Deterministic under the seed (Mersenne
    Twister via random.Random)."""
    if sigma.alphabet.size != 2:
        raise ValueError("binary substitution required")
    report = classify_pisot(sigma, mode="loose")
    if not (report.primitive and report.pisot_loose):
        raise ValueError("substitution must be primitive of Pisot type")
    m = incidence_matrix(sigma)
    rng = random.Random(seed)
    v = [1.0, 0.0]
    theta = 0.0
    angles = []
    outcomes = []
    for _ in range(n_steps):
        w = [m.entries[0][0] * v[0] + m.entries[0][1] * v[1],
             m.entries[1][0] * v[0] + m.entries[1][1] * v[1]]
        norm = math.sqrt(w[0] * w[0] + w[1] * w[1])
        v = [w[0] / norm, w[1] / norm]
        p0 = v[0] * v[0]
        letter = 0 if rng.random() < p0 else 1
        outcomes.append(letter)
        theta = (theta + (beta0 if letter == 0 else beta1)) % TWO_PI
        angles.append(theta)
    manifest = {
        "schema": 1,
        "generator": "random.Random (Mersenne Twister)",
        "seed": seed,
        "N": n_steps,
        "beta0": beta0,
        "beta1": beta1,
        "substitution": json.loads(sigma.to_json()),
    }
    return SpacingRun(AngleList(tuple(angles)), tuple(outcomes), manifest)
