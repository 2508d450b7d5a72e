"""Alphabets, finite words, factor languages and subword complexity.

Factor counting has two independent implementations: a suffix automaton
(fast path) and plain window-set enumeration (oracle).  Frequencies are
exact rationals.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import log, log2
from typing import Callable, Iterable, Optional


class AlphabetMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Ordered distinct printable tokens; lex(a) is the position."""

    symbols: tuple

    def __post_init__(self):
        syms = tuple(str(s) for s in self.symbols)
        if len(syms) < 2:
            raise ValueError("alphabet needs at least 2 symbols")
        if len(set(syms)) != len(syms):
            raise ValueError("alphabet symbols must be distinct")
        object.__setattr__(self, "symbols", syms)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def lex(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise KeyError(f"symbol {symbol!r} not in alphabet") from None

    @property
    def multichar(self) -> bool:
        return any(len(s) != 1 for s in self.symbols)

    def word(self, text: str) -> "Word":
        """Parse a serialized word: bare tokens, or comma-separated."""
        if text == "":
            return Word(self, ())
        if self.multichar or "," in text:
            tokens = text.split(",")
        else:
            tokens = list(text)
        return Word(self, tuple(self.lex(t) for t in tokens))


BINARY = Alphabet(("0", "1"))
TERNARY = Alphabet(("0", "1", "2"))


@dataclass(frozen=True)
class Word:
    """Finite sequence of letter indices over an Alphabet."""

    alphabet: Alphabet
    letters: tuple

    def __post_init__(self):
        ls = tuple(int(x) for x in self.letters)
        if any(not 0 <= x < self.alphabet.size for x in ls):
            raise ValueError("letter index out of range")
        object.__setattr__(self, "letters", ls)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.alphabet, self.letters[i])
        return self.letters[i]

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        sep = "," if self.alphabet.multichar else ""
        return sep.join(self.alphabet.symbols[i] for i in self.letters)

    def tokens(self):
        return [self.alphabet.symbols[i] for i in self.letters]


def concat(w1: Word, w2: Word) -> Word:
    if w1.alphabet != w2.alphabet:
        raise AlphabetMismatchError("words over different alphabets")
    return Word(w1.alphabet, w1.letters + w2.letters)


def occurrences(haystack: Word, needle: Word) -> int:
    """Occurrence count of needle in haystack, overlaps included."""
    if len(needle) == 0:
        raise ValueError("needle must be nonempty")
    h, m = haystack.letters, needle.letters
    k = len(m)
    return sum(1 for i in range(len(h) - k + 1) if h[i : i + k] == m)


def factors(prefix: Word, n: int) -> set:
    """The set of distinct length-n factors, as Words."""
    if not 1 <= n <= len(prefix):
        raise ValueError("factor length out of range")
    seen = {prefix.letters[i : i + n] for i in range(len(prefix) - n + 1)}
    return {Word(prefix.alphabet, t) for t in seen}


def complexity_bruteforce(prefix: Word, n: int) -> int:
    if not 1 <= n <= len(prefix):
        raise ValueError("factor length out of range")
    return len({prefix.letters[i : i + n] for i in range(len(prefix) - n + 1)})


# ---------------------------------------------------------------------------
# suffix automaton (fast distinct-factor counts, all n at once)

class _SAState:
    __slots__ = ("len", "link", "next")

    def __init__(self, length, link):
        self.len = length
        self.link = link
        self.next = {}


class SuffixAutomaton:
    """Online suffix automaton over letter indices."""

    def __init__(self, letters: Iterable[int]):
        self.states = [_SAState(0, -1)]
        self.last = 0
        for c in letters:
            self._extend(c)

    def _extend(self, c):
        states = self.states
        cur = len(states)
        states.append(_SAState(states[self.last].len + 1, -1))
        p = self.last
        while p != -1 and c not in states[p].next:
            states[p].next[c] = cur
            p = states[p].link
        if p == -1:
            states[cur].link = 0
        else:
            q = states[p].next[c]
            if states[p].len + 1 == states[q].len:
                states[cur].link = q
            else:
                clone = len(states)
                st = _SAState(states[p].len + 1, states[q].link)
                st.next = dict(states[q].next)
                states.append(st)
                while p != -1 and states[p].next.get(c) == q:
                    states[p].next[c] = clone
                    p = states[p].link
                states[q].link = clone
                states[cur].link = clone
        self.last = cur

    def complexity_profile(self, n_max: int):
        """p_n for n = 1..n_max via a difference array: each state covers
        factor lengths (link.len, len]."""
        diff = [0] * (n_max + 2)
        for st in self.states[1:]:
            lo = self.states[st.link].len + 1
            hi = min(st.len, n_max)
            if lo <= hi:
                diff[lo] += 1
                diff[hi + 1] -= 1
        out = []
        acc = 0
        for n in range(1, n_max + 1):
            acc += diff[n]
            out.append(acc)
        return out


def complexity(prefix: Word, n: int) -> int:
    """p_n of the prefix, exact (suffix automaton)."""
    if not 1 <= n <= len(prefix):
        raise ValueError("factor length out of range")
    return complexity_profile(prefix, n).values[-1]


@dataclass(frozen=True)
class ComplexityProfile:
    values: tuple  # p_1 .. p_N
    prefix_length: int

    def entropy(self, base_size: int, n: int) -> float:
        return entropy_from_count(self.values[n - 1], base_size, n)

    def to_csv(self, base_size: int) -> str:
        lines = ["n,p_n,entropy_estimate"]
        for i, p in enumerate(self.values, start=1):
            lines.append(f"{i},{p},{entropy_from_count(p, base_size, i)!r}")
        return "\n".join(lines) + "\n"


def complexity_profile(prefix: Word, n_max: int) -> ComplexityProfile:
    if not 1 <= n_max <= len(prefix):
        raise ValueError("factor length out of range")
    sa = SuffixAutomaton(prefix.letters)
    return ComplexityProfile(tuple(sa.complexity_profile(n_max)), len(prefix))


def entropy_from_count(p_n: int, base_size: int, n: int) -> float:
    if base_size == 2:
        return log2(p_n) / n
    return log(p_n, base_size) / n


def entropy_estimate(prefix: Word, n: int, warn=None) -> float:
    """log_{|A|} p_n / n.  Sets warn['truncated'] when the window count
    forces p_n below |A|^n (the estimate is then a lower bound)."""
    p = complexity(prefix, n)
    if warn is not None:
        warn["truncated"] = prefix.alphabet.size**n > len(prefix) - n + 1
    return entropy_from_count(p, prefix.alphabet.size, n)


def empirical_frequencies(prefix: Word) -> tuple:
    """Per-letter frequencies as exact Fractions summing to 1."""
    if len(prefix) == 0:
        raise ValueError("empty prefix")
    counts = [0] * prefix.alphabet.size
    for c in prefix.letters:
        counts[c] += 1
    total = len(prefix)
    return tuple(Fraction(c, total) for c in counts)


def sturmian_check(prefix: Word, n_limit: int) -> bool:
    """True iff p_n = n + 1 for all 1 <= n <= n_limit."""
    if len(prefix) < 2 * n_limit:
        raise ValueError("prefix too short for requested range")
    profile = complexity_profile(prefix, n_limit).values
    return all(profile[n - 1] == n + 1 for n in range(1, n_limit + 1))


def morse_hedlund_witness(prefix: Word, n_limit: Optional[int] = None) -> Optional[int]:
    """Smallest n with p_n <= n within the testable range, else None."""
    if len(prefix) < 2:
        raise ValueError("prefix too short")
    if n_limit is None:
        n_limit = len(prefix) // 2
    n_limit = max(1, min(n_limit, len(prefix)))
    profile = complexity_profile(prefix, n_limit).values
    for n in range(1, n_limit + 1):
        if profile[n - 1] <= n:
            return n
    return None


# ---------------------------------------------------------------------------
# PrefixStream

class PrefixStream:
    """Deterministic extendable prefix of an infinite sequence.

    The generator is pulled lazily; extension is serialized by a lock so
    concurrent readers always see a consistent cache.
    """

    def __init__(self, alphabet: Alphabet, source: Callable[[], Iterable[int]]):
        self.alphabet = alphabet
        self._iter = iter(source())
        self._cache: list = []
        self._lock = threading.Lock()
        self._exhausted = False

    def prefix(self, length: int) -> Word:
        if length < 0:
            raise ValueError("length must be >= 0")
        if len(self._cache) < length:
            with self._lock:
                while len(self._cache) < length and not self._exhausted:
                    try:
                        self._cache.append(next(self._iter))
                    except StopIteration:
                        self._exhausted = True
            if len(self._cache) < length:
                raise ValueError("stream exhausted before requested length")
        return Word(self.alphabet, tuple(self._cache[:length]))
