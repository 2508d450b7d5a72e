"""Exact integer-polynomial machinery.

Characteristic polynomials, unit-disk root counting, Pisot-Vijayaraghavan
certification, Newton power sums, linear recurrences and the near-integer
decay of PV powers.  Everything that decides root location does so over the
rationals; floating point only ever appears in reported intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


# ---------------------------------------------------------------------------
# polynomial arithmetic over Fraction (coefficient tuples, constant term first)

def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pdeg(c) -> int:
    return len(c) - 1


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pscale(a, k):
    if k == 0:
        return (Fraction(0),)
    return tuple(x * k for x in a)


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in _trim(b)]
    if b == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and _trim(a) != (Fraction(0),):
        if len(_trim(a)) < len(b):
            break
        a = list(_trim(a))
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i in range(len(b)):
            a[k + i] -= c * b[i]
        a = list(_trim(a))
    return _trim(q), _trim(a)


def _pgcd(a, b):
    """Monic gcd over Q."""
    a, b = _trim(a), _trim(b)
    while b != (Fraction(0),) and b != (0,):
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a == (Fraction(0),) or a == (0,):
        return (Fraction(0),)
    lead = a[-1]
    return tuple(x / lead for x in a)


def _pderiv(a):
    if len(a) == 1:
        return (Fraction(0),)
    return tuple(Fraction(i) * a[i] for i in range(1, len(a)))


def _peval(a, x):
    acc = Fraction(0) if isinstance(x, Fraction) else 0.0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sturm_chain(p, q=None):
    """Signed remainder chain starting (p, q); q defaults to p'."""
    chain = [_trim(p)]
    q = _pderiv(p) if q is None else _trim(q)
    if q != (Fraction(0),) and q != (0,):
        chain.append(q)
        while True:
            _, r = _pdivmod(chain[-2], chain[-1])
            r = _trim(r)
            if r == (Fraction(0),) or r == (0,):
                break
            chain.append(tuple(-x for x in r))
    return chain


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _var_at(chain, x) -> int:
    return _variations([_sign(_peval(f, x)) for f in chain])


def _var_at_inf(chain, positive: bool) -> int:
    signs = []
    for f in chain:
        s = _sign(f[-1])
        if not positive and _pdeg(f) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def sturm_count(p, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    chain = _sturm_chain([Fraction(c) for c in p])
    return _var_at(chain, lo) - _var_at(chain, hi)


def _cauchy_index(den, num) -> int:
    """Cauchy index of num/den over (-inf, +inf)."""
    chain = _sturm_chain(den, num)
    return _var_at_inf(chain, positive=False) - _var_at_inf(chain, positive=True)


# ---------------------------------------------------------------------------
# IntPolynomial

class NotSquarefreeError(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, constant term first."""

    coefficients: tuple

    def __post_init__(self):
        c = _trim(self.coefficients)
        if any(x != int(x) for x in c):
            raise ValueError("coefficients must be integers")
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))
        if self.coefficients[-1] == 0 and len(self.coefficients) > 1:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __call__(self, x):
        return _peval(self.coefficients, x)

    def derivative(self) -> "IntPolynomial":
        d = _pderiv([Fraction(c) for c in self.coefficients])
        return IntPolynomial(tuple(int(x) for x in d))

    def reciprocal(self) -> "IntPolynomial":
        """z^deg * p(1/z): reversed coefficients."""
        return IntPolynomial(tuple(reversed(self.coefficients)))

    def is_squarefree(self) -> bool:
        g = _pgcd(self._frac(), _pderiv(self._frac()))
        return _pdeg(g) == 0

    def squarefree_part(self) -> "IntPolynomial":
        g = _pgcd(self._frac(), _pderiv(self._frac()))
        if _pdeg(g) == 0:
            return self
        q, _ = _pdivmod(self._frac(), g)
        return _from_frac_poly(q)

    def _frac(self):
        return tuple(Fraction(c) for c in self.coefficients)

    def cauchy_bound(self) -> Fraction:
        lead = abs(self.coefficients[-1])
        if self.degree == 0:
            return Fraction(1)
        return 1 + max(Fraction(abs(c), lead) for c in self.coefficients[:-1])

    def pretty(self, var: str = "x") -> str:
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
            parts.append(("- " if c < 0 else "+ ") + term)
        if not parts:
            return "0"
        first = parts[0]
        out = first[2:] if first.startswith("+ ") else "-" + first[2:]
        return out + ("" if len(parts) == 1 else " " + " ".join(parts[1:]))


def _from_frac_poly(c) -> IntPolynomial:
    """Clear denominators, divide by content, normalize sign of lead."""
    c = _trim(c)
    den = 1
    for x in c:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in c]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return IntPolynomial(tuple(ints))


# ---------------------------------------------------------------------------
# IntMatrix and characteristic polynomial

@dataclass(frozen=True)
class IntMatrix:
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.dimension
        if other.dimension != n:
            raise ValueError("dimension mismatch")
        a, b = self.entries, other.entries
        return IntMatrix(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
        )

    def apply(self, v: Sequence) -> tuple:
        n = self.dimension
        if len(v) != n:
            raise ValueError("dimension mismatch")
        return tuple(sum(self.entries[i][k] * v[k] for k in range(n)) for i in range(n))

    def trace(self):
        return sum(self.entries[i][i] for i in range(self.dimension))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """det(x*I - M) via the Faddeev-LeVerrier recursion, exact."""
    n = m.dimension
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    b = IntMatrix.identity(n)
    frac_b = [[Fraction(x) for x in row] for row in b.entries]
    a = [[Fraction(x) for x in row] for row in m.entries]

    def matmul(x, y):
        return [
            [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    mk = frac_b
    for k in range(1, n + 1):
        mk = matmul(a, mk)
        c = -sum(mk[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        for i in range(n):
            mk[i][i] += c
    return IntPolynomial(tuple(int(c) for c in coeffs))


def wielandt_bound(d: int) -> int:
    return (d - 1) ** 2 + 1


def is_primitive(m: IntMatrix) -> bool:
    """Some power <= Wielandt bound is entrywise positive."""
    n = m.dimension
    if any(x < 0 for row in m.entries for x in row):
        raise ValueError("primitivity requires nonnegative entries")
    b = [[x > 0 for x in row] for row in m.entries]
    a = [row[:] for row in b]
    for _ in range(wielandt_bound(n)):
        if all(all(row) for row in a):
            return True
        a = [
            [any(a[i][k] and b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return all(all(row) for row in a)


# ---------------------------------------------------------------------------
# root counting relative to the unit circle

@dataclass(frozen=True)
class RootCount:
    inside: int
    on_circle: int
    outside: int

    @property
    def degree(self) -> int:
        return self.inside + self.on_circle + self.outside


def _strip_root(c, r: Fraction):
    q, rem = _pdivmod(c, (-r, Fraction(1)))
    assert rem == (Fraction(0),) or rem == (0,)
    return q


def _palindromic_to_chebyshev(c):
    """Write palindromic even-degree p as z^m * e(z + 1/z); return e.

    Uses u_k(x) = z^k + z^-k with u_0 = 2, u_1 = x, u_k = x*u_{k-1} - u_{k-2}.
    """
    m = _pdeg(c) // 2
    assert _pdeg(c) == 2 * m and list(c) == list(reversed(c))
    u_prev = (Fraction(2),)
    u = (Fraction(0), Fraction(1))
    e = _pscale((Fraction(1),), c[m])
    for k in range(1, m + 1):
        e = _padd(e, _pscale(u, c[m + k]))
        if k < m:
            u_prev, u = u, _padd(_pmul((Fraction(0), Fraction(1)), u), _pscale(u_prev, -1))
    return _trim(e)


def _count_lhp(q):
    """Roots of real poly q with Re < 0; q must have no imaginary-axis roots."""
    n = _pdeg(q)
    if n == 0:
        return 0
    # q(iy) = P(y) + i R(y)
    p_part = [Fraction(0)] * (n + 1)
    r_part = [Fraction(0)] * (n + 1)
    for j, c in enumerate(q):
        if j % 4 == 0:
            p_part[j] += c
        elif j % 4 == 1:
            r_part[j] += c
        elif j % 4 == 2:
            p_part[j] -= c
        else:
            r_part[j] -= c
    p_part, r_part = _trim(p_part), _trim(r_part)
    if n % 2 == 1:
        diff = _cauchy_index(r_part, p_part)
    else:
        diff = -_cauchy_index(p_part, r_part)
    # diff = n_lhp - n_rhp
    assert (n + diff) % 2 == 0, "parity failure in Cauchy index"
    return (n + diff) // 2


def _count_inside_no_circle(p):
    """|z| < 1 roots of p, assuming none on the circle.  Exact."""
    n = _pdeg(p)
    if n == 0:
        return 0
    # z = (1+w)/(1-w) maps Re(w) < 0 onto |z| < 1
    q = (Fraction(0),)
    one_plus = (Fraction(1), Fraction(1))
    one_minus = (Fraction(1), Fraction(-1))
    for k, c in enumerate(p):
        term = (Fraction(c),)
        for _ in range(k):
            term = _pmul(term, one_plus)
        for _ in range(n - k):
            term = _pmul(term, one_minus)
        q = _padd(q, term)
    assert _pdeg(q) == n, "degree drop: root at z = -1 on the circle"
    return _count_lhp(q)


def schur_cohn(p: IntPolynomial) -> RootCount:
    """Exact counts of roots with |z| < 1, = 1, > 1.

    Requires a squarefree polynomial; deflate with squarefree_part first.
    """
    if p.degree == 0:
        return RootCount(0, 0, 0)
    if not p.is_squarefree():
        raise NotSquarefreeError("schur_cohn requires a squarefree polynomial")
    c = p._frac()
    inside = 0
    # roots at the origin
    while c[0] == 0:
        inside += 1
        c = _trim(c[1:])
    # d collects every root r of p such that 1/r is also a root (this set is
    # closed under inversion, so d is +-palindromic); all circle roots live here
    d = _pgcd(c, tuple(reversed(c)))
    q, rem = _pdivmod(c, d)
    assert rem == (Fraction(0),) or rem == (0,)
    on = 0
    d_deg = _pdeg(d)
    if d_deg > 0:
        d2 = d
        if _peval(d2, Fraction(1)) == 0:
            on += 1
            d2 = _strip_root(d2, Fraction(1))
        if _peval(d2, Fraction(-1)) == 0:
            on += 1
            d2 = _strip_root(d2, Fraction(-1))
        if _pdeg(d2) > 0:
            lead = d2[-1]
            d2 = tuple(x / lead for x in d2)
            e = _palindromic_to_chebyshev(d2)
            # circle roots of d2 come in conjugate pairs with z + 1/z in (-2, 2)
            on += 2 * sturm_count(e, Fraction(-2), Fraction(2))
    inside += (d_deg - on) // 2
    inside += _count_inside_no_circle(q)
    total = p.degree
    return RootCount(inside=inside, on_circle=on, outside=total - inside - on)


# ---------------------------------------------------------------------------
# irreducibility over Q (exact through degree 4, modular certificate beyond)

def _rational_roots(p: IntPolynomial):
    a0, lead = p.coefficients[0], p.coefficients[-1]
    if a0 == 0:
        yield Fraction(0)
        return
    def divisors(n):
        n = abs(n)
        out = []
        i = 1
        while i * i <= n:
            if n % i == 0:
                out += [i, n // i]
            i += 1
        return sorted(set(out))
    for num in divisors(a0):
        for den in divisors(lead):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if p(r) == 0:
                    yield r


def _is_square(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _irreducible_deg4_monic(p: IntPolynomial) -> bool:
    # no rational roots already checked; test integer quadratic factorizations
    _, c1, c2, c3, _ = (p.coefficients + (0,) * 5)[:5]
    c0 = p.coefficients[0]
    def divisor_pairs(n):
        out = []
        i = 1
        while i * i <= abs(n):
            if n % i == 0:
                for b in (i, -i):
                    out.append((b, n // b))
            i += 1
        if n == 0:
            out.append((0, 0))
        return out
    for b, d in divisor_pairs(c0):
        # (x^2 + a x + b)(x^2 + c x + d)
        s = c3            # a + c
        prod_ac = c2 - b - d
        disc = _is_square(s * s - 4 * prod_ac)
        if disc is None:
            continue
        for a2 in ((s + disc), (s - disc)):
            if a2 % 2:
                continue
            a = a2 // 2
            cc = s - a
            if a * d + b * cc == c1:
                return False
    return True


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


def _mod_poly(c, p):
    c = [x % p for x in c]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _mod_mul(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    # reduce mod f (monic mod p)
    df = len(f) - 1
    while len(out) - 1 >= df:
        k = len(out) - 1 - df
        c = out[-1]
        if c:
            for i in range(df + 1):
                out[k + i] = (out[k + i] - c * f[i]) % p
        out.pop()
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _mod_gcd(a, b, p):
    a, b = list(a), list(b)
    while b != [0]:
        # remainder of a by b mod p
        b_lead_inv = pow(b[-1], -1, p)
        r = a[:]
        while len(r) >= len(b) and r != [0]:
            k = len(r) - len(b)
            c = (r[-1] * b_lead_inv) % p
            for i in range(len(b)):
                r[k + i] = (r[k + i] - c * b[i]) % p
            while len(r) > 1 and r[-1] == 0:
                r.pop()
            if len(r) < len(b):
                break
        a, b = b, r
    return a


def _irreducible_mod_p(poly: IntPolynomial, p: int) -> Optional[bool]:
    f = _mod_poly(list(poly.coefficients), p)
    n = len(f) - 1
    if n < 1 or f[-1] == 0:
        return None
    inv = pow(f[-1], -1, p)
    f = [(x * inv) % p for x in f]
    # squarefree mod p required for the distinct-degree test
    fd = [(i * f[i]) % p for i in range(1, len(f))]
    while len(fd) > 1 and fd[-1] == 0:
        fd.pop()
    if fd == [0] or len(_mod_gcd(f, fd, p)) > 1:
        return None
    x = [0, 1] if n > 1 else [0]
    # f irreducible iff x^(p^n) == x mod f and gcd(x^(p^(n/q)) - x, f) = 1
    def frob_power(k):
        acc = x[:]
        for _ in range(k):
            acc = _mod_pow(acc, p, f, p)
        return acc
    xq = frob_power(n)
    if _mod_poly([a - b for a, b in zip(xq + [0] * 2, x + [0] * 2)], p) != [0]:
        return False
    for q in set(_prime_factors(n)):
        xr = frob_power(n // q)
        diff = _mod_poly(
            [a - b for a, b in zip(xr + [0] * len(x), x + [0] * len(xr))], p
        )
        if len(_mod_gcd(f, diff, p)) > 1:
            return False
    return True


def _mod_pow(base, e, f, p):
    result = [1]
    b = base[:]
    while e:
        if e & 1:
            result = _mod_mul(result, b, f, p)
        b = _mod_mul(b, b, f, p)
        e >>= 1
    return result


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_over_q(p: IntPolynomial) -> Optional[bool]:
    """True/False when decided; None when unknown (degree >= 5 heuristics)."""
    n = p.degree
    if n <= 1:
        return n == 1
    if p.coefficients[0] == 0:
        return False
    for _ in _rational_roots(p):
        return False
    if n <= 3:
        return True
    if n == 4 and p.is_monic:
        return _irreducible_deg4_monic(p)
    for q in _SMALL_PRIMES:
        if _irreducible_mod_p(p, q):
            return True
    return None


# ---------------------------------------------------------------------------
# PV certification and isolated leading roots

@dataclass(frozen=True)
class RealApprox:
    """A certified rational interval [lower, upper]."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower > upper")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def __float__(self) -> float:
        return float(self.midpoint)

    def contains(self, x) -> bool:
        return self.lower <= x <= self.upper

    def overlaps(self, other: "RealApprox") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper


def dominant_root_interval(p: IntPolynomial, width: Fraction = Fraction(1, 10**12)) -> RealApprox:
    """Isolating interval for the unique real root of p in (1, cauchy_bound].

    Valid when p has exactly one root there (PV and Pisot-type cases).
    """
    lo, hi = Fraction(1), p.cauchy_bound()
    if sturm_count(p.coefficients, lo, hi) != 1:
        raise ValueError("no unique dominant real root in (1, cauchy bound]")
    s_lo = _sign(p(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(p(mid))
        if s_mid == 0:
            eps = width / 4
            return RealApprox(mid - eps, mid + eps)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return RealApprox(lo, hi)


def refine_root(p: IntPolynomial, iv: RealApprox, width: Fraction) -> RealApprox:
    lo, hi = iv.lower, iv.upper
    s_lo = _sign(p(lo))
    if s_lo == 0:
        return RealApprox(lo, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(p(mid))
        if s_mid == 0:
            eps = width / 4
            return RealApprox(max(lo, mid - eps), min(hi, mid + eps))
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return RealApprox(lo, hi)


def pv_verdict(p: IntPolynomial) -> str:
    """'pv', 'not_pv' or 'conditional' (root layout right, irreducibility open)."""
    if not p.is_monic:
        raise ValueError("PV certification requires a monic polynomial")
    if p.degree == 0:
        return "not_pv"
    if not p.is_squarefree():
        return "not_pv"
    counts = schur_cohn(p)
    if counts.outside != 1 or counts.on_circle != 0:
        return "not_pv"
    if sturm_count(p.coefficients, Fraction(1), p.cauchy_bound()) != 1:
        return "not_pv"
    irr = irreducible_over_q(p)
    if irr is False:
        return "not_pv"
    return "pv" if irr else "conditional"


def is_pv(p: IntPolynomial) -> bool:
    return pv_verdict(p) == "pv"


# ---------------------------------------------------------------------------
# Newton power sums and PV decay

def power_sums(p: IntPolynomial, n: int) -> int:
    """s_n = sum of n-th powers of all roots of monic p, exact."""
    if not p.is_monic:
        raise ValueError("power sums require a monic polynomial")
    if n < 1:
        raise ValueError("n must be >= 1")
    d = p.degree
    c = p.coefficients  # x^d + c[d-1] x^(d-1) + ... + c[0]
    s = [0] * (n + 1)
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, min(k, d) + 1):
            acc += c[d - i] * s[k - i]
        if k <= d:
            acc += k * c[d - k]
        s[k] = -acc
    return s[n]


def pv_decay(p: IntPolynomial, n: int, precision_bits: Optional[int] = None) -> RealApprox:
    """Certified interval for |s_n - lambda^n|, the distance of lambda^n from
    the nearest power-sum integer; for PV numbers this decays to zero.
    """
    if pv_verdict(p) == "not_pv":
        raise ValueError("pv_decay requires a (conditionally) PV polynomial")
    if precision_bits is None:
        lam_rough = float(dominant_root_interval(p, Fraction(1, 10**6)))
        precision_bits = int(2 * n * max(1.0, math.log2(lam_rough))) + 64
    target = Fraction(1, 2**precision_bits)
    iv = dominant_root_interval(p)
    while True:
        lo_n, hi_n = iv.lower**n, iv.upper**n
        if hi_n - lo_n <= target:
            break
        iv = refine_root(p, iv, iv.width / 4)
    s = power_sums(p, n)
    a, b = s - hi_n, s - lo_n  # s_n - lambda^n
    lo_abs = Fraction(0) if a <= 0 <= b else min(abs(a), abs(b))
    return RealApprox(lo_abs, max(abs(a), abs(b)))


# ---------------------------------------------------------------------------
# linear recurrences

@dataclass(frozen=True)
class Recurrence:
    """f_n = sum c_k f_{n-k}, exact big integers."""

    coefficients: tuple  # c_1 .. c_d
    initial: tuple       # f_0 .. f_{d-1}

    def __post_init__(self):
        if len(self.coefficients) < 1 or len(self.coefficients) != len(self.initial):
            raise ValueError("order must be >= 1 and match the initial terms")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        object.__setattr__(self, "initial", tuple(int(c) for c in self.initial))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def term(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        d = self.order
        if n < d:
            return self.initial[n]
        window = list(self.initial)
        for _ in range(d, n + 1):
            nxt = sum(c * f for c, f in zip(self.coefficients, reversed(window)))
            window = window[1:] + [nxt]
        return window[-1]


FIBONACCI = Recurrence((1, 1), (0, 1))
PELL = Recurrence((2, 1), (0, 1))
PADOVAN = Recurrence((0, 1, 1), (1, 1, 1))


def recurrence_term(r: Recurrence, n: int) -> int:
    return r.term(n)


def ratio_limit_check(r: Recurrence, p: IntPolynomial, n: int,
                      width: Fraction = Fraction(1, 10**15)) -> RealApprox:
    """Certified interval for |f_n / f_{n-1} - lambda|."""
    f_prev = r.term(n - 1)
    if f_prev == 0:
        raise ZeroDivisionError("f_{n-1} is zero")
    ratio = Fraction(r.term(n), f_prev)
    iv = refine_root(p, dominant_root_interval(p), width)
    a, b = ratio - iv.upper, ratio - iv.lower
    lo_abs = Fraction(0) if a <= 0 <= b else min(abs(a), abs(b))
    return RealApprox(lo_abs, max(abs(a), abs(b)))
