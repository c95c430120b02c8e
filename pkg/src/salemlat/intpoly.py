"""Exact integer polynomial arithmetic and root location.

Coefficients are arbitrary-precision integers in ascending degree order.
Real-root counting goes through Sturm sequences over exact rationals,
roots of unity are recognised by Graeffe squaring, and irreducibility
testing combines the rational-root test, factor-degree patterns modulo
small primes and a Kronecker-style bounded search for monic factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

from .rational import RationalInterval

IRREDUCIBILITY_DEGREE_BOUND = 24


class EndpointRootError(ValueError):
    """A Sturm-count endpoint is itself a root."""

    def __init__(self, endpoint: Fraction):
        self.endpoint = endpoint
        super().__init__(f"interval endpoint {endpoint} is a root")


class DegreeBoundError(ValueError):
    pass


class NotReciprocalError(ValueError):
    pass


class OddDegreeError(ValueError):
    """Trace-polynomial input must have even degree."""


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending, no trailing zeros."""

    coeffs: tuple[int, ...]

    @staticmethod
    def from_coeffs(coeffs) -> "IntPolynomial":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def x() -> "IntPolynomial":
        return IntPolynomial((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            return 0
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_coeffs(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        if k == 0:
            return IntPolynomial.zero()
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def mirror(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial.from_coeffs(
            [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)]
        )

    def reverse(self) -> "IntPolynomial":
        """x^deg * p(1/x): the coefficient list reversed."""
        return IntPolynomial.from_coeffs(tuple(reversed(self.coeffs)))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        g = self.content()
        if g in (0, 1):
            return self
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def divmod_by(self, divisor: "IntPolynomial"):
        """Polynomial division over Q, returned as Fraction coefficient lists."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        div = [Fraction(c) for c in divisor.coeffs]
        dn = len(div) - 1
        if len(rem) - 1 < dn:
            return [], rem
        quot = [Fraction(0)] * (len(rem) - dn)
        for k in range(len(rem) - dn - 1, -1, -1):
            q = rem[dn + k] / div[dn]
            quot[k] = q
            if q:
                for j in range(dn + 1):
                    rem[j + k] -= q * div[j]
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem

    def divides(self, other: "IntPolynomial") -> bool:
        _, rem = other.divmod_by(self)
        return not rem

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        quot, rem = self.divmod_by(divisor)
        if rem:
            raise ValueError("division is not exact")
        out = []
        for q in quot:
            if q.denominator != 1:
                raise ValueError("quotient is not integral")
            out.append(q.numerator)
        return IntPolynomial.from_coeffs(out)

    def __repr__(self) -> str:
        if self.is_zero:
            return "IntPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"


def poly_from_string(text: str) -> IntPolynomial:
    """Parse comma-separated ascending coefficients, e.g. '1,-1,-1,-1,1'."""
    return IntPolynomial.from_coeffs(int(t) for t in text.split(","))


def is_reciprocal(p: IntPolynomial) -> bool:
    """Palindromic coefficient test; requires a nonzero polynomial."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    return p.coeffs == tuple(reversed(p.coeffs))


def gcd_poly(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Monic gcd over Q, returned as a primitive integer polynomial."""
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]

    def rem(f, g):
        f = f[:]
        dn = len(g) - 1
        while len(f) - 1 >= dn and f:
            q = f[-1] / g[-1]
            k = len(f) - 1 - dn
            for j in range(dn + 1):
                f[j + k] -= q * g[j]
            while f and f[-1] == 0:
                f.pop()
        return f

    while fb:
        fa, fb = fb, rem(fa, fb)
    if not fa:
        return IntPolynomial.zero()
    from math import lcm

    denom = 1
    for c in fa:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in fa]
    out = IntPolynomial.from_coeffs(ints).primitive()
    if out.leading < 0:
        out = -out
    return out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree <= 0:
        return p
    g = gcd_poly(p, p.derivative())
    if g.degree <= 0:
        return p
    return p.exact_div(g)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """[(q, k)] with p = lc * prod q^k, each q squarefree and the q coprime."""
    parts: list[tuple[IntPolynomial, int]] = []
    # chain g_k = prod f_i^{max(e_i - k, 0)}
    chain = [p]
    while chain[-1].degree > 0:
        cur = chain[-1]
        chain.append(gcd_poly(cur, cur.derivative()))
    # sf_k = g_{k-1} / g_k = product of factors of multiplicity >= k
    sf = []
    for k in range(1, len(chain)):
        sf.append(chain[k - 1].exact_div(chain[k]) if chain[k].degree >= 0 else chain[k - 1])
    for k in range(len(sf)):
        exact = sf[k] if k + 1 >= len(sf) else sf[k].exact_div(sf[k + 1])
        if exact.degree >= 1:
            parts.append((exact, k + 1))
    return parts


def cauchy_root_bound(p: IntPolynomial) -> Fraction:
    """1 + max |a_i / a_n|; all roots lie strictly inside this radius."""
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    lead = abs(p.leading)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs[:-1])


def _sturm_chain(p: IntPolynomial) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in p.coeffs],
             [Fraction(c) for c in p.derivative().coeffs]]

    def rem(f, g):
        f = f[:]
        dn = len(g) - 1
        while f and len(f) - 1 >= dn:
            q = f[-1] / g[-1]
            k = len(f) - 1 - dn
            for j in range(dn + 1):
                f[j + k] -= q * g[j]
            while f and f[-1] == 0:
                f.pop()
        return f

    while chain[-1]:
        r = rem(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _eval_chain(chain, x: Fraction):
    out = []
    for cs in chain:
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * x + c
        out.append(acc)
    return out


class SturmContext:
    """Precomputed Sturm chain for repeated counting on one polynomial."""

    def __init__(self, p: IntPolynomial):
        self.polynomial = p
        self._chain = _sturm_chain(p) if p.degree >= 1 else []

    def count(self, lo: Fraction, hi: Fraction) -> int:
        if not self._chain or lo == hi:
            return 0
        p = self.polynomial
        if p(lo) == 0:
            raise EndpointRootError(lo)
        if p(hi) == 0:
            raise EndpointRootError(hi)
        return (_variations(_eval_chain(self._chain, lo))
                - _variations(_eval_chain(self._chain, hi)))


def sturm_count(p: IntPolynomial, interval: RationalInterval) -> int:
    """Exact number of real roots of a squarefree p in the open interval.

    Raises EndpointRootError when an endpoint is a root, which would make
    the count ill-defined.
    """
    if p.degree < 1:
        return 0
    return SturmContext(p).count(Fraction(interval.lo), Fraction(interval.hi))


def count_real_roots(p: IntPolynomial) -> int:
    """Distinct real roots of a squarefree p over all of R."""
    if p.degree < 1:
        return 0
    chain = _sturm_chain(p)
    at_minus = [cs[-1] * (-1) ** (len(cs) - 1) for cs in chain]
    at_plus = [cs[-1] for cs in chain]
    return _variations(at_minus) - _variations(at_plus)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError("n >= 1 required")
    num = IntPolynomial.from_coeffs([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic_polynomial(d))
    return num


@lru_cache(maxsize=None)
def _cyclotomic_indices_up_to_degree(degree: int) -> tuple[int, ...]:
    # phi(n) >= sqrt(n/2), so n <= 2*degree^2 + 1 suffices
    bound = 2 * degree * degree + 8
    return tuple(n for n in range(1, bound + 1) if euler_phi(n) <= degree)


def cyclotomic_order(p: IntPolynomial) -> int | None:
    """The n with p equal to the n-th cyclotomic polynomial, else None."""
    if not p.is_monic or p.degree < 1:
        return None
    for n in _cyclotomic_indices_up_to_degree(p.degree):
        if euler_phi(n) == p.degree and cyclotomic_polynomial(n) == p:
            return n
    return None


def strip_cyclotomic_factors(p: IntPolynomial):
    """Divide out every cyclotomic factor.

    Returns (remainder, [(n, multiplicity)]). Complete because a cyclotomic
    factor of p has phi(n) <= deg p.
    """
    rem = p
    found: list[tuple[int, int]] = []
    for n in _cyclotomic_indices_up_to_degree(max(p.degree, 1)):
        phi_n = cyclotomic_polynomial(n)
        if phi_n.degree > rem.degree:
            continue
        mult = 0
        while rem.degree >= phi_n.degree and phi_n.divides(rem):
            rem = rem.exact_div(phi_n)
            mult += 1
        if mult:
            found.append((n, mult))
    return rem, found


def _graeffe(p: IntPolynomial) -> IntPolynomial:
    """Monic polynomial whose roots are the squares of the roots of p."""
    n = p.degree
    prod = p * p.mirror()
    even = [prod.coeffs[2 * k] if 2 * k < len(prod.coeffs) else 0 for k in range(n + 1)]
    if n % 2 == 1:
        even = [-c for c in even]
    return IntPolynomial.from_coeffs(even)


def is_cyclotomic_product(p: IntPolynomial) -> bool:
    """True iff every root of p is a root of unity.

    Graeffe squaring with cycle detection: the root set of a product of
    cyclotomics is a finite set of roots of unity, stable as a set under
    repeated squaring, so the squarefree iterates must cycle. A root off
    the unit circle forces doubly-exponential coefficient growth instead,
    caught by the binomial bound. 2*deg + 8 iterations suffice for the
    supported degrees.
    """
    if not p.is_monic:
        raise ValueError("monic polynomial required")
    if p.degree == 0:
        return True
    if p.constant == 0:
        return False
    q = squarefree_part(p)
    seen = {q.coeffs}
    for _ in range(2 * p.degree + 8):
        q = squarefree_part(_graeffe(q))
        n = q.degree
        if any(abs(c) > comb(n, k) for k, c in enumerate(q.coeffs)):
            return False
        if q.coeffs in seen:
            return True
        seen.add(q.coeffs)
    return False


def trace_polynomial(p: IntPolynomial) -> IntPolynomial:
    """The q of degree n with p(x) = x^n q(x + 1/x), for reciprocal p of degree 2n.

    Uses the recursion t_k(y) = y t_{k-1}(y) - t_{k-2}(y) for x^k + x^{-k}.
    """
    if not is_reciprocal(p):
        raise NotReciprocalError("trace polynomial requires a reciprocal polynomial")
    if p.degree % 2 != 0:
        raise OddDegreeError("trace polynomial requires even degree")
    n = p.degree // 2
    t_prev = IntPolynomial.from_coeffs([2])
    t_cur = IntPolynomial.x()
    q = IntPolynomial.from_coeffs([p.coeffs[n]])
    for k in range(1, n + 1):
        q = q + t_cur.scale(p.coeffs[n + k])
        t_prev, t_cur = t_cur, IntPolynomial.x() * t_cur - t_prev
    return q


# ---------------------------------------------------------------------------
# irreducibility and bounded factor search
# ---------------------------------------------------------------------------


def _poly_mod(coeffs: tuple[int, ...], p: int) -> list[int]:
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pm_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _pm_mod(a, m, p):
    a = a[:]
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = (a[-1] * inv_lead) % p
        k = len(a) - len(m)
        for j in range(len(m)):
            a[j + k] = (a[j + k] - c * m[j]) % p
        while a and a[-1] == 0:
            a.pop()
    return a

def _pm_gcd(a, b, p):
    while b:
        a, b = b, _pm_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _pm_powmod(base, e, m, p):
    result = [1]
    base = _pm_mod(base, m, p)
    while e:
        if e & 1:
            result = _pm_mod(_pm_mul(result, base, p), m, p)
        base = _pm_mod(_pm_mul(base, base, p), m, p)
        e >>= 1
    return result


def _ddf_degrees(poly: IntPolynomial, p: int) -> list[int] | None:
    """Degrees (with multiplicity) of the irreducible factors of poly mod p.

    Distinct-degree factorization; None when poly is not squarefree mod p
    or drops degree mod p, in which case the pattern gives no information.
    """
    f = _poly_mod(poly.coeffs, p)
    if len(f) - 1 != poly.degree:
        return None
    fd = [(i * c) % p for i, c in enumerate(f)][1:]
    while fd and fd[-1] == 0:
        fd.pop()
    if not fd or len(_pm_gcd(f, fd, p)) > 1:
        return None
    degrees = []
    x = [0, 1]
    h = x[:]
    d = 1
    while len(f) - 1 >= 2 * d:
        h = _pm_powmod(h, p, f, p)
        delta = h[:]
        # h - x
        while len(delta) < 2:
            delta.append(0)
        delta[1] = (delta[1] - 1) % p
        while delta and delta[-1] == 0:
            delta.pop()
        g = _pm_gcd(f, delta, p)
        if len(g) > 1:
            for _ in range((len(g) - 1) // d):
                degrees.append(d)
            f = _pm_mod_exact(f, g, p)
            h = _pm_mod(h, f, p)
        d += 1
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return degrees


def _pm_mod_exact(a, g, p):
    # exact quotient a / g over GF(p)
    a = a[:]
    out = [0] * (len(a) - len(g) + 1)
    inv = pow(g[-1], -1, p)
    for k in range(len(out) - 1, -1, -1):
        c = (a[len(g) - 1 + k] * inv) % p
        out[k] = c
        if c:
            for j in range(len(g)):
                a[j + k] = (a[j + k] - c * g[j]) % p
    return out


def _possible_proper_degrees(p: IntPolynomial) -> set[int]:
    """Degrees d in [1, n-1] that a monic integer factor could have."""
    n = p.degree
    possible = set(range(1, n))
    for prime in (2, 3, 5, 7, 11):
        degs = _ddf_degrees(p, prime)
        if degs is None:
            continue
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        possible &= sums
        if not possible & set(range(1, n // 2 + 1)):
            break
    return possible


def _divisors_signed(n: int) -> list[int]:
    n = abs(n)
    divs = set()
    f = _factorize(n)
    items = list(f.items())

    def rec(i, cur):
        if i == len(items):
            divs.add(cur)
            divs.add(-cur)
            return
        pr, e = items[i]
        v = 1
        for _ in range(e + 1):
            rec(i + 1, cur * v)
            v *= pr
    rec(0, 1)
    return sorted(divs, key=abs)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    n = abs(n)
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 10**6:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += wheel[i % 8]
        i += 1
    if n > 1:
        n = _pollard_split(n, out)
    return out


def _pollard_split(n: int, out: dict[int, int]) -> int:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return 1


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _l2_norm_bound(p: IntPolynomial) -> int:
    return isqrt(sum(c * c for c in p.coeffs)) + 1


def _mignotte_factor_bound(p: IntPolynomial, d: int) -> int:
    """Bound on coefficients of a monic degree-d factor of monic p.

    Mignotte: |b_j| <= C(d-1, j) ||p||_2 + C(d-1, j-1) |lc(p)|.
    """
    norm = _l2_norm_bound(p)
    return max(comb(d - 1, j) * norm + comb(d - 1, max(j - 1, 0)) for j in range(d))


def _interpolate_monic(points: list[int], values: list[int], d: int) -> IntPolynomial | None:
    """Monic degree-d integer polynomial through the given points, or None."""
    # g = x^d + h with deg h < d; interpolate h by Lagrange
    n = len(points)
    assert n == d
    coeffs = [Fraction(0)] * d
    for i in range(n):
        target = Fraction(values[i] - points[i] ** d)
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(num) + 1)
            for k, c in enumerate(num):
                new[k] -= c * points[j]
                new[k + 1] += c
            num = new
            denom *= points[i] - points[j]
        w = target / denom
        for k, c in enumerate(num):
            coeffs[k] += w * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            return None
        out.append(c.numerator)
    out.append(1)
    return IntPolynomial.from_coeffs(out)


def _kronecker_factor(p: IntPolynomial, d: int) -> IntPolynomial | None:
    """Search for a monic degree-d factor through divisor interpolation.

    Kronecker's method: a factor g satisfies g(t) | p(t) at every integer t,
    so candidate factors are interpolated from divisor tuples and checked
    by exact division. Mignotte bounds prune the divisor lists.
    """
    points: list[int] = []
    t = 0
    while len(points) < d:
        if p(t) != 0:
            points.append(t)
        t = -t if t > 0 else -t + 1
    bound = _mignotte_factor_bound(p, d)
    divisor_lists = []
    for t in points:
        limit = sum(abs(t) ** j for j in range(d)) * bound + abs(t) ** d
        divs = [v for v in _divisors_signed(p(t)) if abs(v) <= limit]
        divisor_lists.append(divs)
    order = sorted(range(d), key=lambda i: len(divisor_lists[i]))
    pts = [points[i] for i in order]
    lists = [divisor_lists[i] for i in order]
    for values in itertools.product(*lists):
        g = _interpolate_monic(pts, list(values), d)
        if g is None or g.degree != d:
            continue
        if any(abs(c) > bound for c in g.coeffs[:-1]):
            continue
        if g.divides(p):
            return g
    return None


def is_irreducible_over_integers(p: IntPolynomial) -> bool:
    """Irreducibility over Z for monic p of degree <= 24.

    Rational-root test, then factor-degree patterns modulo small primes,
    then a bounded Kronecker search over the surviving degrees.
    """
    if not p.is_monic or p.degree < 1:
        raise ValueError("monic polynomial of degree >= 1 required")
    if p.degree > IRREDUCIBILITY_DEGREE_BOUND:
        raise DegreeBoundError(
            f"degree {p.degree} exceeds the supported bound {IRREDUCIBILITY_DEGREE_BOUND}"
        )
    n = p.degree
    if n == 1:
        return True
    if p.constant == 0:
        return False
    for r in _divisors_signed(p.constant):
        if p(r) == 0:
            return False
    if gcd_poly(p, p.derivative()).degree > 0:
        return False
    possible = _possible_proper_degrees(p)
    for d in sorted(possible):
        if d > n // 2:
            break
        if d == 1:
            continue  # already covered by the rational-root test
        if _kronecker_factor(p, d) is not None:
            return False
    return True


def monic_irreducible_factors(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Factor a monic p into monic irreducibles, sorted, with multiplicities."""
    if not p.is_monic:
        raise ValueError("monic polynomial required")
    factors: dict[tuple[int, ...], int] = {}

    def add(f: IntPolynomial, mult: int):
        factors[f.coeffs] = factors.get(f.coeffs, 0) + mult

    def work(q: IntPolynomial, mult: int):
        if q.degree == 0:
            return
        while q.constant == 0:
            add(IntPolynomial.x(), mult)
            q = q.exact_div(IntPolynomial.x())
            if q.degree == 0:
                return
        for part, k in squarefree_decomposition(q) if gcd_poly(q, q.derivative()).degree > 0 else [(q, 1)]:
            split_squarefree(part, mult * k)

    def split_squarefree(q: IntPolynomial, mult: int):
        if q.degree == 0:
            return
        if q.degree == 1:
            add(q, mult)
            return
        for r in _divisors_signed(q.constant):
            if q(r) == 0:
                add(IntPolynomial.from_coeffs([-r, 1]), mult)
                split_squarefree(q.exact_div(IntPolynomial.from_coeffs([-r, 1])), mult)
                return
        rem, cyclo = strip_cyclotomic_factors(q)
        if cyclo:
            for n, k in cyclo:
                add(cyclotomic_polynomial(n), mult * k)
            split_squarefree(rem, mult)
            return
        possible = _possible_proper_degrees(q)
        for d in sorted(possible):
            if d > q.degree // 2:
                break
            if d == 1:
                continue  # integer roots were exhausted above
            g = _kronecker_factor(q, d)
            if g is not None:
                split_squarefree(g, mult)
                split_squarefree(q.exact_div(g), mult)
                return
        add(q, mult)

    work(p, 1)
    out = [(IntPolynomial(c), m) for c, m in factors.items()]
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def count_roots_outside_unit_circle(p: IntPolynomial) -> int:
    """Roots with |z| > 1, counted with multiplicity, for self-reciprocal inputs.

    Strips cyclotomic factors (all roots on the circle), then works on the
    reversed-polynomial-invariant remainder through its trace polynomial:
    a squarefree palindromic part of degree 2s with r real trace roots in
    (-2, 2) has exactly s - r roots outside the circle.
    """
    if p.is_zero or p.constant == 0:
        raise ValueError("polynomial must not vanish at 0")
    rem, _ = strip_cyclotomic_factors(p)
    if rem.degree <= 0:
        return 0
    if not is_reciprocal(rem):
        raise ValueError(
            "root counting outside the circle needs the non-cyclotomic part "
            "to be self-reciprocal (true for isometry characteristic polynomials)"
        )
    total = 0
    for part, mult in squarefree_decomposition(rem):
        if not is_reciprocal(part) or part.degree % 2 != 0:
            raise ValueError("unexpected non-reciprocal squarefree component")
        q = trace_polynomial(part)
        inside = sturm_count(q, RationalInterval(Fraction(-2), Fraction(2)))
        total += mult * (part.degree // 2 - inside)
    return total
