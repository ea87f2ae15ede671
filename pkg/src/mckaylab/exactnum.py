"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored as polynomials in zeta_n = exp(2*pi*i/n), canonically
reduced modulo the n-th cyclotomic polynomial Phi_n, with Fraction
coefficients.  Two values at the same conductor are equal iff their
coefficient maps are identical; values at different conductors are
compared after lifting both to the lcm.  Arithmetic never minimizes the
conductor on its own; `minimized()` is the explicit normalization pass.

All values are immutable and all operations are pure, so they are safe
to share between threads without coordination.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

Q = Fraction

__all__ = [
    "Cyclotomic",
    "CycParseError",
    "E",
    "cyclotomic_polynomial",
    "sqrt_int",
]


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    r, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            r *= p - 1
            m //= p
            while m % p == 0:
                r *= p
                m //= p
        p += 1
    if m > 1:
        r *= m - 1
    return r


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divmod(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (den monic); remainder must vanish.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, computed by exact division
    of x^n - 1 by the Phi_d for proper divisors d of n."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


_ROWS: dict[int, list[tuple[int, ...]]] = {}


def _reduction_row(n: int, k: int) -> tuple[int, ...]:
    """x^k mod Phi_n as an integer coefficient vector, for phi(n) <= k < n.
    Rows are built incrementally and cached, so only exponents actually
    reduced are ever paid for."""
    d = _totient(n)
    rows = _ROWS.get(n)
    if rows is None:
        phi = cyclotomic_polynomial(n)
        rows = _ROWS[n] = [tuple(-phi[i] for i in range(d))]
    while len(rows) <= k - d:
        prev = rows[-1]
        top = prev[d - 1]
        row = [0] + list(prev[: d - 1])
        if top:
            first = rows[0]
            for i in range(d):
                row[i] += top * first[i]
        rows.append(tuple(row))
    return rows[k - d]


def _reduce(n: int, raw: dict[int, Fraction]) -> dict[int, Fraction]:
    """Canonical form: exponents taken mod n, then reduced below phi(n)."""
    d = _totient(n)
    out: dict[int, Fraction] = {}
    pending: dict[int, Fraction] = {}
    for k, c in raw.items():
        if not c:
            continue
        k %= n
        if k < d:
            out[k] = out.get(k, 0) + c
        else:
            pending[k] = pending.get(k, 0) + c
    for k, c in pending.items():
        for i, t in enumerate(_reduction_row(n, k)):
            if t:
                out[i] = out.get(i, 0) + c * t
    return {k: Q(c) for k, c in out.items() if c}


class CycParseError(ValueError):
    """Syntax error in a cyclotomic literal; `pos` is the offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class Cyclotomic:
    """An element of Q(zeta_n), canonically reduced mod Phi_n."""

    __slots__ = ("conductor", "coeffs", "_key")

    def __init__(self, conductor: int, coeffs: dict[int, Fraction], _reduced: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = coeffs if _reduced else _reduce(conductor, coeffs)
        self._key = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, r) -> "Cyclotomic":
        r = Q(r)
        return cls(1, {0: r} if r else {}, _reduced=True)

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "Cyclotomic":
        if n < 1:
            raise ValueError("conductor must be positive")
        return cls(n, {k % n: Q(1)})

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, {}, _reduced=True)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls.from_rational(1)

    # -- predicates and conversions ----------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(k == 0 for k in self.coeffs)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs.get(0, Q(0))

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational().denominator == 1

    def integer(self) -> int:
        r = self.rational()
        if r.denominator != 1:
            raise ValueError(f"{self} is not a rational integer")
        return r.numerator

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, m: int) -> dict[int, Fraction]:
        if m == self.conductor:
            return self.coeffs
        step = m // self.conductor
        return _reduce(m, {k * step: c for k, c in self.coeffs.items()})

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Cyclotomic(n, out, _reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, {k: -c for k, c in self.coeffs.items()}, _reduced=True)

    def __sub__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # Rational fast paths keep table arithmetic cheap.
        if self.is_rational():
            r = self.coeffs.get(0)
            if r is None:
                return Cyclotomic.zero()
            return Cyclotomic(other.conductor, {k: c * r for k, c in other.coeffs.items()}, _reduced=True)
        if other.is_rational():
            r = other.coeffs.get(0)
            if r is None:
                return Cyclotomic.zero()
            return Cyclotomic(self.conductor, {k: c * r for k, c in self.coeffs.items()}, _reduced=True)
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        raw: dict[int, Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                if k >= n:
                    k -= n
                raw[k] = raw.get(k, 0) + c1 * c2
        return Cyclotomic(n, raw)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if not other.is_rational():
                raise TypeError("division only by rationals")
            other = other.rational()
        r = Q(other)
        if not r:
            raise ZeroDivisionError("division by zero")
        return Cyclotomic(self.conductor, {k: c / r for k, c in self.coeffs.items()}, _reduced=True)

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        acc = Cyclotomic.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def conjugate(self) -> "Cyclotomic":
        n = self.conductor
        return Cyclotomic(n, {(n - k) % n: c for k, c in self.coeffs.items()})

    def norm_squared(self) -> "Cyclotomic":
        """x * conj(x); totally real and nonnegative."""
        return self * self.conjugate()

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self._lift(n) == other._lift(n)

    def __hash__(self) -> int:
        return hash(self.value_key())

    # -- normalization ----------------------------------------------------------

    def _galois(self, j: int) -> dict[int, Fraction]:
        n = self.conductor
        return _reduce(n, {(k * j) % n: c for k, c in self.coeffs.items()})

    def minimal_conductor(self) -> int:
        n = self.conductor
        if self.is_rational():
            return 1
        for d in _divisors(n)[:-1]:
            # fixed by Gal(Q(zeta_n)/Q(zeta_d)) = {j = 1 mod d, gcd(j, n) = 1}?
            fixed = True
            for j in range(1 + d, n, d):
                if gcd(j, n) == 1 and self._galois(j) != self.coeffs:
                    fixed = False
                    break
            if fixed:
                return d
        return n

    def minimized(self) -> "Cyclotomic":
        """Rewrite at the minimal conductor (explicit normalization pass)."""
        d = self.minimal_conductor()
        n = self.conductor
        if d == n:
            return self
        if d == 1:
            return Cyclotomic.from_rational(self.coeffs.get(0, Q(0)))
        # Solve for coordinates over the basis zeta_d^j, 0 <= j < phi(d),
        # lifted into the conductor-n basis.
        phi_d, phi_n = _totient(d), _totient(n)
        step = n // d
        cols = []
        for j in range(phi_d):
            cols.append(_reduce(n, {(j * step) % n: Q(1)}))
        # Gaussian elimination on the phi_n x (phi_d + 1) system.
        mat = [[cols[j].get(i, Q(0)) for j in range(phi_d)] + [self.coeffs.get(i, Q(0))]
               for i in range(phi_n)]
        sol = [Q(0)] * phi_d
        row = 0
        pivots = []
        for col in range(phi_d):
            piv = next((r for r in range(row, phi_n) if mat[r][col]), None)
            if piv is None:
                continue
            mat[row], mat[piv] = mat[piv], mat[row]
            inv = 1 / mat[row][col]
            mat[row] = [x * inv for x in mat[row]]
            for r in range(phi_n):
                if r != row and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
            pivots.append((row, col))
            row += 1
        for r, c in pivots:
            sol[c] = mat[r][phi_d]
        for r in range(row, phi_n):
            if mat[r][phi_d]:
                raise ArithmeticError("conductor minimization failed")
        return Cyclotomic(d, {j: sol[j] for j in range(phi_d) if sol[j]}, _reduced=True)

    def value_key(self):
        """Hashable canonical identity, stable across conductor representations."""
        if self._key is None:
            m = self.minimized()
            self._key = (m.conductor, tuple(sorted(m.coeffs.items())))
        return self._key

    # -- numeric embedding ----------------------------------------------------

    def embed(self) -> complex:
        """Complex embedding zeta_n -> exp(2*pi*i/n)."""
        n = self.conductor
        return sum(complex(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in self.coeffs.items())

    def abs_coeff_sum(self) -> Fraction:
        return sum((abs(c) for c in self.coeffs.values()), Q(0))

    def embed_real(self) -> tuple[Fraction, Fraction]:
        """Certified rational enclosure of the value, which must be real.

        Rational values are returned as exact points.  Otherwise the float
        embedding is padded by S * 1e-12 (S = sum of |coefficients|), a
        generous cover for the <= 3 ulp error of each exp() term.
        """
        if self.is_rational():
            r = self.rational()
            return r, r
        z = self.embed()
        err = (self.abs_coeff_sum() + 1) * Q(1, 10**12)
        if abs(z.imag) > err:
            raise ValueError(f"{self} is not real within certified error")
        re = Q(z.real)
        return re - err, re + err

    # -- rendering ------------------------------------------------------------

    def render(self) -> str:
        """Canonical literal: terms by increasing exponent, zero coefficients
        omitted, coefficient 1 and exponent 1 left implicit."""
        if not self.coeffs:
            return "0"
        n = self.conductor
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            neg = c < 0
            a = abs(c)
            coeff = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            if k == 0:
                body = coeff
            else:
                root = f"E({n})" if k == 1 else f"E({n})^{k}"
                body = root if a == 1 else f"{coeff}*{root}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"Cyclotomic({self.render()!r})"

    # -- parsing ------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Cyclotomic":
        """Parse a cyclotomic literal.

        Grammar (no whitespace)::

            expr   := ['-'] term (('+'|'-') term)*
            term   := coeff ['*' root] | root
            root   := 'E(' uint ')' ['^' uint]
            coeff  := uint ['/' uint]
        """
        return _Parser(text).parse()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> CycParseError:
        return CycParseError(message, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def uint(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def coeff(self) -> Fraction:
        num = self.uint()
        if self.peek() == "/":
            self.pos += 1
            start = self.pos
            den = self.uint()
            if den == 0:
                raise CycParseError("zero denominator", start)
            return Q(num, den)
        return Q(num)

    def root(self) -> tuple[int, int]:
        self.expect("E")
        self.expect("(")
        start = self.pos
        n = self.uint()
        if n == 0:
            raise CycParseError("conductor 0 is not allowed", start)
        self.expect(")")
        k = 1
        if self.peek() == "^":
            self.pos += 1
            k = self.uint()
        k %= n
        if k < 0:
            raise self.error("negative exponent after normalization")
        return n, k

    def term(self) -> Cyclotomic:
        if self.peek() == "E":
            n, k = self.root()
            return Cyclotomic(n, {k: Q(1)})
        c = self.coeff()
        if self.peek() == "*":
            self.pos += 1
            n, k = self.root()
            return Cyclotomic(n, {k: c})
        return Cyclotomic.from_rational(c)

    def parse(self) -> Cyclotomic:
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            t = self.term()
            value = value - t if op == "-" else value + t
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return value


def E(n: int, k: int = 1) -> Cyclotomic:
    """The root of unity exp(2*pi*i*k/n)."""
    return Cyclotomic.root_of_unity(n, k)


def _factor(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyclotomic:
    # Quadratic Gauss sum: sum of legendre(k) zeta_p^k equals sqrt(p) for
    # p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
    if p == 2:
        return E(8) + E(8, 7)
    g = Cyclotomic(p, {k: Q(1 if pow(k, (p - 1) // 2, p) == 1 else -1) for k in range(1, p)})
    if p % 4 == 1:
        return g
    return -E(4) * g


def sqrt_int(m: int) -> Cyclotomic:
    """Exact square root of an integer as a cyclotomic: the positive real
    root for m > 0 and i*sqrt(|m|) for m < 0, built multiplicatively from
    quadratic Gauss sums."""
    if m == 0:
        return Cyclotomic.zero()
    fac = _factor(abs(m))
    square_part = 1
    value = Cyclotomic.one()
    for p, e in fac.items():
        square_part *= p ** (e // 2)
        if e % 2:
            value = value * _sqrt_prime(p)
    value = value * square_part
    if m < 0:
        value = value * E(4)
    return value
