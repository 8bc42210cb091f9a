"""Exact arithmetic in the tower GF(p) < GF(q) < GF(q^2), q = p^t.

An element of GF(q^2) is a plain int in [0, q^2): the base-p packing of its
polynomial coefficients, least significant digit first, so the residue class
of x always has index p.  Index 0 is the zero element and index 1 is one.

Multiplication runs on discrete-log tables built over a canonical modulus:
the lexicographically smallest primitive polynomial of degree 2t over GF(p),
where polynomials are compared by their coefficient packing (low degree
first, as a base-p integer).  "Primitive" means the residue class of x
generates the multiplicative group, so the generator omega is always x
itself and exp/log tables fall out of the primitivity check for free.

The whole tower is capped at p^(2t) <= 2^16; the table build is quadratic
in the field size and everything downstream assumes tables fit in memory.

Convention used throughout the package: 0^0 == 1.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    NonPrimeCharacteristic,
    NotInSubfield,
    ZeroInput,
    ZeroToNegativePower,
)

SIZE_CAP = 1 << 16

# full q^2 x q^2 add/mul tables are built below this size; beyond it,
# addition falls back to per-digit arithmetic and mul to exp/log lookups
_TABLE_CAP = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class Field:
    """GF(q^2) with q = p^t, fixed canonical modulus, table arithmetic.

    Instances are immutable and safe to share; build them with field_new()
    (canonical modulus) or from_modulus() (explicit modulus, e.g. when
    loading a serialized code file).
    """

    def __init__(self, p: int, t: int, modulus: list[int], _tables=None):
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"p = {p} is not prime")
        if t < 1:
            raise FieldTooLarge(f"t = {t} must be positive")
        if p ** (2 * t) > SIZE_CAP:
            raise FieldTooLarge(f"p^(2t) = {p ** (2 * t)} exceeds {SIZE_CAP}")
        self.p = p
        self.t = t
        self.q = p**t
        self.q2 = p ** (2 * t)
        if len(modulus) != 2 * t + 1 or modulus[-1] != 1:
            raise ZeroInput(f"modulus must be monic of degree {2 * t}")
        if any(not 0 <= c < p for c in modulus):
            raise ZeroInput("modulus coefficients must be reduced mod p")
        self.modulus = list(modulus)
        if _tables is not None:
            self._exp, self._log = _tables
        else:
            tables = _build_tables(p, t, modulus)
            if tables is None:
                raise ZeroInput(f"x is not primitive modulo {modulus}")
            self._exp, self._log = tables
        self.omega = p  # the residue class of x
        self._neg = [self._digit_neg(a) for a in range(self.q2)]
        if self.q2 <= _TABLE_CAP:
            self._add = [
                [self._digit_add(a, b) for b in range(self.q2)] for a in range(self.q2)
            ]
        else:
            self._add = None

    # -- digit-level fallbacks ------------------------------------------------

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        shift = 1
        while a or b:
            out += ((a % p + b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def _digit_neg(self, a: int) -> int:
        p = self.p
        out = 0
        shift = 1
        while a:
            out += (-a % p) * shift
            a //= p
            shift *= p
        return out

    # -- ring operations ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q2 - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[-self._log[a] % (self.q2 - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q2 - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1  # 0^0 == 1 by convention
            if e < 0:
                raise ZeroToNegativePower("0 raised to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q2 - 1)]

    def exp(self, e: int) -> int:
        """omega^e, exponent taken mod q^2 - 1."""
        return self._exp[e % (self.q2 - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("log of zero")
        return self._log[a]

    # -- tower structure ------------------------------------------------------

    def frobenius_q(self, a: int) -> int:
        """The conjugation x -> x^q; an involution fixing exactly GF(q)."""
        return self.pow(a, self.q)

    def norm(self, a: int) -> int:
        """x -> x^(q+1), multiplicative onto GF(q); fibers have size q+1."""
        return self.pow(a, self.q + 1)

    def in_subfield(self, a: int) -> bool:
        return self.frobenius_q(a) == a

    def norm_preimage(self, u: int) -> int:
        """Some v with norm(v) = u, for u in GF(q)*.

        Deterministic choice: the v = omega^e with the smallest exponent e,
        i.e. the smallest solution of (q+1)e = log(u) mod (q^2 - 1).
        """
        if u == 0:
            raise ZeroInput("norm preimage of zero")
        if not self.in_subfield(u):
            raise NotInSubfield(f"element {u} is not in GF({self.q})")
        lu = self._log[u]
        # gcd(q+1, q^2-1) = q+1 divides log(u) exactly when u is in GF(q)*
        assert lu % (self.q + 1) == 0
        return self._exp[(lu // (self.q + 1)) % (self.q - 1)]

    def element(self, c: int) -> int:
        """Embed an integer through the prime subfield."""
        return c % self.p

    def elements(self) -> range:
        return range(self.q2)

    def subfield_elements(self) -> list[int]:
        """All of GF(q), zero first, then powers of omega^(q+1)."""
        step = self.q + 1
        return [0] + [self._exp[step * j] for j in range(self.q - 1)]

    def __repr__(self) -> str:
        return f"Field(p={self.p}, t={self.t}, modulus={self.modulus})"

    @classmethod
    def from_modulus(cls, p: int, t: int, modulus: list[int]) -> "Field":
        return cls(p, t, modulus)


def _build_tables(p: int, t: int, modulus: list[int]):
    """exp/log tables for x mod modulus, or None when x is not primitive.

    Walks x^0, x^1, ... by shift-and-reduce; hitting 1 early proves the
    order of x is a proper divisor of q^2 - 1.  Reaching e = q^2 - 1 with
    all powers distinct proves primitivity (and irreducibility with it:
    q^2 - 1 distinct units plus zero exhaust the quotient ring).
    """
    deg = 2 * t
    q2 = p**deg
    head = modulus[:deg]
    coeffs = [0] * deg
    coeffs[0] = 1
    exp = [0] * (q2 - 1)
    log = [0] * q2
    for e in range(q2 - 1):
        idx = 0
        shift = 1
        for c in coeffs:
            idx += c * shift
            shift *= p
        if idx == 1 and e > 0:
            return None  # order of x divides e < q^2 - 1
        exp[e] = idx
        log[idx] = e
        # multiply by x: shift digits, reduce the overflow against the modulus
        top = coeffs[deg - 1]
        for i in range(deg - 1, 0, -1):
            coeffs[i] = (coeffs[i - 1] - top * head[i]) % p
        coeffs[0] = -top * head[0] % p
    # closing the cycle: x^(q^2-1) must come back to 1
    idx = 0
    shift = 1
    for c in coeffs:
        idx += c * shift
        shift *= p
    if idx != 1:
        return None
    return exp, log


@lru_cache(maxsize=None)
def field_new(p: int, t: int = 1) -> Field:
    """GF(p^(2t)) over the canonical modulus.

    Scans monic degree-2t polynomials in packing order and takes the first
    one whose residue class of x is primitive.  Cached: repeated calls hand
    back the same instance, so tables are built once per (p, t).
    """
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"p = {p} is not prime")
    if t < 1:
        raise FieldTooLarge(f"t = {t} must be positive")
    if p ** (2 * t) > SIZE_CAP:
        raise FieldTooLarge(f"p^(2t) = {p ** (2 * t)} exceeds {SIZE_CAP}")
    deg = 2 * t
    for packed in range(p**deg):
        digits = []
        n = packed
        for _ in range(deg):
            digits.append(n % p)
            n //= p
        if digits[0] == 0:
            continue  # x divides the candidate, x could not be a unit
        modulus = digits + [1]
        tables = _build_tables(p, t, modulus)
        if tables is not None:
            return Field(p, t, modulus, _tables=tables)
    raise FieldTooLarge(f"no primitive polynomial found for p={p}, t={t}")


@lru_cache(maxsize=None)
def field_for_q(q: int) -> Field:
    """GF(q^2) for a prime power q, factoring q as p^t."""
    p = 2
    while p * p <= q:
        if q % p == 0:
            t = 0
            n = q
            while n % p == 0:
                n //= p
                t += 1
            if n != 1:
                raise NonPrimeCharacteristic(f"q = {q} is not a prime power")
            return field_new(p, t)
        p += 1
    return field_new(q, 1)
