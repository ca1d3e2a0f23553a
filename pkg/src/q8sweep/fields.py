"""Arithmetic in F_p and its quadratic extension F_{p^2}.

Elements of F_p are plain Python ints kept as canonical residues in [0, p).
F_{p^2} is realized as F_p[w]/(w^2 - n) where n is the smallest quadratic
non-residue >= 2; elements are Fp2 instances with coordinates (c0, c1) with
respect to the basis {1, w}.  All values are immutable after construction and
every operation is a pure function, so everything here is safe to share
between threads and processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ZeroInverse

# Deterministic Miller-Rabin witness set, sufficient for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_PRIME = 1 << 62  # products of residues must fit 128-bit intermediates


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p < hi, by a byte sieve."""
    if hi <= 2 or hi <= lo:
        return []
    sieve = bytearray([1]) * hi
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:hi:i] = bytearray(len(range(i * i, hi, i)))
    return [i for i in range(max(lo, 2), hi) if sieve[i]]


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime modulus p (7 <= p < 2^62) plus the canonical non-residue.

    nonresidue is the smallest n >= 2 with Legendre symbol -1, found by linear
    scan, so F_{p^2} coordinates are reproducible across runs.
    """

    p: int
    nonresidue: int = field(init=False)

    def __post_init__(self) -> None:
        p = self.p
        if not isinstance(p, int) or p < 7:
            raise ValueError(f"modulus must be a prime >= 7, got {p!r}")
        if p >= MAX_PRIME:
            raise ValueError(f"modulus must be < 2^62, got {p}")
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        n = 2
        while pow(n, (p - 1) // 2, p) != p - 1:
            n += 1
        object.__setattr__(self, "nonresidue", n)

    def fp2(self, c0: int, c1: int = 0) -> "Fp2":
        """Embed coordinates (reduced mod p) as an F_{p^2} element."""
        return Fp2(c0 % self.p, c1 % self.p, self)

    def one(self) -> "Fp2":
        return Fp2(1, 0, self)

    def zero(self) -> "Fp2":
        return Fp2(0, 0, self)


def legendre_symbol(x: int, ctx: PrimeContext) -> int:
    """Quadratic character of x mod p: 0 for 0, 1 for squares, -1 otherwise."""
    r = pow(x % ctx.p, (ctx.p - 1) // 2, ctx.p)
    return -1 if r == ctx.p - 1 else r


def sqrt_mod_p(x: int, ctx: PrimeContext) -> Optional[int]:
    """A square root of x mod p (either root), or None if x is a non-residue."""
    p = ctx.p
    x %= p
    if x == 0:
        return 0
    if legendre_symbol(x, ctx) == -1:
        return None
    if p % 4 == 3:
        return pow(x, (p + 1) // 4, p)
    # Tonelli-Shanks; ctx.nonresidue doubles as the required non-square.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    c = pow(ctx.nonresidue, q, p)
    r = pow(x, (q + 1) // 2, p)
    t = pow(x, q, p)
    m = s
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


class Fp2:
    """An element c0 + c1*w of F_{p^2}, with w^2 = ctx.nonresidue.

    Lies in F_p exactly when c1 == 0.  Instances are immutable, hashable and
    lexicographically ordered on (c0, c1); the ordering is the tie-break used
    to pick canonical representatives, not a field order.
    """

    __slots__ = ("c0", "c1", "ctx")

    def __init__(self, c0: int, c1: int, ctx: PrimeContext):
        object.__setattr__(self, "c0", c0 % ctx.p)
        object.__setattr__(self, "c1", c1 % ctx.p)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, name, value):
        raise AttributeError("Fp2 elements are immutable")

    def _coerce(self, other) -> "Fp2":
        if isinstance(other, Fp2):
            if other.ctx.p != self.ctx.p:
                raise ValueError("mixed moduli in F_{p^2} arithmetic")
            return other
        if isinstance(other, int):
            return Fp2(other, 0, self.ctx)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp2(self.c0 + o.c0, self.c1 + o.c1, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp2(self.c0 - o.c0, self.c1 - o.c1, self.ctx)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p, n = self.ctx.p, self.ctx.nonresidue
        return Fp2(
            (self.c0 * o.c0 + n * self.c1 * o.c1) % p,
            (self.c0 * o.c1 + self.c1 * o.c0) % p,
            self.ctx,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Fp2(-self.c0, -self.c1, self.ctx)

    def __pow__(self, exponent: int) -> "Fp2":
        if exponent < 0:
            return fp2_inv(self, self.ctx) ** (-exponent)
        result = self.ctx.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c1 == 0 and self.c0 == other % self.ctx.p
        if not isinstance(other, Fp2):
            return NotImplemented
        return (self.c0, self.c1, self.ctx.p) == (other.c0, other.c1, other.ctx.p)

    def __lt__(self, other: "Fp2") -> bool:
        return (self.c0, self.c1) < (other.c0, other.c1)

    def __le__(self, other: "Fp2") -> bool:
        return (self.c0, self.c1) <= (other.c0, other.c1)

    def __hash__(self):
        return hash((self.c0, self.c1, self.ctx.p))

    def __repr__(self):
        return f"Fp2({self.c0}, {self.c1}; p={self.ctx.p})"

    def __str__(self):
        return format_fp2(self)

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def in_base_field(self) -> bool:
        return self.c1 == 0

    def conjugate(self) -> "Fp2":
        """Frobenius image x^p (w^p = -w since w^2 is a non-residue)."""
        return Fp2(self.c0, -self.c1, self.ctx)


def fp2_inv(x: Fp2, ctx: PrimeContext) -> Fp2:
    """Multiplicative inverse in F_{p^2}; raises ZeroInverse on 0."""
    if x.is_zero():
        raise ZeroInverse("inverse of zero in F_{p^2}")
    p, n = ctx.p, ctx.nonresidue
    # 1/(c0 + c1 w) = (c0 - c1 w) / (c0^2 - n c1^2); the norm is in F_p*.
    norm = (x.c0 * x.c0 - n * x.c1 * x.c1) % p
    inv = pow(norm, -1, p)
    return Fp2(x.c0 * inv, -x.c1 * inv, ctx)


def fp2_sqrt(x: Fp2, ctx: PrimeContext) -> Optional[Fp2]:
    """A square root of x in F_{p^2}, or None when x is a non-square.

    Elements of F_p embedded always have a root here.  For c1 != 0 the root
    exists iff the norm c0^2 - n*c1^2 is a quadratic residue mod p.
    """
    p, n = ctx.p, ctx.nonresidue
    if x.is_zero():
        return ctx.zero()
    if x.c1 == 0:
        r = sqrt_mod_p(x.c0, ctx)
        if r is not None:
            return ctx.fp2(r)
        # x = n * (x/n) with x/n a residue, so sqrt(x) = sqrt(x/n) * w.
        r = sqrt_mod_p(x.c0 * pow(n, -1, p) % p, ctx)
        assert r is not None
        return ctx.fp2(0, r)
    norm = (x.c0 * x.c0 - n * x.c1 * x.c1) % p
    d = sqrt_mod_p(norm, ctx)
    if d is None:
        return None
    # Solve (u + v w)^2 = x: u^2 = (c0 + d)/2 for the sign of d making it a
    # residue (their product is n*(c1/2)^2, a non-residue, so exactly one is).
    inv2 = pow(2, -1, p)
    u2 = (x.c0 + d) * inv2 % p
    if legendre_symbol(u2, ctx) != 1:
        u2 = (x.c0 - d) * inv2 % p
    u = sqrt_mod_p(u2, ctx)
    assert u is not None and u != 0
    v = x.c1 * pow(2 * u, -1, p) % p
    return ctx.fp2(u, v)


def format_fp2(x: Fp2) -> str:
    """Canonical literal: 'c0' when the element lies in F_p, else 'c0+c1*w'."""
    if x.c1 == 0:
        return str(x.c0)
    return f"{x.c0}+{x.c1}*w"


def parse_fp2(text: str, ctx: PrimeContext) -> Fp2:
    """Parse 'c0', 'c1*w' or 'c0+c1*w' literals (integer parts may be signed)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty F_{p^2} literal")
    if "w" not in s:
        return ctx.fp2(int(s))
    body, _, tail = s.rpartition("*w")
    if _ == "":
        raise ValueError(f"cannot parse F_(p^2) literal {text!r}")
    if tail:
        raise ValueError(f"cannot parse F_(p^2) literal {text!r}")
    # split body into optional c0 and c1 at the last top-level +/-
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "+-":
            c0, c1 = body[:i], body[i:]
            if c1 in ("+", "-"):
                c1 += "1"
            return ctx.fp2(int(c0), int(c1))
    if body in ("", "+", "-"):
        body += "1"
    return ctx.fp2(0, int(body))
