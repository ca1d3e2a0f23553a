"""Dense univariate polynomial arithmetic over F_p.

A polynomial is a plain list of int coefficients in [0, p), ascending degree,
with no trailing zeros; the zero polynomial is the empty list.  degree([]) is
None, a sentinel rather than a number.  The modulus travels as an explicit
argument, sympy-galoistools style, because the hot paths live in tight loops.

Multiplication is schoolbook below a threshold and Karatsuba above it; the
Euclidean gcd switches to a numpy-backed remainder loop for large degrees.
Factorization is distinct-degree decomposition followed by Cantor-Zassenhaus
equal-degree splitting driven by a seeded deterministic random stream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BothZero, ExactDivisionFailed, NotSquarefree, ZeroInput
from .fields import Fp2, PrimeContext, fp2_inv, sqrt_mod_p

Poly = list  # list[int], ascending coefficients, trimmed

_KARATSUBA_CUTOFF = 48
_NP_GCD_CUTOFF = 96          # total length above which gcd goes through numpy
_NP_SAFE_P = 1 << 31         # (p-1)^2 must stay far inside int64


def trim(f: Poly) -> Poly:
    """Drop trailing zeros in place; returns f."""
    while f and f[-1] == 0:
        f.pop()
    return f


def normalize(seq: Sequence[int], p: int) -> Poly:
    """Canonicalize arbitrary int coefficients into a valid Poly."""
    return trim([c % p for c in seq])


def degree(f: Poly) -> Optional[int]:
    """Degree of f, or None for the zero polynomial."""
    return len(f) - 1 if f else None


def poly_add(f: Poly, g: Poly, p: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def poly_sub(f: Poly, g: Poly, p: int) -> Poly:
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def poly_neg(f: Poly, p: int) -> Poly:
    return [(-c) % p for c in f]


def poly_scale(f: Poly, c: int, p: int) -> Poly:
    c %= p
    if c == 0:
        return []
    return trim([a * c % p for a in f])


def poly_shift(f: Poly, k: int) -> Poly:
    """Multiply by the indeterminate to the k-th power."""
    return [0] * k + f if f else []


def mul_schoolbook(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def _mul_karatsuba(f: Poly, g: Poly, p: int) -> Poly:
    n = min(len(f), len(g))
    if n <= _KARATSUBA_CUTOFF:
        return mul_schoolbook(f, g, p)
    m = max(len(f), len(g)) // 2
    f0, f1 = f[:m], f[m:]
    g0, g1 = g[:m], g[m:]
    low = _mul_karatsuba(f0, g0, p)
    high = _mul_karatsuba(f1, g1, p)
    mid = _mul_karatsuba(poly_add(f0, f1, p), poly_add(g0, g1, p), p)
    mid = poly_sub(poly_sub(mid, low, p), high, p)
    out = poly_add(low, poly_shift(mid, m), p)
    return poly_add(out, poly_shift(high, 2 * m), p)


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    """Exact product in F_p[a]."""
    if not f or not g:
        return []
    if min(len(f), len(g)) <= _KARATSUBA_CUTOFF:
        return mul_schoolbook(f, g, p)
    return _mul_karatsuba(f, g, p)


def poly_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    """Quotient and remainder; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return [], trim(r)
    inv = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - dg] = c
            for j in range(dg):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
        r[i] = 0
    return trim(q), trim(r[:dg])


def poly_rem(f: Poly, g: Poly, p: int) -> Poly:
    return poly_divmod(f, g, p)[1]


def poly_exact_div(f: Poly, g: Poly, p: int) -> Poly:
    """Division known to be exact; a nonzero remainder is an internal bug."""
    q, r = poly_divmod(f, g, p)
    if r:
        raise ExactDivisionFailed(f"nonzero remainder {r} in exact division")
    return q


def divides(g: Poly, f: Poly, p: int) -> bool:
    """True when g exactly divides f."""
    return not poly_rem(f, g, p)


def poly_monic(f: Poly, p: int) -> Poly:
    if not f:
        return []
    if f[-1] == 1:
        return list(f)
    return poly_scale(f, pow(f[-1], -1, p), p)


def _np_rem_into(r: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    # g monic; eliminates leading coefficients of r in place, returns remainder
    dg = g.size - 1
    gl = g[:dg]
    tmp = np.empty(dg, dtype=np.int64)
    for i in range(r.size - 1, dg - 1, -1):
        c = int(r[i])
        if c:
            seg = r[i - dg:i]
            np.multiply(gl, c, out=tmp)
            np.subtract(seg, tmp, out=seg)
            np.mod(seg, p, out=seg)
    out = r[:dg]
    n = out.size
    while n and not out[n - 1]:
        n -= 1
    return out[:n]


def _gcd_numpy(f: Poly, g: Poly, p: int) -> Poly:
    fa = np.array(f, dtype=np.int64)
    ga = np.array(g, dtype=np.int64)
    while ga.size:
        lead = int(ga[-1])
        if lead != 1:
            ga = ga * pow(lead, -1, p) % p
        if fa.size >= ga.size:
            ra = _np_rem_into(fa.copy(), ga, p)
        else:
            ra = fa
        fa, ga = ga, ra
    lead = int(fa[-1])
    if lead != 1:
        fa = fa * pow(lead, -1, p) % p
    return [int(c) for c in fa]


def poly_gcd(f: Poly, g: Poly, p: int) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    if len(f) + len(g) > _NP_GCD_CUTOFF and p < _NP_SAFE_P:
        if not f:
            return poly_monic(g, p)
        if not g:
            return poly_monic(f, p)
        return _gcd_numpy(f, g, p)
    while g:
        f, g = g, poly_rem(f, g, p)
    return poly_monic(f, p)


def poly_deriv(f: Poly, p: int) -> Poly:
    return trim([i * f[i] % p for i in range(1, len(f))])


def is_squarefree(f: Poly, p: int) -> bool:
    """True iff gcd(f, f') is constant."""
    if not f:
        raise ZeroInput("squarefreeness of the zero polynomial is undefined")
    if len(f) == 1:
        return True
    return len(poly_gcd(f, poly_deriv(f, p), p)) == 1


def poly_eval_mod(f: Poly, x: int, p: int) -> int:
    """Horner evaluation at an F_p point."""
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def poly_eval(f: Poly, x: Fp2) -> Fp2:
    """Horner evaluation at an F_{p^2} point."""
    p, n = x.ctx.p, x.ctx.nonresidue
    a0, a1 = 0, 0
    x0, x1 = x.c0, x.c1
    for c in reversed(f):
        a0, a1 = (a0 * x0 + n * a1 * x1 + c) % p, (a0 * x1 + a1 * x0) % p
    return Fp2(a0, a1, x.ctx)


def poly_pow_mod(f: Poly, n: int, m: Poly, p: int) -> Poly:
    """f^n modulo the polynomial m."""
    result = [1 % p]
    base = poly_rem(f, m, p)
    while n:
        if n & 1:
            result = poly_rem(poly_mul(result, base, p), m, p)
        n >>= 1
        if n:
            base = poly_rem(poly_mul(base, base, p), m, p)
    return result


@dataclass(frozen=True)
class FactorList:
    """unit * prod(factor^multiplicity) == the factored polynomial."""

    unit: int
    factors: tuple[tuple[tuple[int, ...], int], ...]  # (monic coeffs, multiplicity)

    def expand(self, p: int) -> Poly:
        out = [self.unit % p]
        for coeffs, mult in self.factors:
            for _ in range(mult):
                out = poly_mul(out, list(coeffs), p)
        return out


def _equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    # Cantor-Zassenhaus; f monic squarefree, all irreducible factors of degree d
    if len(f) - 1 == d:
        return [f]
    exponent = (p ** d - 1) // 2
    while True:
        r = [rng.randrange(p) for _ in range(len(f) - 1)]
        trim(r)
        if len(r) < 2:
            continue
        s = poly_pow_mod(r, exponent, f, p)
        s = poly_sub(s, [1], p)
        if not s:
            continue
        h = poly_gcd(f, s, p)
        if 0 < len(h) - 1 < len(f) - 1:
            return _equal_degree_split(h, d, p, rng) + _equal_degree_split(
                poly_exact_div(f, h, p), d, p, rng
            )


def factor_squarefree(f: Poly, p: int, seed: int = 0) -> FactorList:
    """Factor a nonzero squarefree polynomial into monic irreducibles.

    The Cantor-Zassenhaus randomness comes from random.Random(seed) so runs
    are reproducible; the seed is echoed by callers that emit metadata.
    """
    if not f:
        raise ZeroInput("cannot factor the zero polynomial")
    if not is_squarefree(f, p):
        raise NotSquarefree("factor_squarefree requires a squarefree input")
    unit = f[-1]
    f = poly_monic(f, p)
    if len(f) == 1:
        return FactorList(unit, ())
    rng = random.Random(seed)
    found: list[tuple[Poly, int]] = []
    x = [0, 1]
    h = list(x)
    rem = f
    d = 0
    while len(rem) - 1 >= 2 * (d + 1):
        d += 1
        h = poly_pow_mod(h, p, rem, p)
        g = poly_gcd(rem, poly_sub(h, x, p), p)
        if len(g) > 1:
            for piece in _equal_degree_split(g, d, p, rng):
                found.append((piece, d))
            rem = poly_exact_div(rem, g, p)
            h = poly_rem(h, rem, p)
    if len(rem) > 1:
        found.append((rem, len(rem) - 1))
    found.sort(key=lambda t: (t[1], t[0]))
    return FactorList(unit, tuple((tuple(g), 1) for g, _ in found))


def roots_in_fp2(
    f: Poly, ctx: PrimeContext, seed: int = 0
) -> tuple[set[Fp2], tuple[int, ...]]:
    """All zeros of f in F_{p^2}, plus degrees of factors too big to split there.

    Roots come from the degree-1 and degree-2 irreducible factors; the second
    component lists the degrees (>= 3) of factors whose roots live in bigger
    extensions.  Requires f nonzero and squarefree.
    """
    factors = factor_squarefree(f, ctx.p, seed)
    p = ctx.p
    roots: set[Fp2] = set()
    residual: list[int] = []
    for coeffs, _mult in factors.factors:
        g = list(coeffs)
        d = len(g) - 1
        if d == 1:
            roots.add(ctx.fp2(-g[0]))
        elif d == 2:
            # monic a^2 + b a + c, irreducible, so the discriminant is a
            # non-square and sqrt(disc) = sqrt(disc/n) * w lands outside F_p
            b, c = g[1], g[0]
            disc = (b * b - 4 * c) % p
            t = sqrt_mod_p(disc * pow(ctx.nonresidue, -1, p) % p, ctx)
            assert t is not None, "reducible quadratic escaped factorization"
            r = ctx.fp2(-b, t) * fp2_inv(ctx.fp2(2), ctx)
            roots.add(r)
            roots.add(r.conjugate())
        else:
            residual.append(d)
    return roots, tuple(sorted(residual))


def format_poly(f: Poly, var: str = "a") -> str:
    """Human form, descending terms: 'a^2 + 12', '17*a^3 + a', '0', ..."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts) if parts else "0"
