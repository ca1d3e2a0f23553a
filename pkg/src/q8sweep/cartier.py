"""Cartier-Manin data for the curve family y^2 = x(x^4-1)(x^4+ax^2+1).

Because the right-hand side is x times an even polynomial, the matrix of
coefficients c_{ip-j} of its ((p-1)/2)-th power collapses: with e = (p-1)/2,
substituting X = x^2 turns the even part into Q(X) = (X^2-1)(X^2+aX+1)
= X^4 + aX^3 - aX - 1, and coefficient k of Q^e equals coefficient 2k+e of
the full expansion.  Only four distinct coefficients (up to sign) can be
nonzero in the 4x4 matrix, and which four depends on p mod 4.

The production extractor never expands Q^e.  y = Q^e satisfies the first
order equation Q y' = e Q' y, which yields, for 1 <= k < p,

    d_k = [ -a(k-1-e) d_{k-1} + a(k-3-3e) d_{k-3} + (k-4-4e) d_{k-4} ] / k

over F_p[a], with d_0 = (-1)^e.  Every needed index satisfies k < p, so the
division by k is always defined (asserted).  A sliding window of four
polynomials is kept, so the cost is O(sum of the retained degrees) ~ (9/32)p^2
field operations and O(e) memory, versus O(p^2 log p) time and O(p^2) memory
for the naive bivariate power.  The naive path is kept as an oracle and the
two must agree coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import SingularCurve
from .fields import Fp2, PrimeContext
from .poly import (
    Poly,
    is_squarefree,
    poly_add,
    poly_eval_mod,
    poly_gcd,
    poly_monic,
    poly_mul,
    trim,
)

# Sums of three residue products must fit in int64: 3(p-1)^2 < 2^63.
_COEFF_PATH_MAX_P = 1_750_000_000


@dataclass(frozen=True)
class CartierContext:
    """Per-prime data for coefficient extraction.

    target_indices are the four indices k whose coefficient polynomials fill
    the matrix, ascending; entry_indices are the corresponding subscripts of
    the classical c_{ip-j} grid (entry_indices[i] = 2*target_indices[i] + e).
    """

    ctx: PrimeContext

    @classmethod
    def for_prime(cls, p: int) -> "CartierContext":
        return cls(PrimeContext(p))

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def e(self) -> int:
        return (self.ctx.p - 1) // 2

    @cached_property
    def entry_indices(self) -> tuple[int, int, int, int]:
        p = self.p
        if p % 4 == 1:
            grid = (p - 3, p - 1, 2 * p - 4, 2 * p - 2)
        else:
            grid = (p - 4, p - 2, 2 * p - 3, 2 * p - 1)
        return grid

    @cached_property
    def target_indices(self) -> tuple[int, int, int, int]:
        e = self.e
        ks = tuple((g - e) // 2 for g in self.entry_indices)
        assert all(0 <= k < self.p for k in ks)
        return ks


def _bivar_mul(f: list[Poly], g: list[Poly], p: int) -> list[Poly]:
    out: list[Poly] = [[] for _ in range(len(f) + len(g) - 1)]
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                if gj:
                    out[i + j] = poly_add(out[i + j], poly_mul(fi, gj, p), p)
    return out


def coefficient_table_naive(cctx: CartierContext) -> list[Poly]:
    """Oracle path: all coefficients of Q^e by binary exponentiation.

    Q is treated as a polynomial in X whose coefficients are polynomials in
    the curve parameter; the result has 4e+1 entries.
    """
    p = cctx.p
    base: list[Poly] = [[p - 1], [0, p - 1], [], [0, 1], [1]]
    result: list[Poly] = [[1]]
    n = cctx.e
    while n:
        if n & 1:
            result = _bivar_mul(result, base, p)
        n >>= 1
        if n:
            base = _bivar_mul(base, base, p)
    assert len(result) == 4 * cctx.e + 1
    return result


def matrix_entry_polys_naive(cctx: CartierContext) -> tuple[Poly, Poly, Poly, Poly]:
    table = coefficient_table_naive(cctx)
    return tuple(table[k] for k in cctx.target_indices)


def matrix_entry_polys(cctx: CartierContext) -> tuple[Poly, Poly, Poly, Poly]:
    """Production path: the four matrix-entry polynomials via the recurrence.

    Coefficient parity is exploited: coefficient k of Q^e only involves powers
    of the parameter congruent to k mod 2, so each polynomial is stored on
    half-packed arrays (slot i holds the coefficient of degree 2i + (k & 1)).
    """
    p, e = cctx.p, cctx.e
    if p > _COEFF_PATH_MAX_P:
        raise ValueError(
            f"coefficient path supports p <= {_COEFF_PATH_MAX_P} "
            "(int64 accumulation bound); use the pointwise operations instead"
        )
    want = set(cctx.target_indices)
    kmax = max(want)
    assert kmax < p
    captured: dict[int, np.ndarray] = {}
    empty = np.zeros(0, dtype=np.int64)
    w4 = w3 = w2 = empty
    w1 = np.array([1 if e % 2 == 0 else p - 1], dtype=np.int64)
    if 0 in want:
        captured[0] = w1
    for k in range(1, kmax + 1):
        par = k & 1
        bound = k if k < e else e
        size = (bound - par) // 2 + 1
        t = np.zeros(size, dtype=np.int64)
        m1 = (e + 1 - k) % p
        m3 = (k - 3 - 3 * e) % p
        m4 = (k - 4 - 4 * e) % p
        # multiplying by the parameter shifts half-packed slots only when the
        # parity flips to even; sources past the degree bound cancel and drop
        off = 1 - par
        if m1 and w1.size:
            n = min(w1.size, size - off)
            t[off:off + n] += m1 * w1[:n]
        if m3 and w3.size:
            n = min(w3.size, size - off)
            t[off:off + n] += m3 * w3[:n]
        if m4 and w4.size:
            n = min(w4.size, size)
            t[:n] += m4 * w4[:n]
        t %= p
        if k > 1:
            t *= pow(k, -1, p)
            t %= p
        w4, w3, w2, w1 = w3, w2, w1, t
        if k in want:
            captured[k] = t
    out = []
    for k in cctx.target_indices:
        h = captured[k]
        par = k & 1
        full = [0] * (2 * (h.size - 1) + par + 1) if h.size else []
        full[par::2] = [int(v) for v in h]
        out.append(trim(full))
    return tuple(out)


@dataclass(frozen=True)
class GcdAllResult:
    """gcd of the four matrix-entry polynomials, plus its sanity conditions.

    star_ok is true when the polynomial has no root at +-2 and is squarefree
    (constants count as squarefree); under star_ok its degree counts the
    superspecial parameters with multiplicity one each.
    """

    poly: Poly
    star_ok: bool
    star_diagnostics: tuple[str, ...]

    @property
    def deg(self) -> int:
        return len(self.poly) - 1


def gcdall_poly(cctx: CartierContext) -> GcdAllResult:
    """Monic gcd of the four entry polynomials and the sanity evaluation."""
    p = cctx.p
    polys = matrix_entry_polys(cctx)
    assert any(polys), "all four matrix-entry polynomials vanish identically"
    g: Poly = []
    for f in polys:
        if not f:
            continue
        g = list(f) if not g else poly_gcd(g, f, p)
        if len(g) == 1:
            break
    g = poly_monic(g, p)
    problems = []
    if poly_eval_mod(g, 2, p) == 0:
        problems.append("root_at_2")
    if poly_eval_mod(g, p - 2, p) == 0:
        problems.append("root_at_minus_2")
    if not is_squarefree(g, p):
        problems.append("not_squarefree")
    return GcdAllResult(g, not problems, tuple(problems))


def _entry_values_at(cctx: CartierContext, a0: Fp2) -> dict[int, tuple[int, int]]:
    """The four entry coefficients specialized at one parameter value.

    Runs the same recurrence on F_{p^2} scalars (one code path whether or not
    the point lies in F_p); returns {grid index: (c0, c1)}.
    """
    ctx = cctx.ctx
    p, n = ctx.p, ctx.nonresidue
    e = cctx.e
    want = set(cctx.target_indices)
    kmax = max(want)
    a0c0, a0c1 = a0.c0, a0.c1
    na1 = n * a0c1 % p
    w4 = w3 = w2 = (0, 0)
    w1 = (1 if e % 2 == 0 else p - 1, 0)
    captured: dict[int, tuple[int, int]] = {}
    if 0 in want:
        captured[0] = w1
    for k in range(1, kmax + 1):
        m1 = (e + 1 - k) % p
        m3 = (k - 3 - 3 * e) % p
        m4 = (k - 4 - 4 * e) % p
        s0 = (m1 * w1[0] + m3 * w3[0]) % p
        s1 = (m1 * w1[1] + m3 * w3[1]) % p
        t0 = (a0c0 * s0 + na1 * s1 + m4 * w4[0]) % p
        t1 = (a0c0 * s1 + a0c1 * s0 + m4 * w4[1]) % p
        ik = pow(k, -1, p)
        t = (t0 * ik % p, t1 * ik % p)
        w4, w3, w2, w1 = w3, w2, w1, t
        if k in want:
            captured[k] = t
    return {
        grid: captured[k]
        for grid, k in zip(cctx.entry_indices, cctx.target_indices)
    }


def _check_not_singular(ctx: PrimeContext, a0: Fp2) -> None:
    if a0.c1 == 0 and a0.c0 in (2, ctx.p - 2):
        raise SingularCurve(f"parameter {a0} names a singular curve")


def _as_fp2(ctx: PrimeContext, a0) -> Fp2:
    return a0 if isinstance(a0, Fp2) else ctx.fp2(a0)


@dataclass(frozen=True)
class CartierManinMatrix:
    """4x4 Cartier-Manin matrix of one family member over F_{p^2}."""

    entries: tuple[tuple[Fp2, ...], ...]

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells
        )


def cartier_matrix(cctx: CartierContext, a0) -> CartierManinMatrix:
    """The matrix of H_{a0}, entries placed and signed by the p mod 4 shape."""
    ctx = cctx.ctx
    a0 = _as_fp2(ctx, a0)
    _check_not_singular(ctx, a0)
    vals = _entry_values_at(cctx, a0)
    p = ctx.p

    def v(grid: int) -> Fp2:
        c = vals[grid]
        return Fp2(c[0], c[1], ctx)

    def nv(grid: int) -> Fp2:
        c = vals[grid]
        return Fp2(-c[0], -c[1], ctx)

    z = ctx.zero()
    if p % 4 == 1:
        rows = (
            (v(p - 1), z, v(p - 3), z),
            (z, v(2 * p - 2), z, v(2 * p - 4)),
            (v(2 * p - 4), z, v(2 * p - 2), z),
            (z, v(p - 3), z, v(p - 1)),
        )
    else:
        rows = (
            (z, v(p - 2), z, v(p - 4)),
            (v(2 * p - 1), z, v(2 * p - 3), z),
            (z, nv(2 * p - 3), z, nv(2 * p - 1)),
            (nv(p - 4), z, nv(p - 2), z),
        )
    return CartierManinMatrix(rows)


def is_superspecial(cctx: CartierContext, a0) -> bool:
    """Zero-matrix test: all four specialized entry coefficients vanish."""
    ctx = cctx.ctx
    a0 = _as_fp2(ctx, a0)
    _check_not_singular(ctx, a0)
    return all(c == (0, 0) for c in _entry_values_at(cctx, a0).values())


def superspecial_parameters(cctx: CartierContext) -> list[Fp2]:
    """Exhaustive direct check of every parameter in F_{p^2} minus {2, -2}.

    Vectorized form of is_superspecial across all p^2 points at once; this is
    the independent oracle for the gcd-based pipeline and scales to a few
    hundred for p.  Results are sorted on (c0, c1).
    """
    ctx = cctx.ctx
    p, n = ctx.p, ctx.nonresidue
    if p > _COEFF_PATH_MAX_P:
        raise ValueError("exhaustive oracle limited to the int64-safe range")
    e = cctx.e
    want = set(cctx.target_indices)
    kmax = max(want)
    c0 = np.repeat(np.arange(p, dtype=np.int64), p)
    c1 = np.tile(np.arange(p, dtype=np.int64), p)
    na1 = n * c1 % p
    lanes = c0.size
    zero = np.zeros(lanes, dtype=np.int64)
    w4 = (zero, zero)
    w3 = (zero, zero)
    w2 = (zero, zero)
    w1 = (np.full(lanes, 1 if e % 2 == 0 else p - 1, dtype=np.int64), zero)
    ok = np.ones(lanes, dtype=bool)
    if 0 in want:
        ok &= (w1[0] == 0) & (w1[1] == 0)
    for k in range(1, kmax + 1):
        m1 = (e + 1 - k) % p
        m3 = (k - 3 - 3 * e) % p
        m4 = (k - 4 - 4 * e) % p
        ik = pow(k, -1, p)
        s0 = (m1 * w1[0] + m3 * w3[0]) % p
        s1 = (m1 * w1[1] + m3 * w3[1]) % p
        t0 = (c0 * s0 + na1 * s1 + m4 * w4[0]) % p * ik % p
        t1 = (c0 * s1 + c1 * s0 + m4 * w4[1]) % p * ik % p
        w4, w3, w2, w1 = w3, w2, w1, (t0, t1)
        if k in want:
            ok &= (t0 == 0) & (t1 == 0)
    found = [
        ctx.fp2(int(a), int(b))
        for a, b in zip(c0[ok], c1[ok])
        if not (b == 0 and a in (2, p - 2))
    ]
    found.sort()
    return found
