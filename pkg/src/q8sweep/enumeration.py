"""Per-prime census: isomorphism-class counts and representatives.

For a prime p the pipeline is: build the entry-polynomial gcd, check its
sanity conditions (no root at +-2, squarefree), and read off counts from its
degree.  Every root is a parameter of a superspecial family member and roots
group into isomorphy orbits of size 6, except the two special classes: the
order-24 class contributes the quadratic a^2+12 (2 roots) and the order-32
class contributes a(a^2-36) (3 roots).  Those are detected by exact
divisibility, which under the sanity conditions is equivalent to the point
evaluations (special-class membership is isomorphism-invariant and the gcd is
squarefree), and sidesteps the quadratic-residue case split for sqrt(-3).
The leftover degree must be divisible by 6 and the quotient is the count of
quaternion-only classes.

Closed-form predictions compared against: floor(p/48) quaternion classes when
p = 1, 7 mod 8 and none otherwise; order-24 class superspecial iff
p = 17, 23 mod 24; order-32 class superspecial iff p = 9, 15 mod 16.
"""

from __future__ import annotations

import multiprocessing
import os
import random
import time
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .cartier import (
    CartierContext,
    GcdAllResult,
    gcdall_poly,
    is_superspecial,
    superspecial_parameters,
)
from .errors import StarViolated
from .fields import Fp2, PrimeContext, primes_in_range
from .orbits import AutClass, Orbit, aut_class, orbit
from .poly import divides, poly_eval, poly_eval_mod, roots_in_fp2

DEFAULT_SEED = 0


class ExpectedCounts(NamedTuple):
    q8_expected: int
    g24_expected: bool
    g32_expected: bool


def expected_counts(p: int) -> ExpectedCounts:
    """Predicted counts and special-class flags for a prime p >= 7."""
    q8 = p // 48 if p % 8 in (1, 7) else 0
    return ExpectedCounts(q8, p % 24 in (17, 23), p % 16 in (9, 15))


@dataclass(frozen=True)
class EnumerationRecord:
    """One prime's full result row.

    When star_ok is false the counts and comparison flags are None and only
    the diagnostics are meaningful (never observed below 10000).
    """

    p: int
    p_mod8: int
    p_mod16: int
    p_mod24: int
    e: int
    deg_gcdall: int
    star_ok: bool
    q8_count: Optional[int]
    g24_superspecial: Optional[bool]
    g32_superspecial: Optional[bool]
    matches_q8_formula: Optional[bool]
    matches_g24_rule: Optional[bool]
    matches_g32_rule: Optional[bool]
    star_diagnostics: tuple[str, ...]
    elapsed_ms: float
    seed: int

    @property
    def all_ok(self) -> bool:
        return bool(
            self.star_ok
            and self.matches_q8_formula
            and self.matches_g24_rule
            and self.matches_g32_rule
        )


def _cz_seed(seed: int, p: int) -> int:
    # stable per-prime stream for Cantor-Zassenhaus, independent of threading
    return seed * 1_000_003 + p


def _special_class_flags(res: GcdAllResult, p: int) -> tuple[bool, bool]:
    g24 = divides([12 % p, 0, 1], res.poly, p)
    g32 = divides([0, (-36) % p, 0, 1], res.poly, p)
    # root at 0 iff the whole order-32 orbit {0, 6, -6} divides (squarefree +
    # isomorphism invariance); kept as a cross-check of the divisibility route
    assert (poly_eval_mod(res.poly, 0, p) == 0) == g32
    return g24, g32


def enumerate_prime(
    p: int, verify: str = "none", seed: int = DEFAULT_SEED
) -> EnumerationRecord:
    """Run the full pipeline for one prime.

    verify: "none", "spot" (direct-matrix oracle on one random root and one
    random non-root) or "full" (exhaustive oracle over F_{p^2}); a failed
    verification raises, it is never encoded in the record.
    """
    start = time.perf_counter()
    ctx = PrimeContext(p)
    cctx = CartierContext(ctx)
    res = gcdall_poly(cctx)
    d = res.deg
    if not res.star_ok:
        q8_count = g24 = g32 = m_q8 = m_g24 = m_g32 = None
    else:
        g24, g32 = _special_class_flags(res, p)
        remaining = d - (2 if g24 else 0) - (3 if g32 else 0)
        assert remaining % 6 == 0, f"orbit arithmetic broken at p={p}"
        q8_count = remaining // 6
        exp = expected_counts(p)
        m_q8 = q8_count == exp.q8_expected
        m_g24 = g24 == exp.g24_expected
        m_g32 = g32 == exp.g32_expected
    if verify == "spot":
        _verify_spot(cctx, res, seed)
    elif verify == "full":
        _verify_full(cctx, res, seed)
    elif verify != "none":
        raise ValueError(f"unknown verify level {verify!r}")
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return EnumerationRecord(
        p=p,
        p_mod8=p % 8,
        p_mod16=p % 16,
        p_mod24=p % 24,
        e=cctx.e,
        deg_gcdall=d,
        star_ok=res.star_ok,
        q8_count=q8_count,
        g24_superspecial=g24,
        g32_superspecial=g32,
        matches_q8_formula=m_q8,
        matches_g24_rule=m_g24,
        matches_g32_rule=m_g32,
        star_diagnostics=res.star_diagnostics,
        elapsed_ms=elapsed_ms,
        seed=seed,
    )


def _verify_spot(cctx: CartierContext, res: GcdAllResult, seed: int) -> None:
    """Direct-matrix oracle on one random root and one random non-root."""
    ctx = cctx.ctx
    p = ctx.p
    rng = random.Random(_cz_seed(seed, p) ^ 0x5B07)
    if res.deg >= 1 and res.star_ok:
        roots, _ = roots_in_fp2(res.poly, ctx, seed=_cz_seed(seed, p))
        if roots:
            pick = rng.choice(sorted(roots))
            if not is_superspecial(cctx, pick):
                raise RuntimeError(f"oracle disagrees on root {pick} at p={p}")
    while True:
        cand = ctx.fp2(rng.randrange(p), rng.randrange(p))
        if cand.c1 == 0 and cand.c0 in (2, p - 2):
            continue
        if not poly_eval(res.poly, cand).is_zero():
            if is_superspecial(cctx, cand):
                raise RuntimeError(f"oracle disagrees on non-root {cand} at p={p}")
            return


def _verify_full(cctx: CartierContext, res: GcdAllResult, seed: int) -> None:
    """Exhaustive oracle: superspecial set must equal the root set exactly."""
    ctx = cctx.ctx
    direct = set(superspecial_parameters(cctx))
    if res.deg == 0:
        roots: set[Fp2] = set()
        residual: tuple[int, ...] = ()
    else:
        roots, residual = roots_in_fp2(res.poly, ctx, seed=_cz_seed(seed, ctx.p))
    if residual:
        raise RuntimeError(f"unsplit factors of degree {residual} at p={ctx.p}")
    if direct != roots:
        raise RuntimeError(
            f"exhaustive oracle mismatch at p={ctx.p}: "
            f"{sorted(direct ^ roots)} differ"
        )


@dataclass(frozen=True)
class RepresentativeSet:
    """The isomorphy orbits of the superspecial parameters, labelled.

    Orbits are pairwise disjoint, cover the F_{p^2} root set exactly, and are
    listed by ascending canonical member.  residual_degrees lists degrees of
    irreducible factors (>= 3) whose roots lie beyond F_{p^2}; always empty in
    the tested range.
    """

    orbits: tuple[tuple[Orbit, AutClass], ...]
    residual_degrees: tuple[int, ...]

    def count_with_class(self, label: AutClass) -> int:
        return sum(1 for _, cls in self.orbits if cls is label)


def representatives(p: int, seed: int = DEFAULT_SEED) -> RepresentativeSet:
    """Refine the count into explicit orbits with automorphism labels."""
    ctx = PrimeContext(p)
    cctx = CartierContext(ctx)
    res = gcdall_poly(cctx)
    if not res.star_ok:
        raise StarViolated(f"sanity conditions failed at p={p}: {res.star_diagnostics}")
    if res.deg == 0:
        return RepresentativeSet((), ())
    roots, residual = roots_in_fp2(res.poly, ctx, seed=_cz_seed(seed, p))
    unassigned = set(roots)
    found: list[tuple[Orbit, AutClass]] = []
    for r in sorted(roots):
        if r not in unassigned:
            continue
        orb = orbit(ctx, r)
        if not orb.members <= roots:
            # superspeciality is isomorphism-invariant; a partial orbit is a bug
            raise RuntimeError(f"orbit of {r} leaves the root set at p={p}")
        unassigned -= orb.members
        found.append((orb, aut_class(ctx, r)))
    return RepresentativeSet(tuple(found), residual)


def _sweep_worker(args: tuple[int, str, int]) -> EnumerationRecord:
    p, verify, seed = args
    return enumerate_prime(p, verify=verify, seed=seed)


def resolve_threads(threads: int) -> int:
    return threads if threads > 0 else (os.cpu_count() or 1)


def iter_sweep(
    start: int,
    stop: int,
    threads: int = 1,
    verify: str = "none",
    seed: int = DEFAULT_SEED,
) -> Iterator[EnumerationRecord]:
    """Records for every prime in [start, stop), ascending.

    Runs primes on a worker pool when threads != 1; results are yielded in
    ascending order regardless of completion order, and the per-prime work is
    pure, so output does not depend on the worker count.
    """
    primes = primes_in_range(start, stop)
    threads = resolve_threads(threads)
    if threads == 1 or len(primes) <= 1:
        for p in primes:
            yield enumerate_prime(p, verify=verify, seed=seed)
        return
    jobs = [(p, verify, seed) for p in primes]
    with multiprocessing.Pool(threads) as pool:
        yield from pool.imap(_sweep_worker, jobs, chunksize=1)
