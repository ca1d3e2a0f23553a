"""Automorphism classification and isomorphy orbits of the curve parameter.

Two members of the family y^2 = x(x^4-1)(x^4+ax^2+1) are isomorphic exactly
when the parameters are linked by one of six closed-form fractional-linear
expressions; the orbit map below evaluates all six and deduplicates.  The
automorphism group of a non-singular member is the quaternion group except
in two degenerate positions: parameters squaring to -12 (order-24 group) and
parameters in {0, 6, -6} (order-32 group).  Orbit sizes are 2, 3 and 6 in
those cases respectively.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import SingularCurve
from .fields import Fp2, PrimeContext, fp2_inv


class AutClass(enum.Enum):
    """Automorphism-group label of a non-singular family member."""

    Q8 = "Q8"
    SL2F3 = "SL2F3"
    C16xC2 = "C16xC2"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Orbit:
    """All parameters defining curves isomorphic to a given one.

    canonical is the lexicographically least member under (c0, c1) ordering,
    a determinism device (no member is mathematically preferred).
    """

    members: frozenset[Fp2]
    canonical: Fp2

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Fp2]:
        return sorted(self.members)


def _as_fp2(ctx: PrimeContext, a) -> Fp2:
    return a if isinstance(a, Fp2) else ctx.fp2(a)


def _check_not_singular(ctx: PrimeContext, a: Fp2) -> None:
    if a.c1 == 0 and a.c0 in (2, ctx.p - 2):
        raise SingularCurve(f"parameter {a} names a singular curve")


def aut_class(ctx: PrimeContext, a) -> AutClass:
    """Classify the automorphism group of the member with parameter a."""
    a = _as_fp2(ctx, a)
    _check_not_singular(ctx, a)
    p = ctx.p
    is_sl2 = a * a == ctx.fp2(-12)
    is_c16 = a.c1 == 0 and a.c0 in (0, 6 % p, (-6) % p)
    # 36 = -12 would force p | 48, impossible for p >= 7
    assert not (is_sl2 and is_c16)
    if is_sl2:
        return AutClass.SL2F3
    if is_c16:
        return AutClass.C16xC2
    return AutClass.Q8


def orbit(ctx: PrimeContext, a) -> Orbit:
    """The isomorphy orbit {+-a, +-(2 - 16/(a+2)), +-(2 + 16/(a-2))}."""
    a = _as_fp2(ctx, a)
    _check_not_singular(ctx, a)
    two = ctx.fp2(2)
    sixteen = ctx.fp2(16)
    u = two - sixteen * fp2_inv(a + two, ctx)
    v = two + sixteen * fp2_inv(a - two, ctx)
    members = frozenset((a, -a, u, -u, v, -v))
    return Orbit(members, min(members))


def isomorphic(ctx: PrimeContext, a, b) -> bool:
    """Whether the members with parameters a and b are isomorphic curves."""
    b = _as_fp2(ctx, b)
    _check_not_singular(ctx, b)
    return b in orbit(ctx, a).members
