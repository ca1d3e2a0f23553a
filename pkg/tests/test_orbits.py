"""Tests for automorphism classification and isomorphy orbits."""

import random

import pytest

from q8sweep.cartier import CartierContext, gcdall_poly
from q8sweep.errors import SingularCurve
from q8sweep.fields import PrimeContext, fp2_sqrt, primes_in_range
from q8sweep.orbits import AutClass, aut_class, isomorphic, orbit
from q8sweep.poly import poly_eval, roots_in_fp2

SMALL_PRIMES = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]


def fp_parameters(ctx):
    """All non-singular parameters in the base field."""
    p = ctx.p
    return [ctx.fp2(v) for v in range(p) if v not in (2, p - 2)]


class TestAutClass:
    def test_spec_examples(self):
        for p in (7, 11, 41, 101):
            assert aut_class(PrimeContext(p), 6) is AutClass.C16xC2
        # 1^2 = 1 = -12 mod 13
        assert aut_class(PrimeContext(13), 1) is AutClass.SL2F3
        # 3^2 = 9 != -12 = 10 mod 11, and 3 not in {0, 6, 5}
        assert aut_class(PrimeContext(11), 3) is AutClass.Q8

    def test_zero_and_minus_six(self):
        ctx = PrimeContext(19)
        assert aut_class(ctx, 0) is AutClass.C16xC2
        assert aut_class(ctx, -6) is AutClass.C16xC2

    def test_sqrt_minus_twelve_always_sl2(self):
        for p in (7, 13, 23, 41, 101):
            ctx = PrimeContext(p)
            r = fp2_sqrt(ctx.fp2(-12), ctx)
            assert aut_class(ctx, r) is AutClass.SL2F3
            assert aut_class(ctx, -r) is AutClass.SL2F3

    def test_singular_rejected(self):
        ctx = PrimeContext(11)
        for bad in (2, -2):
            with pytest.raises(SingularCurve):
                aut_class(ctx, bad)


class TestOrbit:
    def test_spec_examples(self):
        for p in (7, 13, 41):
            ctx = PrimeContext(p)
            got = orbit(ctx, 0)
            assert got.members == {ctx.fp2(0), ctx.fp2(6), ctx.fp2(p - 6)}
            assert got.size == 3
        ctx = PrimeContext(13)
        got = orbit(ctx, 1)
        assert got.members == {ctx.fp2(1), ctx.fp2(12)}
        assert got.size == 2
        ctx = PrimeContext(11)
        got = orbit(ctx, 3)
        assert {m.c0 for m in got.members} == {1, 3, 4, 7, 8, 10}
        assert got.size == 6

    def test_canonical_is_lex_min(self):
        ctx = PrimeContext(11)
        got = orbit(ctx, 3)
        assert got.canonical == ctx.fp2(1)
        assert got.canonical == min(got.sorted_members())

    def test_singular_rejected(self):
        ctx = PrimeContext(11)
        with pytest.raises(SingularCurve):
            orbit(ctx, 2)


class TestIsomorphic:
    def test_spec_examples(self):
        ctx = PrimeContext(11)
        assert isomorphic(ctx, 3, 3)  # reflexive
        assert isomorphic(ctx, 3, 4)
        assert not isomorphic(PrimeContext(13), 0, 1)

    def test_reflexive_everywhere(self):
        for p in (7, 13, 41):
            ctx = PrimeContext(p)
            for a in fp_parameters(ctx):
                assert isomorphic(ctx, a, a)


class TestOrbitLaws:
    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_exhaustive_over_base_field(self, p):
        ctx = PrimeContext(p)
        for a in fp_parameters(ctx):
            orb = orbit(ctx, a)
            assert a in orb.members
            assert -a in orb.members
            assert orb.size in (2, 3, 6)
            # size law matches the automorphism label
            cls = aut_class(ctx, a)
            want = {AutClass.SL2F3: 2, AutClass.C16xC2: 3, AutClass.Q8: 6}[cls]
            assert orb.size == want
            # never touches singular parameters
            assert ctx.fp2(2) not in orb.members
            assert ctx.fp2(-2) not in orb.members
            # closure: the orbit of any member is the same set
            for b in orb.members:
                other = orbit(ctx, b)
                assert other.members == orb.members
                assert other.canonical == orb.canonical
                assert isomorphic(ctx, a, b) and isomorphic(ctx, b, a)

    @pytest.mark.parametrize("p", [101, 199])
    def test_sampled_over_extension(self, p):
        ctx = PrimeContext(p)
        rng = random.Random(p)
        done = 0
        while done < 200:
            a = ctx.fp2(rng.randrange(p), rng.randrange(p))
            if a.c1 == 0 and a.c0 in (2, p - 2):
                continue
            orb = orbit(ctx, a)
            assert a in orb.members and -a in orb.members
            assert orb.size in (2, 3, 6)
            for b in orb.members:
                assert orbit(ctx, b).members == orb.members
            done += 1


class TestSuperspecialityOrbitConstant:
    def test_roots_closed_under_orbits(self):
        # every orbit member of a gcd root is again a root (p <= 200)
        for p in primes_in_range(7, 200):
            cc = CartierContext.for_prime(p)
            res = gcdall_poly(cc)
            if res.deg == 0:
                continue
            roots, residual = roots_in_fp2(res.poly, cc.ctx, seed=p)
            assert residual == ()
            for r in roots:
                for b in orbit(cc.ctx, r).members:
                    assert poly_eval(res.poly, b).is_zero()
