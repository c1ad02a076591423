"""
cyclo_service 的单元测试
"""

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from app.core.exceptions import ContextMismatchError, ZeroArgumentError
from app.models.cyclo import make_cyclo
from app.services import cyclo_service


class TestCyclotomicPolynomial:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, (-1, 1)),
            (2, (1, 1)),
            (3, (1, 1, 1)),
            (4, (1, 0, 1)),
            (6, (1, -1, 1)),
            (12, (1, 0, -1, 0, 1)),
        ],
    )
    def test_small_cases(self, n, expected):
        assert cyclo_service.cyclotomic_polynomial(n) == expected

    @pytest.mark.parametrize("n", [5, 8, 15, 24, 60, 120])
    def test_degree_is_totient(self, n):
        phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert len(cyclo_service.cyclotomic_polynomial(n)) - 1 == phi

    def test_conductor(self):
        assert cyclo_service.conductor(3, 3) == 12
        assert cyclo_service.conductor(5, 5) == 60
        assert cyclo_service.conductor(9, 3) == 120


class TestRoots:
    def test_root_power_is_one(self):
        ctx = cyclo_service.cyclo_ctx(12)
        z = cyclo_service.root(ctx, 1)
        acc = ctx.one
        for _ in range(12):
            acc = acc * z
        assert acc == 1

    def test_sum_of_all_roots_vanishes(self):
        ctx = cyclo_service.cyclo_ctx(15)
        total = cyclo_service.from_exponents(ctx, {e: 1 for e in range(15)})
        assert total.is_zero

    def test_half_turn_is_minus_one(self):
        ctx = cyclo_service.cyclo_ctx(12)
        assert cyclo_service.root(ctx, 6) == -1

    def test_times_root_matches_multiplication(self):
        ctx = cyclo_service.cyclo_ctx(24)
        a = make_cyclo(ctx, range(1, ctx.degree + 1), 3)
        assert cyclo_service.times_root(a, 5) == a * cyclo_service.root(ctx, 5)


def _draw_cyclo(data, ctx):
    nums = data.draw(st.lists(st.integers(-5, 5), min_size=ctx.degree, max_size=ctx.degree))
    den = data.draw(st.integers(1, 4))
    return make_cyclo(ctx, nums, den)


class TestRingLaws:
    @given(st.sampled_from([12, 24, 60]), st.data())
    def test_ring_axioms(self, n, data):
        ctx = cyclo_service.cyclo_ctx(n)
        a, b, c = (_draw_cyclo(data, ctx) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero

    @given(st.sampled_from([12, 60]), st.data())
    def test_complex_embedding_is_a_homomorphism(self, n, data):
        ctx = cyclo_service.cyclo_ctx(n)
        a, b = _draw_cyclo(data, ctx), _draw_cyclo(data, ctx)
        lhs = cyclo_service.to_complex(ctx, a * b)
        rhs = cyclo_service.to_complex(ctx, a) * cyclo_service.to_complex(ctx, b)
        assert abs(lhs - rhs) < 1e-9

    @given(st.data())
    def test_abs_square_is_real_and_non_negative(self, data):
        ctx = cyclo_service.cyclo_ctx(24)
        a = _draw_cyclo(data, ctx)
        z = cyclo_service.to_complex(ctx, cyclo_service.abs_square(ctx, a))
        assert abs(z.imag) < 1e-9
        assert z.real > -1e-9


class TestCycloNum:
    def test_normalization(self):
        ctx = cyclo_service.cyclo_ctx(12)
        a = make_cyclo(ctx, [2, 4, 0, 6], -4)
        assert a.denominator == 2
        assert a.numerators == (-1, -2, 0, -3)

    def test_rational_equality(self):
        ctx = cyclo_service.cyclo_ctx(12)
        half = make_cyclo(ctx, [1, 0, 0, 0], 2)
        assert half == Fraction(1, 2)
        assert half * 2 == 1
        assert half.to_fraction() == Fraction(1, 2)

    def test_division_by_rationals(self):
        ctx = cyclo_service.cyclo_ctx(12)
        z = cyclo_service.root(ctx, 1)
        assert (z / 2) * 2 == z
        with pytest.raises(ZeroArgumentError):
            z / 0
        with pytest.raises(TypeError):
            z / z

    def test_conj(self):
        ctx = cyclo_service.cyclo_ctx(12)
        z = cyclo_service.root(ctx, 1)
        assert cyclo_service.conj(ctx, z) == cyclo_service.root(ctx, 11)
        assert z * cyclo_service.conj(ctx, z) == 1

    def test_to_complex(self):
        ctx = cyclo_service.cyclo_ctx(12)
        z = cyclo_service.root(ctx, 1)
        assert abs(cyclo_service.to_complex(ctx, z) - cmath.exp(2j * math.pi / 12)) < 1e-12
        assert cyclo_service.to_complex(ctx, -ctx.zero, 12) == complex(0.0, 0.0)

    def test_context_mismatch(self):
        a = cyclo_service.root(cyclo_service.cyclo_ctx(12), 1)
        b = cyclo_service.root(cyclo_service.cyclo_ctx(24), 1)
        with pytest.raises(ContextMismatchError):
            a + b

    def test_payload(self):
        ctx = cyclo_service.cyclo_ctx(12)
        a = make_cyclo(ctx, [1, -3, 0, 2], 6)
        payload = cyclo_service.to_payload(a)
        assert payload.coeffs[0] == [1, 6]
        assert payload.coeffs[1] == [-1, 2]
        assert cyclo_service.from_payload(ctx, payload) == a
