"""
group_service 的单元测试
"""

from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from app.services import group_service
from app.services.field_service import field_for_order
from app.services.group_service import NotSymplecticError, TooLargeError

ORDERS = (3, 5, 9)


@lru_cache(maxsize=None)
def _sl2(q: int):
    return tuple(group_service.enumerate_sl2(field_for_order(q)))


@st.composite
def group_elements(draw, q: int):
    ctx = field_for_order(q)
    s = draw(st.sampled_from(_sl2(q)))
    x, y, z = (ctx.from_index(draw(st.integers(0, q - 1))) for _ in range(3))
    return group_service.element(ctx, s, x, y, z)


class TestGroupLaw:
    @given(st.sampled_from(ORDERS).flatmap(lambda q: st.tuples(*(group_elements(q) for _ in range(3)))))
    def test_associativity(self, triple):
        a, b, c = triple
        mul = group_service.multiply
        assert mul(mul(a, b), c) == mul(a, mul(b, c))

    @given(st.sampled_from(ORDERS).flatmap(group_elements))
    def test_identity_and_inverse(self, g):
        e = group_service.identity(g.ctx)
        assert group_service.multiply(g, e) == g
        assert group_service.multiply(e, g) == g
        assert group_service.multiply(g, group_service.inverse(g)) == e
        assert group_service.multiply(group_service.inverse(g), g) == e

    @given(st.sampled_from(ORDERS).flatmap(lambda q: st.tuples(group_elements(q), group_elements(q))))
    def test_conjugate_closed_form(self, pair):
        g1, g2 = pair
        mul = group_service.multiply
        expected = mul(mul(g1, g2), group_service.inverse(g1))
        assert group_service.conjugate(g1, g2) == expected

    @given(st.sampled_from(ORDERS).flatmap(lambda q: st.tuples(group_elements(q), group_elements(q))))
    def test_centralizer_conditions_match_commuting(self, pair):
        g1, g2 = pair
        assert group_service.in_centralizer(g1, g2) == group_service.commutes(g1, g2)

    def test_center_is_commuting(self):
        ctx = field_for_order(5)
        central = group_service.element(ctx, group_service.sp2_identity(ctx), 0, 0, 3)
        other = group_service.element(ctx, group_service.sp2(ctx, 1, 1, 0, 1), 2, 4, 1)
        assert group_service.commutes(central, other)


class TestMatrixDisplay:
    @given(st.sampled_from(ORDERS).flatmap(lambda q: st.tuples(group_elements(q), group_elements(q))))
    def test_matrix_product_is_group_law(self, pair):
        g1, g2 = pair
        product = group_service.matrix_multiply(group_service.to_matrix(g1), group_service.to_matrix(g2))
        assert product == group_service.to_matrix(group_service.multiply(g1, g2))

    @given(st.sampled_from(ORDERS).flatmap(group_elements))
    def test_from_matrix_reads_back(self, g):
        assert group_service.from_matrix(g.ctx, group_service.to_matrix(g)) == g

    def test_from_matrix_rejects_foreign_shape(self):
        ctx = field_for_order(3)
        m = group_service.to_matrix(group_service.identity(ctx))
        m[3][0] = ctx.one
        with pytest.raises(ValueError):
            group_service.from_matrix(ctx, m)


class TestSp2:
    def test_sp2_rejects_det_not_one(self):
        ctx = field_for_order(5)
        with pytest.raises(NotSymplecticError):
            group_service.sp2(ctx, 2, 0, 0, 2)

    @pytest.mark.parametrize("q", ORDERS)
    def test_sl2_order(self, q):
        elements = _sl2(q)
        assert len(elements) == q * (q * q - 1)
        assert len({s.key() for s in elements}) == len(elements)
        assert all(s.det() == s.ctx.one for s in elements)

    @pytest.mark.parametrize("q", (3, 5, 7, 9, 11))
    def test_singer_cycle_has_order_q_plus_one(self, q):
        b = group_service.singer_cycle(field_for_order(q))
        assert b.det() == b.ctx.one
        assert group_service.element_order(b) == q + 1

    def test_singer_cycle_cube_is_minus_one_at_q5(self):
        ctx = field_for_order(5)
        b = group_service.singer_cycle(ctx)
        # 6 阶循环群中唯一的对合是 -1
        assert (b ** 3).key() == group_service.sp2(ctx, -1, 0, 0, -1).key()
        assert not (b ** 2).is_identity

    @pytest.mark.parametrize("q", (3, 5, 7, 9, 11))
    def test_singer_cycle_has_no_eigenvalue(self, q):
        ctx = field_for_order(q)
        b = group_service.singer_cycle(ctx)
        assert all(t * t - b.trace() * t + ctx.one != ctx.zero for t in ctx.elements)

    def test_element_order(self):
        ctx = field_for_order(7)
        assert group_service.element_order(group_service.sp2(ctx, 1, 1, 0, 1)) == 7
        assert group_service.element_order(group_service.sp2(ctx, -1, 0, 0, -1)) == 2
        assert group_service.element_order(group_service.sp2_identity(ctx)) == 1


class TestEnumeration:
    def test_group_order(self):
        assert group_service.group_order(3) == 648
        assert group_service.group_order(5) == 15000

    def test_enumerates_every_element_once(self):
        ctx = field_for_order(3)
        keys = [g.key() for g in group_service.enumerate_group(ctx)]
        assert len(keys) == 648
        assert len(set(keys)) == 648

    def test_cap(self):
        ctx = field_for_order(3)
        with pytest.raises(TooLargeError):
            next(group_service.enumerate_group(ctx, cap=100))

    def test_cap_from_settings(self, monkeypatch):
        monkeypatch.setattr(group_service.settings, "ENUMERATION_CAP", 647)
        with pytest.raises(TooLargeError):
            next(group_service.enumerate_group(field_for_order(3)))

    def test_generators_generate(self):
        ctx = field_for_order(3)
        gens = group_service.generators(ctx)
        seen = {group_service.identity(ctx).key()}
        frontier = [group_service.identity(ctx)]
        while frontier:
            g = frontier.pop()
            for h in gens:
                x = group_service.multiply(g, h)
                if x.key() not in seen:
                    seen.add(x.key())
                    frontier.append(x)
        assert len(seen) == 648


class TestSylow:
    def test_coordinates(self):
        ctx = field_for_order(5)
        k = group_service.sylow_element(ctx, 2, 3, 4, 1)
        a, x, y, z = group_service.sylow_coordinates(k)
        assert (a.index, x.index, y.index, z.index) == (2, 3, 4, 1)

    def test_outside_sylow(self):
        ctx = field_for_order(5)
        g = group_service.element(ctx, group_service.sp2(ctx, 1, 0, 1, 1))
        assert group_service.sylow_coordinates(g) is None

    def test_sylow_subgroup_has_order_q4(self):
        ctx = field_for_order(3)
        inside = [g for g in group_service.enumerate_group(ctx) if group_service.sylow_coordinates(g) is not None]
        assert len(inside) == 81
