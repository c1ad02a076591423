"""
class_service 的单元测试
"""

import pytest

from app.models.enums import ClassFamily
from app.services import class_service
from app.services.field_service import field_for_order
from app.services.group_service import enumerate_group, group_order, in_centralizer, to_matrix

ORDERS = (3, 5, 7, 9, 11)


class TestClassTable:
    @pytest.mark.parametrize("q", ORDERS)
    def test_class_count(self, q):
        reps = class_service.class_representatives(field_for_order(q))
        assert len(reps) == q * q + 5 * q == class_service.class_count(q)

    @pytest.mark.parametrize("q", ORDERS)
    def test_sizes_sum_to_group_order(self, q):
        reps = class_service.class_representatives(field_for_order(q))
        assert sum(rep.size for rep in reps) == group_order(q)

    @pytest.mark.parametrize("q", ORDERS)
    def test_family_counts(self, q):
        reps = class_service.class_representatives(field_for_order(q))
        for family in ClassFamily:
            got = sum(1 for rep in reps if rep.family == family)
            assert got == class_service.family_class_count(family, q)

    @pytest.mark.parametrize("q", ORDERS)
    def test_symbolic_total(self, q):
        total = sum(
            class_service.family_class_count(family, q) * class_service.lemma_class_size(family, q)
            for family in ClassFamily
        )
        assert total == q ** 4 * (q * q - 1)

    def test_centralizer_orders(self):
        for rep in class_service.class_representatives(field_for_order(5)):
            assert rep.size * rep.centralizer_order == 15000
            assert class_service.centralizer_order(rep) == rep.centralizer_order

    def test_order_and_labels(self):
        reps = class_service.class_representatives(field_for_order(5))
        families = [rep.family for rep in reps]
        # 族按表顺序连续出现
        assert list(dict.fromkeys(families)) == list(ClassFamily)
        labels = [rep.label for rep in reps]
        assert labels[:6] == ["A(0)", "A(1)", "A(2)", "A(3)", "A(4)", "B"]
        assert "D_1(0)" in labels
        assert labels[-1] == "M_2"
        assert len(set(labels)) == len(labels)

    def test_q3_has_no_split_torus_classes(self):
        reps = class_service.class_representatives(field_for_order(3))
        assert not any(rep.family == ClassFamily.D for rep in reps)


class TestCentralizerByEnumeration:
    def test_q3_centralizers(self):
        ctx = field_for_order(3)
        elements = list(enumerate_group(ctx))
        for rep in class_service.class_representatives(ctx):
            count = sum(1 for g in elements if in_centralizer(g, rep.rep))
            assert count == rep.centralizer_order, rep.label


def _reps(q: int, family: ClassFamily):
    return [rep for rep in class_service.class_representatives(field_for_order(q)) if rep.family == family]


class TestDisplayedMatrices:
    @pytest.mark.parametrize("q", (3, 5, 7, 9))
    def test_b_display(self, q):
        ctx = field_for_order(q)
        one, zero = ctx.one, ctx.zero
        half = ctx.from_int(2).inverse()
        (b,) = _reps(q, ClassFamily.B)
        assert to_matrix(b.rep) == [
            [one, zero, half, zero],
            [zero, one, zero, one],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
        ]

    @pytest.mark.parametrize("q", (3, 5, 7, 9))
    @pytest.mark.parametrize("family", (ClassFamily.L, ClassFamily.M))
    def test_l_and_m_display(self, q, family):
        ctx = field_for_order(q)
        one, zero = ctx.one, ctx.zero
        half = ctx.from_int(2).inverse()
        sub = one if family == ClassFamily.L else ctx.nu
        reps = _reps(q, family)
        assert [rep.m for rep in reps] == list(range(1, (q - 1) // 2 + 1))
        for rep in reps:
            x = ctx.nu_pow(rep.m)
            assert to_matrix(rep.rep) == [
                [one, zero, x * half, zero],
                [zero, one, zero, x],
                [zero, sub, one, sub * x],
                [zero, zero, zero, one],
            ]
            assert rep.rep.z == zero


class TestSymplecticTypes:
    @pytest.mark.parametrize("q", ORDERS)
    def test_every_s_part_has_det_one(self, q):
        for rep in class_service.class_representatives(field_for_order(q)):
            assert rep.rep.s.det() == rep.rep.ctx.one, rep.label

    @pytest.mark.parametrize("q", ORDERS)
    def test_unipotent_traces(self, q):
        ctx = field_for_order(q)
        two = ctx.from_int(2)
        for rep in class_service.class_representatives(ctx):
            s = rep.rep.s
            if rep.family in (ClassFamily.A, ClassFamily.B, ClassFamily.H, ClassFamily.I, ClassFamily.L, ClassFamily.M):
                assert s.trace() == two, rep.label
            elif rep.family in (ClassFamily.C, ClassFamily.E, ClassFamily.F):
                assert s.trace() == -two, rep.label
        # H / I / E / F 非标量
        for family in (ClassFamily.H, ClassFamily.I, ClassFamily.E, ClassFamily.F):
            assert all(not rep.rep.s.c.is_zero for rep in _reps(q, family))

    @pytest.mark.parametrize("q", (5, 7, 9, 11))
    def test_split_torus_eigenvalues(self, q):
        ctx = field_for_order(q)
        reps = _reps(q, ClassFamily.D)
        assert reps
        for rep in reps:
            s = rep.rep.s
            lam, lam_inv = ctx.nu_pow(rep.k), ctx.nu_pow(-rep.k)
            assert lam != lam_inv
            for eigenvalue in (lam, lam_inv):
                # x² - tr(s) x + 1 的根
                assert eigenvalue * eigenvalue - s.trace() * eigenvalue + ctx.one == ctx.zero

    @pytest.mark.parametrize("q", ORDERS)
    def test_nonsplit_torus_is_irreducible(self, q):
        ctx = field_for_order(q)
        for rep in _reps(q, ClassFamily.G):
            s = rep.rep.s
            assert all(t * t - s.trace() * t + ctx.one != ctx.zero for t in ctx.elements), rep.label
