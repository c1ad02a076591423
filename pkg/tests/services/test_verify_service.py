"""
verify_service 的单元测试
"""

import math
from dataclasses import replace
from functools import lru_cache

import numpy as np
import pytest
from sympy import isprime, primefactors

from app.models.enums import CharacterFamily, VerifySuite
from app.services import verify_service
from app.services.charsum_service import make_convention
from app.services.chartable_service import build_table
from app.services.field_service import field_for_order
from app.services.group_service import group_order


@lru_cache(maxsize=None)
def _table(q: int):
    return build_table(field_for_order(q))


def _tampered(q: int, row: int, col: int):
    table = _table(q)
    values = [list(r) for r in table.values]
    values[row][col] = values[row][col] + 1
    return replace(table, values=tuple(tuple(r) for r in values))


class TestOrthogonality:
    @pytest.mark.parametrize("q", (3, 5, 7))
    def test_rows(self, q):
        report = verify_service.check_row_orthogonality(_table(q))
        assert report.passed, [c for c in report.failures]
        assert report.suite == "row_orthogonality"

    @pytest.mark.parametrize("q", (3, 5, 7))
    def test_columns(self, q):
        report = verify_service.check_column_orthogonality(_table(q))
        assert report.passed, [c for c in report.failures]

    def test_prime_power_field(self):
        table = _table(9)
        assert verify_service.check_row_orthogonality(table).passed
        assert verify_service.check_column_orthogonality(table).passed

    def test_detects_a_wrong_entry(self):
        table = _tampered(3, 5, 7)
        report = verify_service.check_row_orthogonality(table)
        assert not report.passed
        assert any(table.chars[5].label in c.identifier for c in report.failures)
        assert not verify_service.check_column_orthogonality(table).passed

    def test_largest_field(self):
        table = _table(11)
        assert table.convention.cyclo.degree == 160
        row = verify_service.check_row_orthogonality(table)
        column = verify_service.check_column_orthogonality(table)
        assert row.passed, [c for c in row.failures]
        assert column.passed, [c for c in column.failures]
        assert all(c.exact for c in row.checks if "numeric" not in c.identifier)


class TestModularKernel:
    @pytest.mark.parametrize("N", (12, 60, 120, 660))
    def test_split_primes(self, N):
        limit = 2 ** 120
        primes = verify_service._split_primes(N, limit)
        assert all(isprime(m) and m % N == 1 and m < 2 ** 25 for m in primes)
        assert math.prod(primes) > limit
        assert math.prod(primes[:-1]) <= limit

    @pytest.mark.parametrize("N", (12, 60, 168))
    def test_evaluation_points_are_primitive_roots(self, N):
        m = verify_service._split_primes(N, 1)[0]
        evaluation, partner = verify_service._evaluation_points(N, m)
        points = [int(r) for r in evaluation[1]]
        assert len(set(points)) == len(points) == evaluation.shape[0]
        for j, r in enumerate(points):
            assert pow(r, N, m) == 1
            assert all(pow(r, N // s, m) != 1 for s in primefactors(N))
            assert r * points[partner[j]] % m == 1

    @pytest.mark.parametrize("q, row, col", [(3, 5, 7), (3, 0, 0), (5, 12, 3)])
    def test_matches_convolution_kernel(self, q, row, col):
        table = _tampered(q, row, col)
        cyclo = table.convention.cyclo
        tensor, scale = verify_service._cyclo_tensor(table.values)
        sizes = [rep.size for rep in table.classes]
        expected = np.zeros((table.size, table.size), dtype=object)
        for i in range(table.size):
            expected[i, i] = group_order(q) * scale * scale

        gram = verify_service._hermitian_products(tensor, tensor, sizes, cyclo)
        target = np.zeros(gram.shape, dtype=object)
        target[:, :, 0] = expected
        slow = np.any((gram.astype(object) - target) != 0, axis=2)
        fast = verify_service._gram_mismatches(tensor, tensor, sizes, cyclo, expected)
        assert fast.any()
        assert (fast == slow).all()


class TestDecomposition:
    def test_irreducible_row_decomposes_to_itself(self):
        table = _table(3)
        multiplicities = verify_service.decompose_class_function(table, table.values[10])
        assert [m == (1 if r == 10 else 0) for r, m in enumerate(multiplicities)] == [True] * table.size

    def test_product_of_weil_characters(self):
        table = _table(5)
        omega = [r for r, c in enumerate(table.chars) if c.family == CharacterFamily.OMEGA]
        a, b = table.values[omega[0]], table.values[omega[1]]
        product = [x * y for x, y in zip(a, b)]
        multiplicities = verify_service.decompose_class_function(table, product)
        assert all(m.is_rational and m.to_fraction().denominator == 1 and m.to_fraction() >= 0 for m in multiplicities)
        total = sum(m.to_fraction() * d for m, d in zip(multiplicities, table.degrees))
        assert total == 25

    def test_length_mismatch(self):
        table = _table(3)
        with pytest.raises(ValueError):
            verify_service.decompose_class_function(table, table.values[0][:-1])


class TestStructuralSuites:
    @pytest.mark.parametrize("q", (3, 5, 7, 9))
    def test_weil_products(self, q):
        assert verify_service.check_weil_products(_table(q)).passed

    @pytest.mark.parametrize("q", (3, 5, 7, 9))
    def test_omega_restriction(self, q):
        assert verify_service.check_omega_restriction(_table(q)).passed

    @pytest.mark.parametrize("q", (3, 5, 7, 9))
    def test_distinctness(self, q):
        report = verify_service.check_distinctness(_table(q))
        assert report.passed
        assert len(report.checks) == q

    @pytest.mark.parametrize("q", (3, 5, 7, 9, 11))
    def test_degrees(self, q):
        assert verify_service.check_degrees(_table(q)).passed

    @pytest.mark.parametrize("q", (3, 5, 7, 9, 11))
    def test_gauss_sums(self, q):
        report = verify_service.check_gauss_sums(make_convention(field_for_order(q)))
        assert report.passed
        assert len(report.checks) == 2 * (q - 1) + 2

    def test_weil_products_detect_tampering(self):
        table = _table(3)
        row = next(r for r, c in enumerate(table.chars) if c.family == CharacterFamily.OMEGA_PSI)
        assert not verify_service.check_weil_products(_tampered(3, row, 3)).passed


class TestRunSuites:
    def test_default_suites(self):
        reports = verify_service.run_suites(field_for_order(5))
        assert [r.suite for r in reports] == [
            "row_orthogonality",
            "column_orthogonality",
            "weil_products",
            "omega_restriction",
            "kappa_distinctness",
            "degrees",
            "gauss_sums",
        ]
        assert all(r.passed for r in reports)

    def test_selected_suite_and_duplicates(self):
        reports = verify_service.run_suites(field_for_order(3), [VerifySuite.GAUSS, VerifySuite.GAUSS])
        assert [r.suite for r in reports] == ["gauss_sums"]

    def test_report_serializes(self):
        report = verify_service.run_suites(field_for_order(3), [VerifySuite.KAPPA])[0]
        payload = report.model_dump()
        assert payload["suite"] == "kappa_distinctness"
        assert payload["q"] == 3
        assert payload["passed"] is True
        assert payload["elapsed_seconds"] >= 0
