"""
bruteforce_service 的单元测试
"""

import pytest

from app.services import bruteforce_service
from app.services.charsum_service import make_convention
from app.services.chartable_service import mu_induced_closed_form
from app.services.class_service import class_representatives
from app.services.field_service import field_for_order
from app.services.group_service import TooLargeError


class TestConjugacyOrbits:
    def test_q3_partition(self):
        partition = bruteforce_service.bruteforce_classes(field_for_order(3))
        assert partition.report.passed, partition.report.failures
        assert len(partition.orbit_sizes) == 24
        assert sum(partition.orbit_sizes) == 648
        assert len(set(partition.named_orbits)) == 24
        assert len(partition.orbit_of) == 648

    def test_q5_partition(self, monkeypatch):
        monkeypatch.setattr(bruteforce_service.settings, "BRUTEFORCE_MAX_ORDER", 15000)
        partition = bruteforce_service.bruteforce_classes(field_for_order(5))
        assert partition.report.passed, partition.report.failures
        assert len(partition.orbit_sizes) == 50

    def test_q5_needs_a_raised_cap(self):
        assert bruteforce_service.settings.BRUTEFORCE_MAX_ORDER == 648
        with pytest.raises(TooLargeError):
            bruteforce_service.bruteforce_classes(field_for_order(5))

    def test_orbit_sizes_follow_named_order(self):
        ctx = field_for_order(3)
        partition = bruteforce_service.bruteforce_classes(ctx)
        named_sizes = [partition.orbit_sizes[o] for o in partition.named_orbits]
        assert named_sizes == [rep.size for rep in class_representatives(ctx)]

    def test_cap(self, monkeypatch):
        monkeypatch.setattr(bruteforce_service.settings, "BRUTEFORCE_MAX_ORDER", 600)
        with pytest.raises(TooLargeError):
            bruteforce_service.bruteforce_classes(field_for_order(3))


class TestInducedCharacters:
    def test_default_pairs_at_q3(self):
        report = bruteforce_service.check_induced_closed_forms(field_for_order(3))
        assert report.passed, report.failures
        assert report.suite == "induced_characters"

    def test_degree_is_index_of_sylow(self):
        ctx = field_for_order(3)
        identity = class_representatives(ctx)[0]
        value = bruteforce_service.bruteforce_induced_mu(ctx, ctx.one, ctx.nu, identity.rep)
        assert value == 8

    def test_spot_values_at_q3(self):
        ctx = field_for_order(3)
        conv = make_convention(ctx)
        for rep in class_representatives(ctx):
            got = bruteforce_service.bruteforce_induced_mu(ctx, ctx.nu, ctx.nu, rep.rep, conv)
            assert got == mu_induced_closed_form(conv, ctx.nu, ctx.nu, rep), rep.label

    def test_sylow_profile_counts(self):
        ctx = field_for_order(3)
        identity = class_representatives(ctx)[0]
        # 单位元共轭到自身 |G| 次
        assert sum(c for _, _, c in bruteforce_service.sylow_profile(ctx, identity.rep)) == 648
