"""
verify：运行所选校验套件，全部通过才返回成功
"""
from app.core.utils.logger import get_logger
from app.models.field import FieldCtx
from app.schemas.report import VerificationReport
from app.schemas.run_config import CommandOutcome, RunConfig
from app.services.export_service import render_reports
from app.services.verify_service import DEFAULT_SUITES, run_suites

logger = get_logger(__name__)


def outcome_of(reports: list[VerificationReport], config: RunConfig) -> CommandOutcome:
    for report in reports:
        for check in report.failures:
            logger.error("校验失败 | suite=%s check=%s", report.suite, check.identifier)
    return CommandOutcome(
        text=render_reports(reports, config.format),
        passed=all(report.passed for report in reports),
    )


def handle(config: RunConfig, ctx: FieldCtx) -> CommandOutcome:
    suites = config.suites or DEFAULT_SUITES
    reports = run_suites(ctx, suites, tolerance=config.tolerance, seed=config.seed)
    return outcome_of(reports, config)
