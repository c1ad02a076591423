"""
sums：Gauss 和、√(δq) 分支与 Legendre 表
"""
from app.models.field import FieldCtx
from app.schemas.run_config import CommandOutcome, RunConfig
from app.services.charsum_service import make_convention, sums_report
from app.services.export_service import render_sums


def handle(config: RunConfig, ctx: FieldCtx) -> CommandOutcome:
    report = sums_report(make_convention(ctx))
    return CommandOutcome(text=render_sums(report, config.format))
