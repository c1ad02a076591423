"""
gen：生成完整特征标表
"""
from app.models.field import FieldCtx
from app.schemas.run_config import CommandOutcome, RunConfig
from app.services.chartable_service import build_table
from app.services.export_service import render_table


def handle(config: RunConfig, ctx: FieldCtx) -> CommandOutcome:
    table = build_table(ctx)
    return CommandOutcome(text=render_table(table, config.format))
