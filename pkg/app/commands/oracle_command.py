"""
oracle：独立于闭式公式的暴力校验（轨道枚举、诱导特征标、Burnside 数值表）
"""
from app.commands.verify_command import outcome_of
from app.models.enums import VerifySuite
from app.models.field import FieldCtx
from app.schemas.run_config import CommandOutcome, RunConfig
from app.services.verify_service import run_suites

ORACLE_SUITES = (VerifySuite.CLASSES, VerifySuite.INDUCED, VerifySuite.ORACLE)


def handle(config: RunConfig, ctx: FieldCtx) -> CommandOutcome:
    reports = run_suites(ctx, ORACLE_SUITES, tolerance=config.tolerance, seed=config.seed)
    return outcome_of(reports, config)
