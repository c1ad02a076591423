"""
classes：列出共轭类代表元、类长与中心化子阶
"""
from app.core.exceptions import VerificationFailedError
from app.models.field import FieldCtx
from app.schemas.run_config import CommandOutcome, RunConfig
from app.services.class_service import class_representatives
from app.services.export_service import render_classes
from app.services.group_service import group_order


def handle(config: RunConfig, ctx: FieldCtx) -> CommandOutcome:
    classes = class_representatives(ctx)
    total = sum(rep.size for rep in classes)
    if total != group_order(ctx.q):
        raise VerificationFailedError(
            f"class sizes sum to {total}, expected {group_order(ctx.q)}",
            "共轭类长度之和不等于群阶",
        )
    return CommandOutcome(text=render_classes(ctx, classes, config.format))
