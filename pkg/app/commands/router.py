"""
Command Router
CLI 参数解析与子命令分发
"""
import argparse
from collections.abc import Callable, Iterator
from contextlib import contextmanager

from sympy import isprime

from app.commands import classes_command, gen_command, oracle_command, sums_command, verify_command
from app.core.config import settings
from app.core.exceptions import HeisCharError
from app.core.utils.logger import get_logger
from app.models.enums import CommandName, OutputFormat, VerifySuite
from app.models.field import FieldCtx
from app.schemas.run_config import CommandOutcome, RunConfig
from app.services.field_service import factor_prime_power, field_for_order, field_new

logger = get_logger(__name__)

Handler = Callable[[RunConfig, FieldCtx], CommandOutcome]

HANDLERS: dict[CommandName, Handler] = {
    CommandName.GEN: gen_command.handle,
    CommandName.CLASSES: classes_command.handle,
    CommandName.SUMS: sums_command.handle,
    CommandName.VERIFY: verify_command.handle,
    CommandName.ORACLE: oracle_command.handle,
}

_HELP = {
    CommandName.GEN: "生成完整特征标表",
    CommandName.CLASSES: "列出共轭类（类表）",
    CommandName.SUMS: "Gauss 和与 Legendre 表",
    CommandName.VERIFY: "运行校验套件",
    CommandName.ORACLE: "暴力枚举与 Burnside 数值校验（q 为 3 或 5）",
}


# ============ 参数类型 ============

def odd_prime_power(value: str) -> int:
    """--q 的类型：奇素数幂"""
    try:
        q = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q={value!r} is not an integer") from None
    try:
        factor_prime_power(q)
    except HeisCharError as exc:
        raise argparse.ArgumentTypeError(exc.dev_message) from None
    return q


def odd_prime(value: str) -> int:
    try:
        p = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p={value!r} is not an integer") from None
    if not isprime(p) or p == 2:
        raise argparse.ArgumentTypeError(f"p={p} is not an odd prime")
    return p


def coefficient_list(value: str) -> tuple[int, ...]:
    """--modulus 的类型：逗号分隔的系数，低次到高次"""
    try:
        return tuple(int(c) for c in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"modulus {value!r} must be comma-separated integers") from None


# ============ 解析器 ============

def _add_common(sub: argparse.ArgumentParser) -> None:
    field = sub.add_argument_group("field")
    source = field.add_mutually_exclusive_group(required=True)
    source.add_argument("--q", type=odd_prime_power, help="域的阶（奇素数幂）")
    source.add_argument("--p", type=odd_prime, help="特征，配合 --f / --modulus 使用")
    field.add_argument("--f", type=int, help="扩张次数（配合 --p 缺省为 1；与 --q 同时给出时必须一致）")
    field.add_argument("--modulus", type=coefficient_list, help="首一不可约多项式系数，低次到高次，如 2,2,1")
    sub.add_argument(
        "--format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.TEXT,
        metavar="{" + ",".join(f.value for f in OutputFormat) + "}",
    )
    sub.add_argument("--output", "-o", help="输出文件，缺省为 stdout")
    sub.add_argument("--threads", type=int, help="构造表时的线程数（覆盖 THREAD_COUNT）")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heischar",
        description=settings.DESCRIPTION,
    )
    parser.add_argument("--version", action="version", version=f"{settings.PROJECT_NAME} {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in CommandName:
        sub = subparsers.add_parser(command.value, help=_HELP[command])
        _add_common(sub)
        if command in (CommandName.VERIFY, CommandName.ORACLE):
            sub.add_argument("--tolerance", type=float, help="数值交叉校验容差")
            sub.add_argument("--enumeration-cap", type=int, help="暴力校验允许的最大 |G|")
            sub.add_argument("--seed", type=int, help="Burnside 随机组合的起始种子")
        if command == CommandName.VERIFY:
            sub.add_argument(
                "--suite", action="append", type=VerifySuite, choices=list(VerifySuite), dest="suites",
                metavar="{" + ",".join(s.value for s in VerifySuite) + "}",
                help="可重复；缺省运行全部精确套件",
            )
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    """
    Namespace -> RunConfig

    Raises:
        pydantic.ValidationError: 参数组合不合法
    """
    return RunConfig(
        command=CommandName(args.command),
        q=args.q,
        p=args.p,
        f=args.f,
        modulus=args.modulus,
        format=args.format,
        output=args.output,
        suites=tuple(getattr(args, "suites", None) or ()),
        tolerance=getattr(args, "tolerance", None),
        enumeration_cap=getattr(args, "enumeration_cap", None),
        threads=args.threads,
        seed=getattr(args, "seed", None),
    )


# ============ 分发 ============

@contextmanager
def settings_overrides(config: RunConfig) -> Iterator[None]:
    """在一次调用内用命令行参数覆盖 settings，结束后恢复"""
    overrides = {}
    if config.enumeration_cap is not None:
        overrides["BRUTEFORCE_MAX_ORDER"] = config.enumeration_cap
    if config.threads is not None:
        overrides["THREAD_COUNT"] = config.threads
    previous = {name: getattr(settings, name) for name in overrides}
    for name, value in overrides.items():
        setattr(settings, name, value)
    try:
        yield
    finally:
        for name, value in previous.items():
            setattr(settings, name, value)


def field_from_config(config: RunConfig) -> FieldCtx:
    if config.q is not None:
        return field_for_order(config.q)
    return field_new(config.p, config.f or 1, config.modulus)


def dispatch(config: RunConfig) -> CommandOutcome:
    """
    执行子命令

    Raises:
        HeisCharError: 领域错误（由 main 映射为退出码 1）
    """
    with settings_overrides(config):
        ctx = field_from_config(config)
        logger.info("执行命令 | command=%s q=%s format=%s", config.command.value, ctx.q, config.format.value)
        return HANDLERS[config.command](config, ctx)
