"""
HeisChar CLI
H1(q) x| Sp(2,q) 的精确特征标表

退出码：0 成功；1 领域错误或校验失败；2 用法错误。
"""
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from app.commands import build_parser, dispatch, to_config
from app.core.exceptions import HeisCharError
from app.core.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8", newline="\n")
    logger.info("已写出 | path=%s bytes=%d", output, len(text.encode("utf-8")))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        config = to_config(parser.parse_args(argv))
    except SystemExit as exc:
        # --help / --version 以 0 退出
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        print(f"{parser.prog}: error: {messages}", file=sys.stderr)
        return EXIT_USAGE

    try:
        outcome = dispatch(config)
    except HeisCharError as exc:
        logger.error("命令失败 | error_type=%s detail=%s", exc.error_type, exc.dev_message)
        print(f"{parser.prog}: {exc.error_type}: {exc.user_message}", file=sys.stderr)
        return EXIT_FAILURE

    _emit(outcome.text, config.output)
    return EXIT_OK if outcome.passed else EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
