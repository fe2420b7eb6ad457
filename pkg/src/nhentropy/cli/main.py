# src/nhentropy/cli/main.py

"""
nhentropy 命令行入口。

退出码: 0 成功，1 输入或配置校验失败，2 数值失败 (包括对比超限)，3 I/O 失败。
"""
import argparse
import logging
import sys
from typing import List, Optional

from nhentropy import __version__
from nhentropy.cli.commands import COMMANDS
from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import ClosedFormDomainError, NHEntropyError, NumericalBoundError, NumericalError
from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.utils.logging import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nhentropy",
        description="非厄米密度算符动力学与熵 (S_vN / S_NH) 分析工具",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--log-level", default=None, help="日志级别 (默认取配置 NHENTROPY_LOG_LEVEL)")
    ap.add_argument("-v", "--verbose", action="store_true", help="等价于 --log-level DEBUG")
    subparsers = ap.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS.values():
        command.register(subparsers)
    return ap


def exit_code_for(error: BaseException) -> int:
    """把异常族映射为退出码。"""
    if isinstance(error, ClosedFormDomainError):
        return EXIT_VALIDATION
    if isinstance(error, (NumericalBoundError, NumericalError)):
        return EXIT_NUMERICAL
    if isinstance(error, OSError):
        return EXIT_IO
    return EXIT_VALIDATION


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging("DEBUG" if args.verbose else (args.log_level or settings.log_level))

    try:
        manager = PluginManager(settings)
        return COMMANDS[args.command].handle(args, manager)
    except (NHEntropyError, OSError, ValueError) as e:
        code = exit_code_for(e)
        logger.debug(f"命令 '{args.command}' 失败 (退出码 {code})", exc_info=True)
        print(f"错误: {e}", file=sys.stderr)
        return code
