# src/nhentropy/cli/commands/__init__.py
# 每个子命令模块提供 register(subparsers) 与 handle(args, manager) -> 退出码
from . import compare, figure, plugins, run, scan

COMMANDS = {
    "run": run,
    "figure": figure,
    "compare": compare,
    "scan-k": scan,
    "plugins": plugins,
}

__all__ = ["COMMANDS"]
