# src/nhentropy/cli/commands/plugins.py
import argparse

from nhentropy.core.plugin_manager import PluginManager


def register(subparsers: argparse._SubParsersAction) -> None:
    subparsers.add_parser("plugins", help="列出已注册的模型与解析器插件")


def handle(args: argparse.Namespace, manager: PluginManager) -> int:
    for plugin_type, names in manager.list_available_plugins().items():
        print(f"{plugin_type}: {', '.join(names) if names else '(无)'}")
    return 0
