# src/nhentropy/cli/commands/figure.py
import argparse

from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.scenario.models import FigureId
from nhentropy.core.workflows.figures import FigureWorkflow


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("figure", help="重新生成一张图的逐曲线 CSV 与绘图脚本")
    parser.add_argument("figure", choices=[item.value for item in FigureId], help="图编号")
    parser.add_argument("--out", default=None, metavar="DIR", help="输出目录 (默认取配置 output_dir)")


def handle(args: argparse.Namespace, manager: PluginManager) -> int:
    artifact = FigureWorkflow(manager).run(args.figure, out_dir=args.out)
    print(f"{artifact.figure.value}: {len(artifact.curves)} 条曲线，绘图脚本 {artifact.script}")
    return 0
