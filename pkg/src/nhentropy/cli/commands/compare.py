# src/nhentropy/cli/commands/compare.py
import argparse
from pathlib import Path

from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.workflows.comparison import DEFAULT_BOUND, ComparisonWorkflow
from nhentropy.core.workflows.simulation import write_frame


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("compare", help="数值解与解析解对比")
    parser.add_argument("scenario", help="场景文件路径")
    parser.add_argument("--bound", type=float, default=DEFAULT_BOUND, help="偏差上限")
    parser.add_argument(
        "--against", default=None, metavar="SCENARIO",
        help="只差规范平移的第二个场景；逐点差写入 --out 目录下的 gauge_difference.csv",
    )
    parser.add_argument("--out", default=None, metavar="DIR", help="输出目录 (默认取配置 output_dir)")


def handle(args: argparse.Namespace, manager: PluginManager) -> int:
    parser = manager.get_parser()
    scenario = parser.parse(args.scenario)
    workflow = ComparisonWorkflow(manager, bound=args.bound)
    report = workflow.run(scenario)
    print(report.render())

    if args.against:
        shifted = parser.parse(args.against)
        frame = workflow.gauge_run(scenario, shifted)
        out = Path(args.out if args.out is not None else manager.settings.output_dir)
        path = write_frame(frame, out / "gauge_difference.csv")
        print(f"规范对比: max|ΔS_vN| = {frame['s_vn_diff'].abs().max():.3e}，逐点差已写入 {path}")

    if report.skipped:
        return 0
    return 0 if report.passed else 2
