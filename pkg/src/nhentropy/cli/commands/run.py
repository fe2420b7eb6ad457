# src/nhentropy/cli/commands/run.py
import argparse
import logging

from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.workflows.simulation import SimulationWorkflow

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("run", help="运行一个或多个场景文件并写出 CSV")
    parser.add_argument("scenarios", nargs="+", metavar="SCENARIO", help="场景文件路径")
    parser.add_argument("--out", default=None, metavar="DIR", help="输出目录 (默认取配置 output_dir)")
    parser.add_argument("--workers", type=int, default=1, help="并行执行的场景数")


def handle(args: argparse.Namespace, manager: PluginManager) -> int:
    parser = manager.get_parser()
    scenarios = [parser.parse(path) for path in args.scenarios]
    results = SimulationWorkflow(manager).run_batch(scenarios, out_dir=args.out, workers=args.workers)
    for result in results:
        last = result.samples[-1]
        target = result.csv_path or "(未配置 csv 输出)"
        print(
            f"{result.scenario.source}: {len(result.samples)} 点 -> {target}  "
            f"[t={last.time:g}: Tr Ω={last.trace_omega:.6g}, S_vN={last.s_vn:.6g}, S_NH={last.s_nh:.6g}]"
        )
    return 0
