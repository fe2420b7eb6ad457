# src/nhentropy/cli/commands/scan.py
import argparse
from pathlib import Path

from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.utils.helpers import parse_float_list
from nhentropy.core.workflows.scan import ScanWorkflow


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("scan-k", help="扫描规范乘子 k，估计 S_NH 的大 τ 斜率")
    parser.add_argument("scenario", help="场景文件路径 (two_level 模型)")
    parser.add_argument("--k-list", required=True, type=parse_float_list, help="逗号分隔的 k 值，例如 0,1,1.5")
    parser.add_argument("--tau-probe", type=float, default=None, help="探测窗口右端点 (默认 10/μ)")
    parser.add_argument("--method", choices=["closed", "numeric"], default="closed", help="解析或数值斜率")
    parser.add_argument("--workers", type=int, default=1, help="并行线程数")
    parser.add_argument("--out", default=None, metavar="DIR", help="给出时把结果写入 DIR/scan_k.csv")


def handle(args: argparse.Namespace, manager: PluginManager) -> int:
    scenario = manager.get_parser().parse(args.scenario)
    csv_path = Path(args.out) / "scan_k.csv" if args.out else None
    frame = ScanWorkflow(manager).run(
        scenario,
        args.k_list,
        tau_probe=args.tau_probe,
        method=args.method,
        workers=args.workers,
        csv_path=csv_path,
    )
    print(f"{'k':>10}  {'dS_NH/dτ':>14}")
    for row in frame.itertuples(index=False):
        print(f"{row.k:>10g}  {row.slope:>14.6f}")
    return 0
