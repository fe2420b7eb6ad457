# src/nhentropy/core/workflows/scan.py

"""
规范乘子 k 的阈值扫描工作流。
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence, Union

import pandas as pd

from nhentropy.core.exceptions import WorkflowError
from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.scenario.models import Scenario
from nhentropy.core.workflows.simulation import write_frame

logger = logging.getLogger(__name__)


class ScanWorkflow:
    """
    对场景的模型参数逐个替换 k，估计 S_NH 的大 τ 斜率。
    """
    def __init__(self, plugin_manager: PluginManager):
        self.plugin_manager = plugin_manager

    def run(
        self,
        scenario: Scenario,
        k_values: Sequence[float],
        tau_probe: Optional[float] = None,
        method: str = "closed",
        workers: int = 1,
        csv_path: Union[str, Path, None] = None,
    ) -> pd.DataFrame:
        """
        执行扫描。

        Args:
            scenario (Scenario): 基准场景，其中的 k 被 k_values 替换。
            k_values (Sequence[float]): 要扫描的 k。
            tau_probe (Optional[float]): 探测窗口右端点，缺省由模型插件决定。
            method (str): "closed" 或 "numeric"。
            workers (int): 并行线程数，各 k 相互独立。
            csv_path: 给出时把结果写成 CSV。

        Returns:
            pd.DataFrame: 列 k 与 slope。

        Raises:
            WorkflowError: 模型不支持阈值扫描或 k_values 为空。
        """
        if not k_values:
            raise WorkflowError("k 列表为空。")
        start_time = time.time()
        provider = self.plugin_manager.get_model(scenario.model)

        def scan_one(k: float):
            try:
                return provider.threshold_scan(scenario.params, [k], tau_probe=tau_probe, method=method)[0]
            except NotImplementedError as e:
                raise WorkflowError(str(e)) from e

        if workers > 1 and len(k_values) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                points = list(pool.map(scan_one, k_values))
        else:
            points = [scan_one(k) for k in k_values]

        frame = pd.DataFrame(points, columns=["k", "slope"], dtype=float)
        if csv_path is not None:
            write_frame(frame, csv_path)
            logger.info(f"扫描结果已写入 {csv_path}")
        logger.info(f"阈值扫描完成: {len(points)} 个 k 值，耗时 {time.time() - start_time:.2f} 秒。")
        return frame
