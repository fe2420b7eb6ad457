# src/nhentropy/core/utils/helpers.py

"""
核心通用工具函数。
"""
from typing import List, Sequence

import numpy as np

# 17 位有效数字，保证 double 往返精确
CSV_FLOAT_FORMAT = "%.16e"


def format_float(value: float) -> str:
    """按 CSV 约定格式化浮点数 (科学计数法，17 位有效数字)。"""
    return CSV_FLOAT_FORMAT % value


def parse_float_list(text: str) -> List[float]:
    """解析逗号分隔的实数列表，例如 "0,1,1.5"。"""
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ValueError(f"空的数值列表: '{text}'")
    return [float(item) for item in items]


def time_grid(t_max: float, samples: int) -> np.ndarray:
    """生成 [0, t_max] 上的等距时间网格 (含端点)。"""
    if samples < 2 or not t_max > 0:
        raise ValueError(f"时间网格需要 samples >= 2 且 t_max > 0，得到 samples={samples}, t_max={t_max}")
    return np.linspace(0.0, float(t_max), int(samples))


def least_squares_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """对 (x, y) 做一次多项式最小二乘拟合并返回斜率。"""
    slope, _ = np.polyfit(np.asarray(x, dtype=float), np.asarray(y, dtype=float), 1)
    return float(slope)


