# src/nhentropy/core/utils/__init__.py
# 核心工具包
from .logging import setup_logging
from .helpers import format_float, least_squares_slope, parse_float_list, time_grid
