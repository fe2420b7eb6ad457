# src/nhentropy/__init__.py
"""非厄米量子动力学与熵分析。"""

__version__ = "0.1.0"
