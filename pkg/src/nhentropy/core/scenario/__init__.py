# src/nhentropy/core/scenario/__init__.py
# 场景数据模型
from .models import FigureId, OutputSpec, Scenario

__all__ = ["FigureId", "OutputSpec", "Scenario"]
