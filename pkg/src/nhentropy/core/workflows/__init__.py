# src/nhentropy/core/workflows/__init__.py
# 核心业务流程/服务编排包
from .comparison import ComparisonReport, ComparisonWorkflow, Deviation, gauge_difference
from .figures import FigureArtifact, FigureWorkflow, emit_figure, figure_scenarios
from .scan import ScanWorkflow
from .simulation import CSV_COLUMNS, SimulationResult, SimulationWorkflow, samples_to_frame, write_frame

__all__ = [
    "ComparisonReport",
    "ComparisonWorkflow",
    "Deviation",
    "gauge_difference",
    "FigureArtifact",
    "FigureWorkflow",
    "emit_figure",
    "figure_scenarios",
    "ScanWorkflow",
    "CSV_COLUMNS",
    "SimulationResult",
    "SimulationWorkflow",
    "samples_to_frame",
    "write_frame",
]
