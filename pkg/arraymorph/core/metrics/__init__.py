from arraymorph.core.metrics.report import MetricsInput, MetricsReport, build_report
from arraymorph.core.metrics.scores import (
    composite_loc,
    round_half_up,
    s_cst,
    s_loc,
    s_pot,
    s_quality,
    s_runtime,
    s_storage,
)

__all__ = [
    "MetricsInput",
    "MetricsReport",
    "build_report",
    "composite_loc",
    "round_half_up",
    "s_cst",
    "s_loc",
    "s_pot",
    "s_quality",
    "s_runtime",
    "s_storage",
]
