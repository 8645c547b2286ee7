#!/usr/bin/env python3
"""
wavekit 实验生命周期

CLI 的后端：配置合并、子命令实验注册、确定性结果写出
"""

from .config import ConfigManager
from .experiment import Experiment
from .registry import ExperimentRegistry, get_experiment_class, list_experiments, register_experiment
from .result_manager import ResultManager
from .types import RunManifest, RunResult, RunStatus

__all__ = [
    "ConfigManager",
    "Experiment",
    "ExperimentRegistry",
    "register_experiment",
    "get_experiment_class",
    "list_experiments",
    "ResultManager",
    "RunManifest",
    "RunResult",
    "RunStatus",
]
