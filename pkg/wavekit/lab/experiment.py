"""
wavekit 实验基类

定义每个子命令实验必须实现的标准接口和生命周期方法
"""

import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional

from ..models.config import RunConfig
from .result_manager import ResultManager
from .types import RunResult, RunStatus


class Experiment(ABC):
    """
    实验基类

    run() 依次调用 initialize -> execute -> collect_data -> analyze_data
    -> save_data -> cleanup。任一阶段抛出的异常保存在 RunResult.error 中。
    """

    command: str = ""

    def __init__(self, config: RunConfig, results: Optional[ResultManager] = None):
        """
        初始化实验

        Args:
            config: 合并后的运行配置
            results: 结果管理器，默认写入 config.output_dir
        """
        self.config = config
        self.results = results or ResultManager(config.output_dir)
        self.logger = logging.getLogger(f"{self.__class__.__name__}")
        self.run_dir: Path = self.results.run_directory(self.command, self.config)
        self.tables: Dict[str, Any] = {}
        self.result = RunResult(command=self.command, status=RunStatus.PENDING, output_dir=str(self.run_dir))

    def log(self, message: str, level: str = "INFO"):
        """
        记录日志

        Args:
            message: 日志消息
            level: 日志级别
        """
        log_method = getattr(self.logger, level.lower(), self.logger.info)
        log_method(f"[{self.command}] {message}")

    def _fail(self, error: BaseException) -> RunResult:
        self.log(f"❌ 运行出错: {error}", "ERROR")
        self.result.status = RunStatus.FAILED
        self.result.error = error
        self.result.error_message = str(error)
        if self.run_dir.exists():
            self.results.record(self.result, self.run_dir)
        return self.result

    def run(self) -> RunResult:
        """
        运行实验的完整流程

        Returns:
            运行结果
        """
        try:
            self.log("🚀 开始运行")
            self.result.status = RunStatus.INITIALIZING
            self.initialize()

            self.result.status = RunStatus.RUNNING
            self.execute()

            self.result.status = RunStatus.COLLECTING
            self.collect_data()

            self.result.status = RunStatus.ANALYZING
            self.result.metrics = self.analyze_data()

            self.result.status = RunStatus.SAVING
            self.result.result_files = self.save_data()

            self.result.status = RunStatus.CLEANING
            self.cleanup()

            self.result.status = RunStatus.COMPLETED
            self.results.record(self.result, self.run_dir)
            self.log("✅ 运行完成")
            return self.result

        except Exception as e:
            return self._fail(e)

    def initialize(self) -> None:
        """准备输出目录；子类可扩展"""
        self.run_dir.mkdir(parents=True, exist_ok=True)
        self.log(f"📁 输出目录已准备: {self.run_dir}", "DEBUG")

    @abstractmethod
    def execute(self) -> None:
        """执行数值计算"""

    def collect_data(self) -> None:
        """将计算结果整理为 self.tables；默认 execute 已直接填充"""

    @abstractmethod
    def analyze_data(self) -> Dict[str, Any]:
        """
        分析结果

        Returns:
            写入 manifest summary 的指标字典
        """

    def save_data(self) -> list:
        """
        写出 CSV 表格与 manifest.json

        Returns:
            写出的文件列表
        """
        files = []
        for name, (header, rows) in self.tables.items():
            files.append(str(self.results.write_csv(self.run_dir, name, header, rows)))
        manifest = self.results.write_manifest(self.run_dir, self.command, self.config,
                                               self.result.metrics, [Path(f).name for f in files])
        files.append(str(manifest))
        return files

    def cleanup(self) -> None:
        """默认实现为空"""
