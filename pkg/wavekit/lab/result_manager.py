"""
wavekit 结果管理器

处理每次运行的输出目录、CSV 表格、manifest.json 和 metadata.json 索引。
CSV 不含时间戳，相同配置和种子的两次运行产出逐字节相同的表格。
"""

import hashlib
import json
import logging
import threading
from pathlib import Path
from typing import Any, Dict, List, Sequence

import numpy as np
import pydantic
import scipy

from ..models.config import RunConfig
from .types import RunManifest, RunResult

FLOAT_FORMAT = "%.17g"


def package_versions() -> Dict[str, str]:
    """manifest 中记录的依赖版本"""
    from .. import __version__

    return {
        "wavekit": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pydantic": pydantic.VERSION,
    }


def config_digest(config: RunConfig) -> str:
    """配置的 sha1 前 8 位，用作运行目录后缀"""
    payload = json.dumps(config.model_dump(mode="json"), sort_keys=True)
    return hashlib.sha1(payload.encode("utf-8")).hexdigest()[:8]


def _format_cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % float(value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


class ResultManager:
    """
    结果管理器

    负责运行目录的创建、表格和清单的写出以及结果索引的维护
    """

    def __init__(self, base_dir: str = "results"):
        """
        初始化结果管理器

        Args:
            base_dir: 结果存储基础目录
        """
        self.base_dir = Path(base_dir)
        self.logger = logging.getLogger(__name__)
        self.metadata_file = self.base_dir / "metadata.json"
        self.result_index: Dict[str, Dict[str, Any]] = {}
        self.lock = threading.RLock()
        self._load_result_index()

    def _load_result_index(self):
        """加载结果索引"""
        if not self.metadata_file.exists():
            return
        try:
            with open(self.metadata_file, "r", encoding="utf-8") as f:
                metadata = json.load(f)
            for entry in metadata.get("results", []):
                self.result_index[entry["run_id"]] = entry
            self.logger.debug(f"📚 加载了 {len(self.result_index)} 个结果记录")
        except (OSError, ValueError, KeyError) as e:
            self.logger.warning(f"⚠️ 加载结果元数据文件时出错: {e}")

    def _save_result_index(self):
        """保存结果索引"""
        metadata = {"version": "1.0", "results": [self.result_index[k] for k in sorted(self.result_index)]}
        self.base_dir.mkdir(parents=True, exist_ok=True)
        with open(self.metadata_file, "w", encoding="utf-8") as f:
            json.dump(metadata, f, indent=2, ensure_ascii=False, default=str)

    def run_directory(self, command: str, config: RunConfig) -> Path:
        """
        运行目录 output_dir/<command>-<digest>

        Args:
            command: 子命令名称
            config: 合并后的配置

        Returns:
            运行目录路径（尚未创建）
        """
        return self.base_dir / f"{command}-{config_digest(config)}"

    def write_csv(self, run_dir: Path, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        """
        写出 CSV 表格；浮点数按 %.17g 格式化

        Args:
            run_dir: 运行目录
            name: 文件名（不含扩展名）
            header: 列名
            rows: 行数据

        Returns:
            CSV 文件路径
        """
        path = run_dir / f"{name}.csv"
        cells = np.array([[_format_cell(v) for v in row] for row in rows], dtype=str).reshape(-1, len(header))
        np.savetxt(path, cells, fmt="%s", delimiter=",", header=",".join(header), comments="")
        self.logger.info(f"💾 已写出 {path.name}（{len(cells)} 行）")
        return path

    def write_manifest(self, run_dir: Path, command: str, config: RunConfig,
                       summary: Dict[str, Any], files: List[str]) -> Path:
        """
        写出 manifest.json

        Returns:
            清单文件路径
        """
        manifest = RunManifest(
            command=command,
            config=config.model_dump(mode="json"),
            versions=package_versions(),
            seed=config.seed,
            summary=summary,
            files=files,
        )
        path = run_dir / "manifest.json"
        path.write_text(manifest.model_dump_json(indent=2), encoding="utf-8")
        self.logger.info(f"💾 已写出 {path.name}")
        return path

    def record(self, result: RunResult, run_dir: Path):
        """
        将一次运行登记到 metadata.json

        Args:
            result: 运行结果
            run_dir: 运行目录
        """
        with self.lock:
            self.result_index[run_dir.name] = {
                "run_id": run_dir.name,
                "command": result.command,
                "status": result.status.name,
                "output_dir": str(run_dir),
                "metrics": result.metrics,
            }
            self._save_result_index()
        self.logger.debug(f"📊 已登记运行 {run_dir.name}")

    def get_run(self, run_id: str) -> Dict[str, Any]:
        """按运行 ID 获取索引条目"""
        with self.lock:
            return self.result_index.get(run_id, {})

    def list_runs(self, command: str = "") -> List[Dict[str, Any]]:
        """列出结果索引，可按子命令过滤"""
        with self.lock:
            return [e for k, e in sorted(self.result_index.items()) if not command or e["command"] == command]
