"""
wavekit 运行类型定义

定义实验生命周期使用的状态枚举、运行结果和结果清单
"""

from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Any, Dict, List, Optional

from pydantic import Field

from ..models.base import BaseWaveModel


class RunStatus(Enum):
    """运行状态枚举"""
    PENDING = auto()      # 等待中
    INITIALIZING = auto() # 初始化中
    RUNNING = auto()      # 计算中
    COLLECTING = auto()   # 收集数据中
    ANALYZING = auto()    # 分析数据中
    SAVING = auto()       # 保存数据中
    CLEANING = auto()     # 清理中
    COMPLETED = auto()    # 已完成
    FAILED = auto()       # 失败


@dataclass
class RunResult:
    """运行结果数据类"""
    command: str                  # 子命令名称
    status: RunStatus             # 运行状态
    output_dir: str               # 本次运行的输出目录
    result_files: List[str] = field(default_factory=list) # 写出的文件列表
    metrics: Dict[str, Any] = field(default_factory=dict) # 汇总指标
    error_message: Optional[str] = None   # 错误信息
    error: Optional[BaseException] = None # 失败阶段抛出的异常，供 CLI 映射退出码

    @property
    def succeeded(self) -> bool:
        return self.status == RunStatus.COMPLETED


class RunManifest(BaseWaveModel):
    """每次运行写出的 manifest.json"""

    command: str = Field(..., description="子命令名称")
    config: Dict[str, Any] = Field(..., description="合并后的完整配置")
    versions: Dict[str, str] = Field(..., description="wavekit、numpy、scipy、pydantic 版本")
    seed: int = Field(..., description="随机种子")
    summary: Dict[str, Any] = Field(default_factory=dict, description="汇总指标（含 sup-norm 残差）")
    files: List[str] = Field(default_factory=list, description="本次运行写出的数据文件")
