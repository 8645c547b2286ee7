"""
wavekit 配置管理

负责 YAML 运行文件的加载和配置合并：默认值 < 文件中的子命令段 < 环境变量 WAVEKIT_OUTPUT_DIR < 命令行参数
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Type

from pydantic import ValidationError as PydanticValidationError
from pydantic_yaml import parse_yaml_file_as

from ..models.base import ValidationError
from ..models.config import COMMAND_MODELS, ConfigFile, RunConfig

OUTPUT_DIR_ENV = "WAVEKIT_OUTPUT_DIR"


def _pydantic_errors(e: PydanticValidationError):
    return [{"loc": ".".join(str(p) for p in err["loc"]), "msg": err["msg"]} for err in e.errors()]


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_file: Optional[str] = None):
        """
        初始化配置管理器

        Args:
            config_file: YAML 运行文件路径；None 表示只用默认值和命令行参数

        Raises:
            ValidationError: 文件不存在或内容不合法
        """
        self.logger = logging.getLogger(__name__)
        self.config_file = Path(config_file) if config_file else None
        self.file_config = self._load(self.config_file) if self.config_file else ConfigFile()

    def _load(self, path: Path) -> ConfigFile:
        if not path.exists():
            raise ValidationError(f"配置文件不存在: {path}")
        try:
            loaded = parse_yaml_file_as(ConfigFile, path)
        except PydanticValidationError as e:
            raise ValidationError(f"配置文件 {path} 验证失败", _pydantic_errors(e)) from e
        except Exception as e:
            raise ValidationError(f"加载配置文件 {path} 时出错: {e}") from e
        self.logger.info(f"📁 已加载配置文件: {path}")
        return loaded

    @staticmethod
    def model_for(command: str) -> Type[RunConfig]:
        if command not in COMMAND_MODELS:
            raise ValidationError(f"unknown command {command!r}")
        return COMMAND_MODELS[command]

    def resolve(self, command: str, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """
        合并子命令配置

        Args:
            command: 子命令名称
            overrides: 命令行参数；值为 None 的项视为未给出

        Returns:
            验证后的配置模型

        Raises:
            ValidationError: 合并后的配置不合法
        """
        model = self.model_for(command)
        merged: Dict[str, Any] = {}
        section = self.file_config.section(command)
        if section is not None:
            merged.update(section.model_dump(exclude_unset=True))
            self.logger.debug(f"🔧 {command}: 文件段提供 {sorted(merged)}")
        env_dir = os.environ.get(OUTPUT_DIR_ENV)
        if env_dir:
            merged["output_dir"] = env_dir
        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if key in merged and merged[key] != value:
                self.logger.debug(f"🔧 {command}: 命令行覆盖 {key} = {value!r}（文件值 {merged[key]!r}）")
            merged[key] = value
        try:
            return model(**merged)
        except PydanticValidationError as e:
            raise ValidationError(f"{command} 配置验证失败", _pydantic_errors(e)) from e
