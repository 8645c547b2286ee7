"""
wavekit 实验注册器

管理子命令实验类型的注册、查询和实例化
"""

import logging
from typing import Any, Dict, List, Optional, Type

from ..models.base import ValidationError
from ..models.config import RunConfig
from .experiment import Experiment


class ExperimentRegistry:
    """
    实验注册器

    按子命令名称登记 Experiment 子类，CLI 通过它创建实验实例
    """

    def __init__(self):
        """初始化实验注册器"""
        self.logger = logging.getLogger(__name__)
        self._experiments: Dict[str, Type[Experiment]] = {}
        self._descriptions: Dict[str, str] = {}
        self._tags: Dict[str, List[str]] = {}

    def register(self, command: str, experiment_class: Type[Experiment],
                 description: str = "", tags: Optional[List[str]] = None):
        """
        注册实验类型

        Args:
            command: 子命令名称
            experiment_class: 实验类（必须继承自 Experiment）
            description: 描述
            tags: 标签列表
        """
        if not issubclass(experiment_class, Experiment):
            raise ValidationError(f"实验类 {experiment_class.__name__} 必须继承自 Experiment")
        self._experiments[command] = experiment_class
        self._descriptions[command] = description or (experiment_class.__doc__ or "").strip()
        self._tags[command] = tags or []
        self.logger.debug(f"✅ 注册实验类型: {command} -> {experiment_class.__name__}")

    def unregister(self, command: str) -> bool:
        """
        注销实验类型

        Returns:
            是否成功注销
        """
        if command not in self._experiments:
            self.logger.warning(f"⚠️ 尝试注销不存在的实验类型: {command}")
            return False
        del self._experiments[command]
        del self._descriptions[command]
        del self._tags[command]
        self.logger.debug(f"🗑️ 注销实验类型: {command}")
        return True

    def get_experiment_class(self, command: str) -> Optional[Type[Experiment]]:
        return self._experiments.get(command)

    def create_experiment(self, command: str, config: RunConfig, **kwargs) -> Experiment:
        """
        创建实验实例

        Args:
            command: 子命令名称
            config: 合并后的配置

        Returns:
            实验实例

        Raises:
            ValidationError: 子命令未注册
        """
        experiment_class = self.get_experiment_class(command)
        if experiment_class is None:
            self.logger.error(f"❌ 实验类型 {command} 未注册")
            raise ValidationError(f"unknown command {command!r}; registered: {self.list_experiments()}")
        return experiment_class(config, **kwargs)

    def list_experiments(self) -> List[str]:
        return sorted(self._experiments)

    def get_experiment_info(self, command: str) -> Optional[Dict[str, Any]]:
        """
        获取实验类型信息

        Returns:
            信息字典，不存在时为 None
        """
        if command not in self._experiments:
            return None
        experiment_class = self._experiments[command]
        return {
            "command": command,
            "class_name": experiment_class.__name__,
            "module": experiment_class.__module__,
            "description": self._descriptions[command],
            "tags": self._tags[command],
        }

    def search_experiments(self, query: str) -> List[str]:
        """按名称、描述或标签搜索"""
        query = query.lower()
        return [
            command for command in self.list_experiments()
            if query in command.lower()
            or query in self._descriptions[command].lower()
            or any(query in tag.lower() for tag in self._tags[command])
        ]


_global_registry = ExperimentRegistry()


def get_global_registry() -> ExperimentRegistry:
    return _global_registry


def register_experiment(command: str, description: str = "", tags: Optional[List[str]] = None):
    """
    类装饰器：注册到全局注册器

    Args:
        command: 子命令名称
    """
    def decorator(experiment_class: Type[Experiment]) -> Type[Experiment]:
        experiment_class.command = command
        _global_registry.register(command, experiment_class, description, tags)
        return experiment_class
    return decorator


def get_experiment_class(command: str) -> Optional[Type[Experiment]]:
    return _global_registry.get_experiment_class(command)


def list_experiments() -> List[str]:
    return _global_registry.list_experiments()
