import logging
from typing import Any, Dict, List, Optional

import typer
from pydantic import ValidationError as PydanticValidationError
from rich import print
from rich.logging import RichHandler
from rich.table import Table

from wavekit.lab import experiments  # noqa: F401  registers every subcommand experiment
from wavekit.lab.config import OUTPUT_DIR_ENV, ConfigManager
from wavekit.lab.registry import get_global_registry
from wavekit.lab.types import RunResult
from wavekit.models.base import NumericalError, ValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2
EXIT_USAGE = 64

ConfigOption = typer.Option(None, "--config", help="YAML 运行文件，每个子命令一段")
OutputDirOption = typer.Option(None, "--output-dir", envvar=OUTPUT_DIR_ENV, help="结果输出目录")
SeedOption = typer.Option(None, "--seed", help="随机种子，记录在 manifest 中")
LogLevelOption = typer.Option("WARNING", "--log-level", help="日志级别 DEBUG/INFO/WARNING/ERROR")


def setup_logging(level: str = "WARNING"):
    """安装一次 RichHandler，之后只调整级别"""
    root = logging.getLogger()
    numeric = getattr(logging, level.upper(), None)
    if not isinstance(numeric, int):
        raise ValidationError(f"unknown log level {level!r}")
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        handler = RichHandler(show_path=False, rich_tracebacks=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
    root.setLevel(numeric)


def exit_code_for(error: Optional[BaseException]) -> int:
    """0 成功，1 输入验证，2 数值失败；未知异常记录堆栈后按数值失败处理"""
    if error is None:
        return EXIT_OK
    if isinstance(error, (ValidationError, PydanticValidationError)):
        return EXIT_VALIDATION
    if not isinstance(error, NumericalError):
        logger.error(f"❌ 未预期的异常 {type(error).__name__}: {error}", exc_info=error)
    return EXIT_NUMERICAL


def parse_floats(text: Optional[str]) -> Optional[List[float]]:
    """'0.02,0.01' -> [0.02, 0.01]"""
    if text is None:
        return None
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise typer.BadParameter(f"expected comma-separated numbers, got {text!r}") from e


def print_result(result: RunResult):
    if not result.succeeded:
        print(f"[red]❌ {result.command} 失败: {result.error_message}[/red]")
        return
    table = Table(title=f"{result.command} → {result.output_dir}")
    table.add_column("metric", style="cyan")
    table.add_column("value")
    for key, value in result.metrics.items():
        table.add_row(key, f"{value:.6g}" if isinstance(value, float) else str(value))
    print(table)


def execute(command: str, overrides: Dict[str, Any], config: Optional[str], output_dir: Optional[str],
            seed: Optional[int], log_level: str) -> int:
    """
    合并配置、运行注册的实验并映射退出码

    Raises:
        typer.Exit: 非零退出码
    """
    code = EXIT_OK
    try:
        setup_logging(log_level)
        manager = ConfigManager(config)
        overrides = {**overrides, "output_dir": output_dir, "seed": seed}
        run_config = manager.resolve(command, overrides)
        result = get_global_registry().create_experiment(command, run_config).run()
        print_result(result)
        code = exit_code_for(result.error)
    except ValidationError as e:
        print(f"[red]❌ {e}[/red]")
        code = EXIT_VALIDATION
    except Exception as e:
        print(f"[red]❌ {type(e).__name__}: {e}[/red]")
        code = exit_code_for(e)
    if code != EXIT_OK:
        raise typer.Exit(code)
    return code
