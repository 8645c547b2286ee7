from typing import Optional

import typer

from wavekit.cli.utils import ConfigOption, LogLevelOption, OutputDirOption, SeedOption, execute, parse_floats
from wavekit.models.config import SweepMeasure


def linear_sweep(
    measure: Optional[SweepMeasure] = typer.Option(None, "--measure", help="relation 或 bernoulli"),
    epsilons: Optional[str] = typer.Option(None, "--epsilons", help="严格递减的振幅，逗号分隔"),
    N: Optional[int] = typer.Option(None, "--N", help="采样点数（2 的幂）"),
    L: Optional[float] = typer.Option(None, "--L", help="周期盒半宽"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """线性极限的 O(ε²) 斜率扫描"""
    overrides = dict(measure=measure.value if measure else None, epsilons=parse_floats(epsilons), N=N, L=L)
    return execute("linear-sweep", overrides, config, output_dir, seed, log_level)
