from typing import Optional

import typer

from wavekit.cli.utils import ConfigOption, LogLevelOption, OutputDirOption, SeedOption, execute
from wavekit.models.config import ResidualMode


def global_residual(
    mode: Optional[ResidualMode] = typer.Option(None, "--mode", help="要计算的全局关系"),
    k0: Optional[float] = typer.Option(None, "--k0", help="调和模的波数"),
    amplitude: Optional[float] = typer.Option(None, "--amplitude", help="调和势振幅"),
    eta_amp: Optional[float] = typer.Option(None, "--eta-amp", help="波高振幅"),
    gamma: Optional[float] = typer.Option(None, "--gamma", help="常涡度"),
    h0: Optional[float] = typer.Option(None, "--h0", help="平均水深"),
    L: Optional[float] = typer.Option(None, "--L", help="周期盒半宽"),
    N: Optional[int] = typer.Option(None, "--N", help="采样点数（2 的幂）"),
    m_max: Optional[int] = typer.Option(None, "--m-max", help="计算 |m| <= m_max 的格点波数"),
    bump: Optional[float] = typer.Option(None, "--bump", help="流线底部的起伏振幅"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """人造调和流上的全局关系残差"""
    overrides = dict(mode=mode.value if mode else None, k0=k0, amplitude=amplitude, eta_amp=eta_amp,
                     gamma=gamma, h0=h0, L=L, N=N, m_max=m_max, bump=bump)
    return execute("global-residual", overrides, config, output_dir, seed, log_level)
