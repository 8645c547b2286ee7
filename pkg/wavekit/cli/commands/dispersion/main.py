from typing import Optional

import typer

from wavekit.cli.utils import ConfigOption, LogLevelOption, OutputDirOption, SeedOption, execute


def dispersion(
    g: Optional[float] = typer.Option(None, "--g", help="重力加速度"),
    h0: Optional[float] = typer.Option(None, "--h0", help="平均水深"),
    sigma: Optional[float] = typer.Option(None, "--sigma", help="表面张力"),
    rho: Optional[float] = typer.Option(None, "--rho", help="密度"),
    kmax: Optional[float] = typer.Option(None, "--kmax", help="最大波数模"),
    n: Optional[int] = typer.Option(None, "--n", help="κ 采样点数"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """线性色散关系 ω²(κ)，输出 CSV (kappa, omega2)"""
    overrides = dict(g=g, h0=h0, sigma=sigma, rho=rho, kmax=kmax, n=n)
    return execute("dispersion", overrides, config, output_dir, seed, log_level)
