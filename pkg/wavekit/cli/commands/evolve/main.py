from typing import Optional

import typer

from wavekit.cli.utils import ConfigOption, LogLevelOption, OutputDirOption, SeedOption, execute


def evolve(
    order: Optional[str] = typer.Option(None, "--order", help="层级阶数 00/10/11/02/12"),
    eps: Optional[float] = typer.Option(None, "--eps", help="振幅比 ε"),
    delta: Optional[float] = typer.Option(None, "--delta", help="深度比 δ"),
    gamma: Optional[float] = typer.Option(None, "--gamma", help="无量纲涡度"),
    sigma_hat: Optional[float] = typer.Option(None, "--sigma-hat", help="无量纲表面张力"),
    N: Optional[int] = typer.Option(None, "--N", help="采样点数（2 的幂）"),
    L: Optional[float] = typer.Option(None, "--L", help="周期盒半宽"),
    dt: Optional[float] = typer.Option(None, "--dt", help="时间步长"),
    steps: Optional[int] = typer.Option(None, "--steps", help="步数"),
    snapshot_every: Optional[int] = typer.Option(None, "--snapshot-every", help="快照间隔步数"),
    amplitude: Optional[float] = typer.Option(None, "--amplitude", help="初始 sech² 隆起的振幅"),
    noise: Optional[float] = typer.Option(None, "--noise", help="按种子叠加的光滑扰动振幅"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """以隐式中点法推进 (n,m) 阶层级方程"""
    overrides = dict(order=order, eps=eps, delta=delta, gamma=gamma, sigma_hat=sigma_hat, N=N, L=L, dt=dt,
                     steps=steps, snapshot_every=snapshot_every, amplitude=amplitude, noise=noise)
    return execute("evolve", overrides, config, output_dir, seed, log_level)
