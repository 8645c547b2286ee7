from typing import Optional

import typer

from wavekit.cli.utils import ConfigOption, LogLevelOption, OutputDirOption, SeedOption, execute
from wavekit.models.config import BoussinesqMode
from wavekit.soliton.spec import SolitonFamily

C_OPTION = typer.Option(None, "--c", help="波速 c")
KAPPA_OPTION = typer.Option(None, "--kappa", help="涡度乘积 κ = γδ")
SIGMA_HAT_OPTION = typer.Option(None, "--sigma-hat", help="无量纲表面张力")
CUBIC_OPTION = typer.Option(None, "--cubic", help="慢变量方程的三次项系数")


def _family(family: Optional[SolitonFamily]) -> Optional[str]:
    return family.value if family else None


def boussinesq(
    c: Optional[float] = C_OPTION,
    kappa: Optional[float] = KAPPA_OPTION,
    sigma_hat: Optional[float] = SIGMA_HAT_OPTION,
    cubic: Optional[float] = CUBIC_OPTION,
    N: Optional[int] = typer.Option(None, "--N", help="采样点数（2 的幂）"),
    dt: Optional[float] = typer.Option(None, "--dt", help="时间步长"),
    steps: Optional[int] = typer.Option(None, "--steps", help="步数"),
    mode: Optional[BoussinesqMode] = typer.Option(None, "--mode", help="soliton 或 growth"),
    family: Optional[SolitonFamily] = typer.Option(None, "--family", help="soliton 模式下的孤立波族"),
    wavenumber: Optional[float] = typer.Option(None, "--wavenumber", help="growth 模式下的扰动波数"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """推进慢变量方程：孤立波平移或不稳定模增长"""
    overrides = dict(c=c, kappa=kappa, sigma_hat=sigma_hat, cubic=cubic, N=N, dt=dt, steps=steps,
                     mode=mode.value if mode else None, family=_family(family), wavenumber=wavenumber)
    return execute("boussinesq", overrides, config, output_dir, seed, log_level)


def soliton_profile(
    c: Optional[float] = C_OPTION,
    kappa: Optional[float] = KAPPA_OPTION,
    sigma_hat: Optional[float] = SIGMA_HAT_OPTION,
    family: Optional[SolitonFamily] = typer.Option(None, "--family", help="elevated 或 depression"),
    N: Optional[int] = typer.Option(None, "--N", help="采样点数（2 的幂）"),
    cubic: Optional[float] = CUBIC_OPTION,
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """闭式孤立波剖面，输出 CSV (z, W) 及残差"""
    overrides = dict(c=c, kappa=kappa, sigma_hat=sigma_hat, family=_family(family), N=N, cubic=cubic)
    return execute("soliton-profile", overrides, config, output_dir, seed, log_level)


def soliton_atlas(
    c: Optional[float] = C_OPTION,
    kappa: Optional[float] = KAPPA_OPTION,
    sigma_hat: Optional[float] = SIGMA_HAT_OPTION,
    cubic: Optional[float] = CUBIC_OPTION,
    c_min: Optional[float] = typer.Option(None, "--c-min", help="速度扫描起点"),
    c_max: Optional[float] = typer.Option(None, "--c-max", help="速度扫描终点"),
    count: Optional[int] = typer.Option(None, "--count", help="速度扫描点数"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """孤立波存在性图谱；给出 --c 时只分类单个参数"""
    overrides = dict(c=c, kappa=kappa, sigma_hat=sigma_hat, cubic=cubic, c_min=c_min, c_max=c_max, count=count)
    return execute("soliton-atlas", overrides, config, output_dir, seed, log_level)


def manifold(
    c: Optional[float] = C_OPTION,
    kappa: Optional[float] = KAPPA_OPTION,
    sigma_hat: Optional[float] = SIGMA_HAT_OPTION,
    cubic: Optional[float] = CUBIC_OPTION,
    count: Optional[int] = typer.Option(None, "--count", help="流形采样点数"),
    config: Optional[str] = ConfigOption,
    output_dir: Optional[str] = OutputDirOption,
    seed: Optional[int] = SeedOption,
    log_level: str = LogLevelOption,
):
    """Γ 流形采样与分支标签"""
    overrides = dict(c=c, kappa=kappa, sigma_hat=sigma_hat, cubic=cubic, count=count)
    return execute("manifold", overrides, config, output_dir, seed, log_level)
