"""
wavekit 子命令实验

每个 CLI 子命令对应一个注册到全局注册器的 Experiment 子类。execute 调用
数值模块，self.tables 收集 CSV 表格，analyze_data 给出 manifest 汇总指标。
"""

from typing import Any, Dict, List, Tuple

import numpy as np

from ..field.grid import make_grid
from ..field.spectral import Field, antiderivative, norm_linf, spectral_derivative
from ..hierarchy.integrator import evolve
from ..hierarchy.long_wave import evolve_long3_linear, growth_rate, long3_midpoint, unstable_threshold
from ..hierarchy.order import HierarchyState
from ..hierarchy.systems import smooth_direction
from ..linear.limit import dispersion_omega2
from ..linear.sweep import linear_limit_sweep
from ..models.config import ResidualMode
from ..models.params import DimensionlessParams, PhysicalParams
from ..models.reports import ResidualReport
from ..relation.residuals import (
    flat_bottom_residual,
    irrotational_residuals,
    multivalued_residual,
    rotational_residual,
)
from ..soliton.atlas import ATLAS_COLUMNS, gamma_manifold_atlas, manifold_topology, sample_manifold, speed_sweep
from ..soliton.profiles import (
    gamma_point,
    ode_residual,
    profile,
    soliton2_residual,
    soliton_grid,
    travelling_pde_residual,
)
from ..soliton.spec import SolitonSpec
from ..surface.manufactured import HarmonicMode, StreamlineBottomFlow, parametric_graph, reparameterize
from .experiment import Experiment
from .registry import register_experiment

MULTIVALUED_WARP = 0.3
GROWTH_SEED_AMPLITUDE = 1e-6
GROWTH_LATTICE_INDEX = 8


def _spec(config) -> SolitonSpec:
    return SolitonSpec(c=config.c, kappa=config.kappa, sigma_hat=config.sigma_hat, cubic=config.cubic)


@register_experiment("dispersion", "线性色散关系 ω²(κ)", tags=["linear"])
class DispersionExperiment(Experiment):
    """在 [0, kmax] 上均匀采样线性色散关系"""

    def execute(self):
        cfg = self.config
        params = PhysicalParams(g=cfg.g, h0=cfg.h0, sigma=cfg.sigma, rho=cfg.rho)
        self.kappa = np.linspace(0.0, cfg.kmax, cfg.n)
        self.omega2 = np.asarray(dispersion_omega2(self.kappa, params))
        self.tables["dispersion"] = (("kappa", "omega2"), list(zip(self.kappa, self.omega2)))

    def analyze_data(self) -> Dict[str, Any]:
        return {"samples": int(self.kappa.size), "omega2_max": float(np.max(self.omega2))}


@register_experiment("global-residual", "人造调和解上的全局关系残差", tags=["relation"])
class GlobalResidualExperiment(Experiment):
    """
    在 φ = A cos(k₀x)cosh(k₀(y+h₀)) 与 η = eta_amp·cos(2πx/L) 上计算残差；
    irrotational 模式下 bump 非零时改用流线底部流动
    """

    def execute(self):
        cfg = self.config
        grid = make_grid(1, cfg.L, cfg.N)
        eta = Field.from_function(grid, lambda x: cfg.eta_amp * np.cos(2.0 * np.pi * x / cfg.L))
        ks = grid.lattice_modes(cfg.m_max)
        mode = ResidualMode(cfg.mode)
        self.reports: List[ResidualReport] = []

        if mode == ResidualMode.IRROTATIONAL:
            if cfg.bump != 0.0:
                flow = StreamlineBottomFlow(grid, k0=cfg.k0, amplitude=cfg.bump, current=cfg.amplitude, h0=cfg.h0)
                params = flow.params()
            else:
                flow = HarmonicMode(grid, (cfg.k0,), amplitude=cfg.amplitude, h0=cfg.h0)
                params = PhysicalParams(h0=cfg.h0)
            state = flow.state(eta)
            self.reports.extend(irrotational_residuals(state, flow.bottom_potential(), params, ks,
                                                       workers=cfg.workers))
        else:
            harmonic = HarmonicMode(grid, (cfg.k0,), amplitude=cfg.amplitude, h0=cfg.h0)
            if mode == ResidualMode.FLAT:
                params = PhysicalParams(h0=cfg.h0)
                self.reports.append(flat_bottom_residual(harmonic.state(eta), params, ks, workers=cfg.workers))
            else:
                params = PhysicalParams(h0=cfg.h0, gamma=cfg.gamma)
                state = harmonic.state(eta, cfg.gamma)
                if mode == ResidualMode.ROTATIONAL:
                    self.reports.append(rotational_residual(state, params, ks, workers=cfg.workers))
                else:
                    surface = reparameterize(parametric_graph(state), MULTIVALUED_WARP)
                    self.reports.append(multivalued_residual(surface, params, [k[0] for k in ks],
                                                             workers=cfg.workers))

    def collect_data(self):
        rows = []
        for report in self.reports:
            for k, re, im in zip(report.k_values, report.real, report.imag):
                rows.append((report.name, k[0], re, im))
        self.tables["residuals"] = (("relation", "k", "real", "imag"), rows)

    def analyze_data(self) -> Dict[str, Any]:
        metrics: Dict[str, Any] = {"mode": ResidualMode(self.config.mode).value}
        for report in self.reports:
            metrics[f"{report.name}_sup_norm"] = report.sup_norm
        metrics["sup_norm"] = max(r.sup_norm for r in self.reports)
        self.log(f"📊 sup-k 残差 {metrics['sup_norm']:.3e}")
        return metrics


@register_experiment("linear-sweep", "线性极限 O(ε²) 扫描", tags=["linear"])
class LinearSweepExperiment(Experiment):
    """在波包族上拟合线性极限误差的 log-log 斜率"""

    def execute(self):
        cfg = self.config
        params = PhysicalParams(g=cfg.g, h0=cfg.h0)
        grid = make_grid(1, cfg.L, cfg.N)
        self.sweep = linear_limit_sweep(cfg.measure, params, cfg.epsilons, grid, workers=cfg.workers)
        self.tables["sweep"] = (("epsilon", "error"), [tuple(r) for r in self.sweep.to_rows()])

    def analyze_data(self) -> Dict[str, Any]:
        return {"measure": self.sweep.name, **self.sweep.summary(), "max_error": max(self.sweep.errors)}


@register_experiment("evolve", "层级方程的隐式中点推进", tags=["hierarchy"])
class EvolveExperiment(Experiment):
    """
    从 η = amplitude·sech²(x)、ξ = 0 出发推进一阶 (n,m) 系统；
    noise 非零时按种子叠加光滑扰动
    """

    def execute(self):
        cfg = self.config
        grid = make_grid(1, cfg.L, cfg.N)
        params = DimensionlessParams(eps=cfg.eps, delta=cfg.delta, gamma=cfg.gamma, sigma_hat=cfg.sigma_hat)
        eta = cfg.amplitude / np.cosh(grid.nodes[0]) ** 2
        if cfg.noise > 0.0:
            rng = np.random.default_rng(cfg.seed)
            eta = eta + cfg.noise * smooth_direction(grid, rng)
        state = HierarchyState(Field(grid, eta), Field.zeros(grid))
        self.trajectory = evolve(state, cfg.order, params, cfg.dt, cfg.steps, snapshot_every=cfg.snapshot_every)

    def collect_data(self):
        traj = self.trajectory
        self.tables["energy"] = (("t", "hamiltonian"), list(zip(traj.times, traj.energies)))
        rows: List[Tuple] = []
        for snap in traj.snapshots:
            x = snap.grid.axis(0)
            rows.extend(zip([snap.t] * x.size, x, snap.eta.values, snap.xi.values))
        self.tables["snapshots"] = (("t", "x", "eta", "xi"), rows)

    def analyze_data(self) -> Dict[str, Any]:
        traj = self.trajectory
        return {
            "order": traj.order,
            "relative_drift": traj.relative_drift,
            "final_time": traj.final.t,
            "final_eta_sup": norm_linf(traj.final.eta),
        }


@register_experiment("boussinesq", "慢变量方程：孤立波平移或不稳定增长", tags=["long-wave", "soliton"])
class BoussinesqExperiment(Experiment):
    """
    soliton 模式：以闭式孤立波为初值推进慢变量方程，与平移解比较；
    growth 模式：单模扰动的精确线性演化与解析增长率比较
    """

    def execute(self):
        cfg = self.config
        if cfg.mode == "growth":
            self._growth()
        else:
            self._soliton()

    def _soliton(self):
        cfg = self.config
        spec = _spec(cfg)
        point = gamma_point(spec, cfg.family)
        grid = soliton_grid(spec, cfg.N)
        w = profile(grid, point, spec)
        params = DimensionlessParams(sigma_hat=cfg.sigma_hat, kappa_vort=cfg.kappa, cubic=cfg.cubic)
        xi, xi_T = long3_midpoint(antiderivative(w), Field(grid, -cfg.c * w.values), params, cfg.dt, cfg.steps)
        T = cfg.dt * cfg.steps
        numeric = spectral_derivative(xi).values
        exact = w.shift(cfg.c * T).values
        self.metrics = {
            "mode": "soliton",
            "final_time": T,
            "translation_error": norm_linf(numeric - exact),
            "amplitude": point.amplitude(),
        }
        self.tables["profile"] = (("z", "W_numeric", "W_exact"), list(zip(grid.axis(0), numeric, exact)))

    def _growth(self):
        cfg = self.config
        k = cfg.wavenumber
        grid = make_grid(1, np.pi * GROWTH_LATTICE_INDEX / k, cfg.N)
        x = grid.axis(0)
        xi0 = Field(grid, GROWTH_SEED_AMPLITUDE * np.cos(k * x))
        xi_T0 = Field.zeros(grid)
        rate = float(growth_rate(k, cfg.sigma_hat))
        rows = []
        for t in cfg.dt * np.arange(cfg.steps + 1):
            xi, _ = evolve_long3_linear(xi0, xi_T0, cfg.sigma_hat, float(t))
            amp = 2.0 * float(np.mean(xi.values * np.cos(k * x)))
            rows.append((t, amp, GROWTH_SEED_AMPLITUDE * np.cosh(rate * t)))
        T = rows[-1][0]
        measured = float(np.arccosh(max(rows[-1][1] / GROWTH_SEED_AMPLITUDE, 1.0)) / T) if T > 0 else 0.0
        self.metrics = {
            "mode": "growth",
            "wavenumber": k,
            "unstable_threshold": unstable_threshold(cfg.sigma_hat),
            "growth_rate": rate,
            "measured_rate": measured,
            "rate_error": abs(measured - rate),
        }
        self.tables["growth"] = (("t", "amplitude", "predicted"), rows)

    def analyze_data(self) -> Dict[str, Any]:
        return self.metrics


@register_experiment("soliton-profile", "闭式孤立波剖面及其残差", tags=["soliton"])
class SolitonProfileExperiment(Experiment):
    """在半宽 40/α 的网格上采样 W(z) 并检验行波 ODE 与慢变量方程"""

    def execute(self):
        cfg = self.config
        spec = _spec(cfg)
        self.point = gamma_point(spec, cfg.family)
        grid = soliton_grid(spec, cfg.N)
        w = profile(grid, self.point, spec)
        self.metrics = {
            "family": cfg.family,
            "gamma1": self.point.gamma1,
            "gamma2": self.point.gamma2,
            "amplitude": self.point.amplitude(),
            "manifold_residual": abs(self.point.manifold_residual(spec)),
            "ode_residual": ode_residual(w, spec),
            "soliton2_residual": soliton2_residual(w, spec),
            "travelling_pde_residual": travelling_pde_residual(self.point, spec, grid),
        }
        self.tables["profile"] = (("z", "W"), list(zip(grid.axis(0), w.values)))

    def analyze_data(self) -> Dict[str, Any]:
        self.log(f"📊 ODE 残差 {self.metrics['ode_residual']:.3e}")
        return self.metrics


@register_experiment("soliton-atlas", "孤立波存在性图谱", tags=["soliton"])
class SolitonAtlasExperiment(Experiment):
    """单一参数或速度扫描上的存在性分类"""

    def execute(self):
        cfg = self.config
        if cfg.c is not None:
            specs = [_spec(cfg)]
        else:
            specs = speed_sweep(cfg.c_min, cfg.c_max, cfg.count, cfg.kappa, cfg.sigma_hat, cfg.cubic)
        self.rows = gamma_manifold_atlas(specs, workers=cfg.workers)
        self.tables["atlas"] = (ATLAS_COLUMNS, [row.to_row() for row in self.rows])

    def analyze_data(self) -> Dict[str, Any]:
        metrics: Dict[str, Any] = {
            "rows": len(self.rows),
            "elevated_count": sum(r.elevated_exists for r in self.rows),
            "depression_count": sum(r.depression_exists for r in self.rows),
        }
        if len(self.rows) == 1:
            metrics["verdict"] = self.rows[0].verdict
            metrics["topology"] = self.rows[0].topology
        return metrics


@register_experiment("manifold", "Γ 流形采样与分支标签", tags=["soliton"])
class ManifoldExperiment(Experiment):
    """沿 Γ 流形参数化采样并标注所属分支"""

    def execute(self):
        cfg = self.config
        self.spec = _spec(cfg)
        self.samples = sample_manifold(self.spec, cfg.count)
        self.tables["manifold"] = (("parameter", "Gamma1", "Gamma2", "label"),
                                   [(s.parameter, s.gamma1, s.gamma2, s.label) for s in self.samples])

    def analyze_data(self) -> Dict[str, Any]:
        residual = max(abs(s.point().manifold_residual(self.spec)) for s in self.samples)
        labels = sorted({s.label for s in self.samples})
        return {
            "topology": manifold_topology(self.spec).value,
            "samples": len(self.samples),
            "labels": labels,
            "manifold_residual": residual,
        }
