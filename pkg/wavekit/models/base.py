"""
Base models and the exception hierarchy shared by every wavekit module
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel


class BaseWaveModel(BaseModel):
    """Base model for all wavekit parameter, report and config models"""

    class Config:
        validate_assignment = True
        extra = "forbid"
        use_enum_values = True


class WavekitError(Exception):
    """Root of all errors raised by wavekit"""


class ValidationError(WavekitError):
    """Input rejected before any numerics ran"""

    def __init__(self, message: str, errors: Optional[List[Dict[str, Any]]] = None):
        self.message = message
        self.errors = errors or []
        super().__init__(self.message)

    def __str__(self):
        if self.errors:
            error_details = "\n".join([f"- {e}" for e in self.errors])
            return f"{self.message}\n{error_details}"
        return self.message


class AdmissionError(ValidationError):
    """A soliton family was requested for parameters that do not admit it"""

    def __init__(self, message: str, inequality: str, value: float):
        super().__init__(message, [{"inequality": inequality, "value": value}])
        self.inequality = inequality
        self.value = value


class NumericalError(WavekitError):
    """A numerical procedure could not produce a trustworthy result"""


class CuspError(NumericalError):
    """Parametric surface is not an immersion (X_λ² + Y_λ² too small)"""

    def __init__(self, min_speed2: float, threshold: float = 1e-12):
        self.min_speed2 = min_speed2
        self.threshold = threshold
        super().__init__(
            f"near-cusp parameterization: min(X_λ²+Y_λ²) = {min_speed2:.3e} < {threshold:.0e}"
        )


class BlowUpError(NumericalError):
    """Profile denominator 1 + Γ₂cosh(αz) vanishes"""

    def __init__(self, alpha_z: float):
        self.alpha_z = alpha_z
        super().__init__(f"profile blows up at αz = arccosh(1/|Γ₂|) = {alpha_z:.12g}")


class ConvergenceError(NumericalError):
    """Implicit solve did not reach its tolerance"""

    def __init__(self, message: str, iterations: int, increment: float):
        self.iterations = iterations
        self.increment = increment
        super().__init__(f"{message} (iterations={iterations}, last increment={increment:.3e})")


class OverflowGuardError(NumericalError):
    """Wavenumber modulus beyond the hyperbolic overflow guard"""

    def __init__(self, kappa: float, kappa_max: float):
        self.kappa = kappa
        self.kappa_max = kappa_max
        super().__init__(f"|k| = {kappa:.6g} exceeds overflow guard κ_max = {kappa_max:.6g}")


class DegenerateCoefficientError(NumericalError):
    """A coefficient that must stay away from zero came too close"""
