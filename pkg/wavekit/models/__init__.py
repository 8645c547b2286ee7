from .base import *
from .config import COMMAND_MODELS, ConfigFile, RunConfig
from .params import DimensionlessParams, PhysicalParams, TensionScale, nondimensionalize
from .reports import EstimateSweep, ResidualReport
