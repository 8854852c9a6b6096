"""Dispersive Mach-Zehnder metrology toolkit.

Joint estimation of inverse temperature and dispersive phase: closed-form
Fisher landscapes (``analytic``), exact density-matrix simulation of the
four-qubit interferometer circuit (``circuit``), truncated-Fock open-system
QFIM machinery (``fock``), scaling/robustness meta-analysis (``analysis``),
estimators and bias models (``estimate``), and a CSV/JSON/SVG reporting CLI
(``cli``).
"""

from . import analytic, analysis, circuit, estimate, fock
from .errors import DispersiveMZIError

__all__ = ["analytic", "analysis", "circuit", "estimate", "fock", "DispersiveMZIError"]
__version__ = "0.1.0"
