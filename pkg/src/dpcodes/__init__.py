"""Diameter-perfect constant-weight codes: constructions, certification,
exhaustive search, and feasibility bounds."""

__version__ = "0.1.0"

from .errors import CodeError  # noqa: F401
from .report import Check, VerificationReport  # noqa: F401
from .space import Anticode, Code  # noqa: F401

__all__ = ["Anticode", "Check", "Code", "CodeError", "VerificationReport", "__version__"]
