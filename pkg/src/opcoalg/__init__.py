"""Operadic coalgebras in finite semicartesian categories, checked exhaustively at desk scale."""
from .errors import (BoundError, BudgetError, LiftFailure, OpcoalgError, StructuralError, UnsupportedStructure,
                     ValidationError)
from .report import Report

__version__ = "0.1.0"

__all__ = ["BoundError", "BudgetError", "LiftFailure", "OpcoalgError", "Report", "StructuralError",
           "UnsupportedStructure", "ValidationError"]
