"""Controlled direct communication over a W-class state with a symmetric cloner."""

__version__ = "0.1.0"
