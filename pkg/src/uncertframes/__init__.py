"""Uncertainty principles for p-Schauder frames at finite dimension."""

__version__ = "0.1.0"
