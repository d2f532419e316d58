"""Numerical toolkit for starlike functions whose ``zf'/f`` lies in a vertical strip."""

__version__ = "0.1.0"
