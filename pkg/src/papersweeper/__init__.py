"""Pen-and-paper minesweeper toolkit: generate, solve, verify, analyze."""

__version__ = "0.1.0"
