"""Render stability heatmaps and convergence plots from CSV tables.

This package performs no numerics of its own: it reads the documented CSV
schemas, draws with a headless matplotlib backend, and writes raster
images whose bytes depend only on the CSV content and flags.
"""

from .render import SchemaError, render_convergence, render_heatmap

__version__ = "0.1.0"
