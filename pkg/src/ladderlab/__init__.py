"""Finite-window tools for ladders, accessible and walkable sets of integers."""

from .core import Certificate, Coloring, modular_coloring, product_coloring
from .errors import LadderLabError
from .ramsey import vdw_threshold, walk_threshold
from .setlang import SortedWindow, materialize, member, parse, render
from .verify import verify_certificate

__version__ = "0.1.0"

__all__ = [
    "Certificate", "Coloring", "LadderLabError", "SortedWindow", "materialize", "member",
    "modular_coloring", "parse", "product_coloring", "render", "vdw_threshold",
    "verify_certificate", "walk_threshold",
]
