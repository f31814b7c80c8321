"""Exact Casson-type invariants of homology spheres, mapping tori and homology tori.

Seifert matrices are lists of integer rows; rational results are
``fractions.Fraction`` values.
"""

from ._casson import *  # noqa: F401,F403
from ._casson import CassonError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
