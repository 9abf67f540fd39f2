"""Cells, boundary operators and rational homology of M^comb_{g,1}."""

from ._mcomb import McombError, boundary, cells, homology, word_info

__all__ = ["McombError", "boundary", "cells", "homology", "word_info"]
