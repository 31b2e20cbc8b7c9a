"""Minimal free resolutions of two-row Specht ideals, built and checked exactly."""

from .combinatorics import dim_specht, enumerate_syt, hook_shape
from .resolution import ChainComplex, build_complex, module_specs

__all__ = ["ChainComplex", "build_complex", "dim_specht", "enumerate_syt", "hook_shape", "module_specs"]
__version__ = "0.1.0"
