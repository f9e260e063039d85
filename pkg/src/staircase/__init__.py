"""Exact computations for monomial schemes in the plane: interpolation
slopes, destabilizing walls, decomposition trees, duals, and resolutions."""

__version__ = "0.1.0"
