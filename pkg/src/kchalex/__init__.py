"""Alexander polynomials from knot contact homology data, in exact arithmetic."""

__version__ = "0.1.0"
