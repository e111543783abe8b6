"""Exact jet-space calculus for PDE symmetry analysis.

Thin Python layer over the C++ core: parsing and canonical arithmetic of
differential polynomials, total derivatives, prolongation and reduction,
universal linearization with its formal adjoint, symmetry and
conservation-law determining equations, Jacobi brackets, recursion
operators, and coverings with zero-curvature checks.
"""

try:
    from ._jetcalc import *  # noqa: F401,F403
    from ._jetcalc import __version__  # noqa: F401
except ImportError:  # in-tree CMake builds leave _jetcalc on sys.path
    from _jetcalc import *  # noqa: F401,F403
    from _jetcalc import __version__  # noqa: F401
