"""Table algebra toolkit.

Wraps the compiled extension: algebra loading and validation, closed
subsets, double-coset quotients, complex character tables, character
products and the power-coverage checker.
"""

try:
    # installed wheel layout: the extension lives inside the package
    from ._tba import *  # noqa: F401,F403
    from . import _tba as _impl
except ImportError:
    # build-tree layout: the extension sits next to the package on the path
    from _tba import *  # noqa: F401,F403
    import _tba as _impl

__version__ = "1.0.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
