"""Growth of difference quotients and logarithmic derivatives.

Thin wrapper over the C++ core: function models from spec strings, growth
functionals (maximal term, central index, order estimation), Nevanlinna
functionals, difference operators, Newton-Puiseux diagrams and the
verification experiments E1..E5.
"""

try:
    from ._nevdiff import *  # noqa: F401,F403  (installed layout)
    from ._nevdiff import __doc__ as _core_doc  # noqa: F401
except ImportError:
    from _nevdiff import *  # noqa: F401,F403  (in-tree build layout)

__version__ = "0.1.0"
