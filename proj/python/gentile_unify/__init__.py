"""Python interface to the gentile_unify C++ core.

Exposes the special functions, equilibrium observables, unification
solvers, and transfer analysis from the compiled ``_core`` extension.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc
except ImportError:  # extension built out-of-tree (e.g. ctest PYTHONPATH)
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = (__doc__ or "") + "\n\n" + (_core_doc or "")
