"""Hopf Galois structures on separable field extensions."""

try:
    from ._hgkit import *  # noqa: F401,F403
    from ._hgkit import __version__  # noqa: F401
except ImportError:  # in-tree builds expose the extension directly
    from _hgkit import *  # noqa: F401,F403
    from _hgkit import __version__  # noqa: F401
