"""Exact generalized Turan computations: copy counting, isomorph-free
enumeration, and executable extremal-graph procedures."""

try:
    from ._turanlab import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: module sits next to the package on sys.path
    from _turanlab import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
