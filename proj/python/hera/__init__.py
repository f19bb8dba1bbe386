"""Secure distributed matrix multiplication over one-point Hermitian codes."""

try:
    from hera._hera import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _hera import *  # noqa: F401,F403  (in-tree build with PYTHONPATH)
