"""hopfoid: exact differential-module and Hopf-algebroid toolkit."""

__version__ = "0.1.0"

from ._kernels import BACKEND  # noqa: E402  "cython" or "python"

__all__ = ["BACKEND", "__version__"]
