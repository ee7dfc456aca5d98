"""Build hook for the optional compiled kernels.

The extension is best-effort: if Cython or a C compiler is missing the
package still installs and falls back to the pure-Python kernels.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("hopfoid._kernels._ckernels", ["src/hopfoid/_kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except Exception:  # pragma: no cover - build environment dependent
    ext_modules = []

setup(ext_modules=ext_modules)
