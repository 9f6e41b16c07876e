"""Build script: compiles the optional exact-linalg speedup extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so the
extension is marked optional and any compiler failure is non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "lieyam._kernels._speed",
                ["src/lieyam/_kernels/_speed.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
