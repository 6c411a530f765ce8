"""Build script: compiles the optional kernel extension.

The extension is marked optional -- if the C toolchain or Cython is
unavailable the install still succeeds and the package falls back to the
pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qgenocchi._kernel_c",
                ["src/qgenocchi/_kernel_c.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
