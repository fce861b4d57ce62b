"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python twin of
the kernels is selected at import time); set BWDECAY_PURE=1 to skip the build
on machines without a C toolchain.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BWDECAY_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("bwdecay._kernels", ["src/bwdecay/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
