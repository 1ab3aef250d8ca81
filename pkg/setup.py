"""Builds the optional compiled valuation kernel.

The package works without it (a pure-Python twin is selected at import);
when Cython and a C compiler are available the hot validity scans run
through ipckit._fastval instead.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ipckit._fastval", ["src/ipckit/_fastval.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
