"""Build hook: compile the optional fast kernels when Cython is available.

The package is fully functional without the extension; ``germtools._impl``
falls back to the pure-Python kernels at import time.  Set GERMTOOLS_NO_EXT=1
to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("GERMTOOLS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/germtools/_kernels.pyx"], language_level=3, quiet=True
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
