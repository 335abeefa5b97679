import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SIGNSYM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext = Extension("signsym._scan_cy", ["src/signsym/_scan_cy.pyx"])
        # The package falls back to the pure-Python kernels at import time,
        # so a failed compile must not abort the install.
        ext.optional = True
        ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
