"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (satgenus.kernels
falls back to the pure-Python twins), so the extension is marked optional
and any build failure is nonfatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext = Extension("satgenus._ckernels", ["src/satgenus/_ckernels.pyx"])
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
