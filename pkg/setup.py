"""Build script for the optional compiled kernel extension.

The package works without the extension: msetsig._kernels falls back to the
numpy implementation when the compiled module is absent, so the extension is
marked optional and a failed compile does not fail the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "msetsig._kernels._core",
        ["src/msetsig/_kernels/_core.pyx"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
