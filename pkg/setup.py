"""Build script: compiles the optional quadrature kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a missing Cython toolchain only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fracquat._kernels_c",
                ["src/fracquat/_kernels_c.pyx"],
                extra_compile_args=["-O3", "-ffast-math"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
