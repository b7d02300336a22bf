"""Build shim: compiles the optional C extension holding the hot kernels.

The package works without the extension (pure-Python kernels are selected at
import time), so build failures here should not block installation from source
on exotic platforms; delete the ext_modules line if the toolchain is missing.
"""

from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "qspectral.kernels._ckernels",
        ["src/qspectral/kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
