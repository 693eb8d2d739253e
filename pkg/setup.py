"""Build the optional compiled kernel backend.

The package works without it (pure-Python kernels are selected at import
time when the extension is missing), so the extension is marked optional:
a toolchain failure degrades the install instead of breaking it.
"""

from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "fthbi._kernels",
        ["src/fthbi/_kernels.pyx"],
        # -ffp-contract=off: no fused multiply-add, so compiled arithmetic
        # matches the pure backend operation for operation
        extra_compile_args=["-O3", "-ffp-contract=off"],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
