"""Build the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so the build is marked optional: a missing compiler degrades
to a warning, not a failure.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qprep3._kernels_c",
                sources=["src/qprep3/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
