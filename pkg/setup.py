import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FLAGSERIES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "flagseries.kernels._speedups",
                    ["src/flagseries/kernels/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python kernels are selected at import time when the
        # extension is unavailable.
        ext_modules = []

setup(ext_modules=ext_modules)
