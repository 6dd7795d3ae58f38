import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RTIDNC_PURE"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "rtidnc._kernel",
                    ["src/rtidnc/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install pure Python only, the scan falls back at import.
        ext_modules = []

setup(ext_modules=ext_modules)
