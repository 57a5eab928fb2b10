import os

from setuptools import setup

# The compiled kernels are an optimization, never a requirement: every entry
# point falls back to permtop._kernels_py when the extension is absent.
# PERMTOP_NO_EXT=1 skips the build entirely (e.g. no C toolchain).
ext_modules = []
if os.environ.get("PERMTOP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/permtop/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
