"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so a missing compiler or Cython only costs speed.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "prismatoids._speedups",
        ["src/prismatoids/_speedups.pyx"],
        extra_compile_args=["-fopenmp", "-O2"],
        extra_link_args=["-fopenmp"],
    )
    try:
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
    except Exception:
        ext.extra_compile_args = ["-O2"]
        ext.extra_link_args = []
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except Exception as exc:  # pragma: no cover
    sys.stderr.write(f"warning: building without compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
