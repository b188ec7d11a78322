"""Build script: compiles the optional Cython scoring kernel.

The package works without the extension (a NumPy fallback is selected at
import time), so any build failure here downgrades to a pure-Python install
instead of aborting.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    if os.environ.get("PUNKIT_PURE"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        print("punkit: Cython/numpy unavailable at build time; "
              "installing without the compiled kernel", file=sys.stderr)
        return []
    ext = Extension(
        "punkit._distkernel",
        sources=["src/punkit/_distkernel.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


class optional_build_ext(build_ext):
    """Best-effort extension build; failures fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"punkit: compiled kernel skipped ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"punkit: building {ext.name} failed ({exc}); "
                  "falling back to the NumPy kernel", file=sys.stderr)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
