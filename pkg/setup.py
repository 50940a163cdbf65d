"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so a missing compiler or a failed
build must never break installation.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to the pure-Python kernel on any failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            warnings.warn(f"compiled kernel skipped ({exc}); "
                          "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "falling back to the pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; building without the compiled kernel")
        return []
    ext = Extension(
        "swarmclique._kernel",
        sources=["src/swarmclique/_kernel.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level="3")


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
