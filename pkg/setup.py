"""Build script: compiles the optional _core speedup extension when Cython and a
C compiler are available, and falls back to the pure-Python kernels otherwise."""
import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """A build_ext that downgrades compilation failure to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        sys.stderr.write(
            "warning: octell._core failed to build (%s); "
            "installing with pure-Python kernels only\n" % exc
        )


def extensions():
    if os.environ.get("OCTELL_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("warning: Cython not found; skipping octell._core\n")
        return []
    ext = Extension("octell._core", sources=["src/octell/_core.pyx"])
    return cythonize(
        [ext],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
