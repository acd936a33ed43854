"""Build script for the optional compiled kernel core.

The extension accelerates the scalar series kernels.  If Cython or a C
compiler is unavailable the build degrades to the pure-Python backend,
which implements the same algorithms.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    # A failed compile must not fail the install; the package selects the
    # pure-Python backend at import when the extension is missing.
    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: compiled kernels skipped ({exc}); using pure-Python backend")


if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "ringcorr._kernels_cy",
                ["src/ringcorr/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
