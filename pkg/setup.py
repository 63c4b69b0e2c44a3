"""Build script: compiles the optional speedup extension, degrading to pure Python."""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if a toolchain is available, otherwise skip it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler / headers
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: building homrecol._speedups failed ({exc}); "
              "falling back to the pure-Python kernels")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("homrecol._speedups", ["src/homrecol/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
