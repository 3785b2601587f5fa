"""Build the optional compiled kernels.

The package works without them: ``hadamard_kit._backend`` falls back to the
pure-Python kernels when ``_ckernels`` cannot be imported. A missing Cython
or a failing compiler therefore only produces a warning here.
"""
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    import numpy as np
    from Cython.Build import cythonize
    CYTHON = True
except ImportError as err:
    print(f"hadamard_kit: building without compiled kernels ({err})", file=sys.stderr)
    CYTHON = False


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as err:
            print(f"hadamard_kit: compiled kernels skipped ({err})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as err:
            print(f"hadamard_kit: {ext.name} skipped ({err})", file=sys.stderr)


ext_modules = []
if CYTHON:
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "hadamard_kit._ckernels",
                ["src/hadamard_kit/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
