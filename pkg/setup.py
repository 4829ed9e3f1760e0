"""Build hook for the optional compiled kernels.

The extension is a convenience: when Cython or a C compiler is missing the
install still succeeds and the package falls back to the pure-Python kernels
(see affgroth.qpoly).  Set AFFGROTH_NO_EXT=1 to skip the build outright.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            build_ext.run(self)
        except Exception as ex:
            print("affgroth: skipping compiled kernels (%s)" % ex)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as ex:
            print("affgroth: skipping %s (%s)" % (ext.name, ex))


ext_modules = []
if not os.environ.get("AFFGROTH_NO_EXT"):
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            ["src/affgroth/_qpoly_c.pyx"],
            language_level=3,
        )
    except ImportError:
        print("affgroth: Cython not available, using pure-Python kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
