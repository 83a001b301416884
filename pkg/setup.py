"""Builds the optional compiled step kernel.

A missing compiler or Cython leaves the pure-Python path in place.
"""
from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernel not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} not built ({exc}); using pure Python")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/plcover/_kernel.pyx"], quiet=True)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
