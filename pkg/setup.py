import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

EXT_SPECS = {"graphstirling._kernels._ckernels": "src/graphstirling/_kernels/_ckernels.pyx"}


def _extensions():
    if cythonize is None or os.environ.get("GRAPHSTIRLING_NO_EXT"):
        return []
    exts = [Extension(name, [path], extra_compile_args=["-O3"]) for name, path in EXT_SPECS.items()]
    return cythonize(exts, compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
