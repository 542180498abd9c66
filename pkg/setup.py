from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package falls back to the pure-Python implementations at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("pathcong._kernels._ckern", ["src/pathcong/_kernels/_ckern.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
