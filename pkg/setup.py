from setuptools import Extension, setup

from Cython.Build import cythonize

extensions = cythonize(
    [Extension("hyperlah._speedups", ["src/hyperlah/_speedups.pyx"])],
    compiler_directives={"language_level": "3"},
)
# The package falls back to hyperlah._pure at import time, so a failed
# compile should not abort the install.
for ext in extensions:
    ext.optional = True

setup(ext_modules=extensions)
