"""Build script: compiles the optional fast-scan extension when Cython is available.

The package is pure Python apart from one hot loop (the machine-precision
Farey/character scan).  If Cython or a C compiler is missing the build still
succeeds and the package falls back to the Python implementation of the same
kernel.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "trigsum._fareyscan",
                ["src/trigsum/_fareyscan.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
