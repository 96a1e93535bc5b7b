from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "twobytwo.kernels._gridkernel",
                ["src/twobytwo/kernels/_gridkernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: the pure-Python kernel twin is selected at import time.
    extensions = []

setup(ext_modules=extensions)
