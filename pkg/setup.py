import os

from setuptools import Extension, setup

# The compiled kernel is an optional accelerator: if Cython (or a C
# compiler) is unavailable the install falls back to the pure-Python
# backend selected at import time by idelink.kernel.
ext_modules = []
if os.environ.get("IDELINK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "idelink._kernel_c",
                    ["src/idelink/_kernel_c.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
