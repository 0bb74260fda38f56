import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in divgraph._kernels_py when the extension is absent.
# Set DIVGRAPH_PURE_BUILD=1 to skip compilation entirely.
ext_modules = []
if not os.environ.get("DIVGRAPH_PURE_BUILD"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "divgraph._kernels_c",
                    ["src/divgraph/_kernels_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
