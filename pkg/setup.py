from setuptools import Extension, setup

import numpy as np

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "casilamb.kernels._fastkern",
        ["src/casilamb/kernels/_fastkern.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        optional=True,  # pure-python fallback is selected at import if the build fails
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
