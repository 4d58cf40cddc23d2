"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure Python fallback is selected at
import time), so the build is marked optional: a missing C compiler degrades
to a slower install instead of a failed one.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "rfidsim._kernels",
        ["src/rfidsim/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
