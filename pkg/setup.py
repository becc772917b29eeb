from setuptools import Extension, setup

# The compiled kernels are optional: when Cython (or a C compiler) is not
# available the package falls back to the pure-numpy implementation at
# import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("seqss._kernels_cy", ["src/seqss/_kernels_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
