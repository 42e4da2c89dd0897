from setuptools import Extension, setup

# The compiled kernel is optional: if Cython or a C compiler is missing the
# build still succeeds and the package falls back to the pure-Python path.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "wproj._kernels_cy",
                sources=["src/wproj/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
