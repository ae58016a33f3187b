from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Source install without Cython: the pure-Python kernels take over.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("powspec._kernels_cy", ["src/powspec/_kernels_cy.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
