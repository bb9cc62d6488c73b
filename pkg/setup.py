from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The pure-Python backend is selected at import time when the
    # extension is absent, so a Cython-less build still works.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "softsets._kernels_cy",
                sources=["src/softsets/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
