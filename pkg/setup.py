from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: the package runs on the numpy fallback kernel
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "relsteer._kernels",
                ["src/relsteer/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
