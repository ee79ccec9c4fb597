from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [Extension(
            "a1weyl._kernels",
            ["src/a1weyl/_kernels.pyx"],
            language="c++",
            extra_compile_args=["-O3"],
            # a failed build leaves the pure-Python kernels in charge
            optional=True,
        )],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
