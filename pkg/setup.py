from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install still works; the scan module falls back at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "c4quartic._scan",
                ["src/c4quartic/_scan.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
