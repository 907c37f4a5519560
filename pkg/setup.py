from setuptools import setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        "src/borsukgraph/prover/_fastlp.pyx",
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    ),
)
