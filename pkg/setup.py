"""Build script: compiles the optional bitset clique kernel.

The package works without the extension (a pure-Python kernel is used as
fallback), so any compilation failure is non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/zecomm/_miscore.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"skipping compiled kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
