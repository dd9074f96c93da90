"""Build script: compiles the optional distance-kernel extension.

The package works without the extension (a pure-Python fallback is
selected at import time), so any failure here degrades gracefully.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/drgspectra/graphs/_distkernel.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    import sys

    print(f"drgspectra: skipping compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
