from setuptools import Extension, setup

# The compiled elimination kernel is optional: without Cython the package
# falls back to the pure-Python kernel selected at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("moddef._kernel_c", ["src/moddef/_kernel.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
