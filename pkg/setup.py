import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PERFDIV_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("perfdiv._kernels", ["src/perfdiv/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
