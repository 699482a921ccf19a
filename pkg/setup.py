from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("scoutstr._kernels", ["src/scoutstr/_kernels.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # Pure-Python fallback kernels are used when the extension is absent.
    ext_modules = []

setup(ext_modules=ext_modules)
