from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("onlinesearch._kernels", ["src/onlinesearch/_kernels.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level="3"))
