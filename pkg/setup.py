"""Build the optional compiled GF(p) kernels; the package works without them."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("heisurf._ckernels", ["src/heisurf/_ckernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except Exception as exc:  # no Cython or no compiler: pure-Python fallback
    print(f"heisurf: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
