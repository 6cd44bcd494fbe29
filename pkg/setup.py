from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The reachability kernel is an optional fast path; vplogic._kernel falls
# back to the pure-Python implementation when the extension is absent.
extensions = [
    Extension(
        "vplogic._kernel._reach",
        ["src/vplogic/_kernel/_reach.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize
    else []
)
