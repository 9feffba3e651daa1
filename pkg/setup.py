from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "legbounds._ckernels",
                ["src/legbounds/_ckernels.pyx"],
                # -ffp-contract=off: no FMA contraction, so the compiled
                # kernels stay bit-identical to the numpy fallback
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
