from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "margulis._margulis",
    sources=[
        "src/mobius.cpp",
        "src/halfspace.cpp",
        "src/bounds.cpp",
        "src/constants.cpp",
        "src/cases.cpp",
        "src/extremal.cpp",
        "src/report.cpp",
        "src/verify.cpp",
        "python/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
