"""Builds the neus._core extension through the project's CMake tree.

scikit-build-core is the nicer tool for this, but it is not available on
every index we deploy from, so a plain build_ext shim drives CMake instead.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = ext_fullpath.parent.resolve()
        cfg = "Debug" if int(os.environ.get("DEBUG", "0")) else "Release"

        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DNEUS_PY_OUTPUT_DIR={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DNEUS_BUILD_TESTS=OFF",
            "-DNEUS_BUILD_CLI=OFF",
        ]
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "neus_py"],
            cwd=build_temp,
            check=True,
        )


setup(
    packages=["neus"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("neus._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
