#!/usr/bin/env python
# -*- encoding: utf-8 -*-
"""
    LevyFock: Lévy processes, cocycles and Fock space

    Setup.py

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module sets up the LevyFock package and installs the
    'levyfock' command-line utility.

    This package requires Python >= 3.8.

"""

import io
import re
import sys

from os.path import dirname, join

from setuptools import find_packages  # type: ignore
from setuptools import setup  # type: ignore


if sys.version_info < (3, 8):
    print("LevyFock requires Python >= 3.8")
    sys.exit(1)


def read(*names: str, **kwargs: str):
    try:
        return io.open(
            join(dirname(__file__), *names),
            encoding=kwargs.get("encoding", "utf8")
        ).read()
    except (IOError, OSError):
        return ""

# Load version string from file
__version__ = "[missing]"
exec(open(join("src", "levy_fock", "version.py")).read())

setup(
    name="levy-fock",
    version=__version__,
    license="MIT",
    description="Lévy triplets, positive definite functions, cocycles and Fock space embeddings",
    long_description=re
        .compile("^.. start-badges.*^.. end-badges", re.M | re.S)
        .sub("", read("README.rst")),
    author="LevyFock developers",
    packages=find_packages("src"),
    package_dir={"": "src"},
    package_data={
        "levy_fock": ["py.typed", "config/*.conf", "resources/*.json"],
    },
    include_package_data=True,
    zip_safe=False,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=["levy process", "infinite divisibility", "positive definite", "fock space"],
    setup_requires=[],
    install_requires=["numpy>=1.22", "scipy>=1.7", "typing_extensions"],
    extras_require={"dev": ["pytest"]},
    # Set up a 'levyfock' command ('levyfock.exe' on Windows),
    # which calls main() in src/levy_fock/main.py
    entry_points={
        'console_scripts': [
            'levyfock=levy_fock.main:main',
        ],
    },
)
