#!/usr/bin/env python3

from setuptools import setup, find_packages

DESCRIPTION = open("README.rst", encoding="utf-8").read()

CLASSIFIERS = '''\
Intended Audience :: Science/Research
Intended Audience :: Telecommunications Industry
License :: OSI Approved
Operating System :: POSIX
Operating System :: Unix
Programming Language :: Python
Programming Language :: Python :: 3
Programming Language :: Python :: 3 :: Only
Topic :: Scientific/Engineering
Topic :: Scientific/Engineering :: Mathematics'''

setup(
    name="mobicell",
    version="0.1.dev1",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=["numpy", "scipy", "pydantic>=2", "tqdm"],
    tests_require=["pytest"],
    entry_points={
        "console_scripts": ["mobicell = mobicell.cli:main"],
    },

    # metadata for upload to PyPI
    description='Mobile-cell resource sharing simulator and analytic '
                'evaluator.',
    long_description=DESCRIPTION,
    classifiers=CLASSIFIERS.split('\n'),
    platforms=["Windows", "Linux", "Mac OS-X", "Unix"],
    license="MIT",
)
