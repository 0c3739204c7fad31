#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


def readme():
    with open('README.rst') as f:
        return f.read()


INSTALL_REQUIRES = [
    'numpy',
    'pandas',
    'sympy>=1.13',
]

TESTS_REQUIRE = [
    'pytest',
    'hypothesis',
]

setup(
    name='lie-sdit',
    version='0.1.0',
    description="Exact singularity testing, shrunk subspaces and kernel "
                "certificates for matrix Lie algebras",
    long_description=readme(),
    license='BSD License',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='lie algebra matrix space singularity cartan',
    python_requires='>=3.8',
    install_requires=INSTALL_REQUIRES,
    extras_require={'test': TESTS_REQUIRE},
    entry_points={
        'console_scripts': ['lie-sdit=lie_sdit.cli:main'],
    },
    packages=find_packages(exclude=['contrib', 'docs', 'tests*',
                                    'examples*']),
    test_suite='lie_sdit.tests',
)
