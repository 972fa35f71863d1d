#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = [
    'click', 'jinja2', 'networkx',
]

test_requirements = [
    'pytest', 'pytest-cov', 'pylint',
]

setup(
    name='comkit',
    version='0.1.0',
    description="Complexes of oriented matroids: axioms, minors, topes, amalgams and realizations",
    long_description=readme + '\n\n' + history,
    author="comkit developers",
    url='https://github.com/comkit/comkit',
    entry_points={
        'console_scripts': [
            'comkit=comkit.cli:main'
        ]
    },
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    install_requires=requirements,
    license="Apache Software License 2.0",
    zip_safe=False,
    keywords='oriented matroids, sign vectors, lopsided sets, combinatorics',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.6',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements
)
