# -*- coding: utf-8 -*-
import os

from setuptools import setup
from kazcert import VERSION


with open(os.path.join(os.path.dirname(__file__), 'README.rst')) as r_file:
    readme = r_file.read()


setup(
    name='kazcert',
    version=VERSION,
    license='MIT',
    author='kazcert contributors',
    description='exact sum-of-squares certificates for Kazhdan property (T)',
    long_description=readme,
    packages=['kazcert', 'kazcert/backends'],
    test_suite='tests',
    install_requires=['networkx', 'numpy', 'scipy', 'sympy'],
    tests_require=['pytest'],
    include_package_data=True,
    data_files=[('/etc/kazcert', ['etc/kazcert.ini']), ],
    entry_points={
        'console_scripts': ['kazcert = kazcert.driver:main', ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
