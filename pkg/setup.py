"""setup script for GraphILBO.

This uses setuptools which is now the standard python mechanism for
installing packages. If you have downloaded and uncompressed the
GraphILBO source code, or fetched it from git, for the simplest
installation just type the command:

    pip install .

The command line tool `graphilbo` is installed with the package. Test
dependencies are installed with:

    pip install .[test]
"""

import os
import re

from setuptools import find_packages, setup

PYPATH = os.path.dirname(os.path.realpath(__file__))


def get_required_packages(requirements_file: str = 'requirements.txt'):
    """Load requirements list, skipping comments and the test section.

    Returns:
        required_packages (list)
    """
    required_packages = []
    with open(os.path.join(PYPATH, requirements_file)) as req:
        for package in req.readlines():
            package = package.strip()
            if package.startswith('# test'):
                break
            if package and (not package.startswith('#')):
                required_packages.append(package)
    return required_packages


def get_version():
    """Read __version__ without importing the package."""
    with open(os.path.join(PYPATH, 'GraphILBO', '__init__.py')) as init:
        return re.search(r"__version__ = '([^']+)'", init.read()).group(1)


setup(
    name='graphilbo',
    version=get_version(),
    description='Self-supervised graph contrastive learning with '
                'similarity-guided pair selection.',
    long_description=open(os.path.join(PYPATH, 'README.rst')).read(),
    long_description_content_type='text/x-rst',
    packages=find_packages(exclude=('tests', 'tests.*', 'tools', 'tools.*')),
    py_modules=['graphilbo'],
    python_requires='>=3.9',
    install_requires=get_required_packages(),
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['graphilbo = graphilbo:main']},
    license='GPL-3.0',
    classifiers=[
        'Programming Language :: Python :: 3',
        'Operating System :: POSIX :: Linux',
        'Operating System :: MacOS',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
    ],
)
