#!/usr/bin/env python

# .:==============:.
# .:    PyTIX     :.
# .: -------------:.
# .: Setup Script :.
# .:==============:.

# Python - Toeplitz IndeX laboratory

from setuptools import setup
import platform

pytix_script = 'pytix/bin/pytix'

# Proper Windows installation
if platform.system() == 'Windows':
    import shutil
    pytix_win_script = 'pytix/bin/pytixw.py'
    shutil.copyfile(pytix_script, pytix_win_script)
    pytix_script = pytix_win_script

description = 'PyTIX :: Python - Toeplitz IndeX laboratory'
long_description = '\n'.join((
    description,
    '''

    Winding numbers and Fredholm indices of Toeplitz operators computed by
    independent algorithms, bulk and edge invariants of the SSH chain,
    truncated Fock space relations and Levi form checks of pseudoconvexity.

    Requires: NumPy, SciPy (tests: pytest)

    '''
))

setup(
    name = 'pytix',
    version = '1.0',
    description = description,
    long_description = long_description,
    python_requires = '>=3.8',
    install_requires = [ 'numpy', 'scipy' ],
    extras_require = { 'tests': [ 'pytest' ] },
    packages = [ 'pytix', 'pytix.config', 'pytix.misc', 'pytix.symbols', 'pytix.toeplitz',
                 'pytix.ssh', 'pytix.fock', 'pytix.levi' ],
    scripts = [pytix_script],

)
