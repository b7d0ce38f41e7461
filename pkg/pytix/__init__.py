# -*- coding: utf-8 -*-
# ===================================================================================
#
# Package: PyTIX
# Date: 2026
# Description: A numerical laboratory for Toeplitz index theory and the
#              bulk-edge correspondence
#
# ===================================================================================

'''
PyTIX :: Python - Toeplitz IndeX laboratory
===========================================
'''

__version__ = '1.0'
__year__ = '2026'

__all__ = [
    # modules
    'config', 'misc', 'symbols', 'toeplitz', 'ssh', 'fock', 'levi',
    # pkg data
    '__version__', '__year__',
    # config
    'default_config', 'create_cfg_file', 'get_cfg', 'set_cfg',
    # symbols
    'LaurentSymbol', 'CircleGrid', 'evaluate', 'derivative', 'invert_symbol', 'min_modulus',
    'winding_argument_principle', 'winding_logderivative', 'load_symbol', 'save_symbol',
    # toeplitz
    'build_truncation', 'numerical_kernel_dim', 'fredholm_index_svd', 'fredholm_index_fedosov',
    'verify_index_theorem', 'semicommutator_defect', 'shift_relations',
    # ssh
    'SSHParams', 'bloch_hamiltonian', 'spectral_gap', 'flat_band', 'fermi_unitary', 'chern_number',
    'edge_hamiltonian', 'edge_invariant', 'bulk_edge_sweep',
    # fock
    'build_fock', 'creation', 'check_toeplitz_relations', 'AutomorphismCorrespondence',
    'module_power_action', 'check_tensor_iso', 'pv_generator_check',
    # levi
    'DomainSpec', 'wirtinger_gradient', 'levi_form', 'complex_tangent_basis',
    'strong_pseudoconvexity_check', 'sample_boundary',
    ]

from .config import *
from .symbols import *
from .toeplitz import *
from .ssh import *
from .fock import *
from .levi import *
