__all__ = [ 'fock_dimension', 'FockSpace', 'build_fock', 'CreationOperator', 'creation', 'annihilation',
            'check_toeplitz_relations', 'parseval_frame', 'check_frame_relations',
            'AutomorphismCorrespondence', 'module_power_action', 'identify', 'tensor_inner',
            'check_tensor_iso', 'pv_generator_check' ]

from .fockspace import fock_dimension, FockSpace, build_fock, CreationOperator, creation, annihilation, \
     check_toeplitz_relations, parseval_frame, check_frame_relations
from .pimsner import AutomorphismCorrespondence, module_power_action, identify, tensor_inner, \
     check_tensor_iso, pv_generator_check
