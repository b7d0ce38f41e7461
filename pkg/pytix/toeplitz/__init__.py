__all__ = [ 'toeplitz_section', 'ToeplitzTruncation', 'build_truncation', 'numerical_kernel_dim',
            'DefectReport', 'semicommutator_defect', 'commutator_defect', 'shift_relations',
            'IndexReport', 'fredholm_index_svd', 'fredholm_index_fedosov', 'verify_index_theorem', 'verify_batch' ]

from .truncation import toeplitz_section, ToeplitzTruncation, build_truncation, numerical_kernel_dim, \
     DefectReport, semicommutator_defect, commutator_defect, shift_relations
from .index import IndexReport, fredholm_index_svd, fredholm_index_fedosov, verify_index_theorem, verify_batch
