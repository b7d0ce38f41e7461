__all__ = [ 'SSHParams', 'BlochMatrix', 'SpectralData', 'chiral_operator', 'diagonalize', 'bloch_hamiltonian',
            'periodic_hamiltonian', 'spectral_gap', 'flat_band', 'fermi_projection', 'fermi_unitary', 'chern_number',
            'edge_hamiltonian', 'edge_spectrum', 'edge_trace', 'edge_invariant',
            'InvariantReport', 'invariant_point', 'bulk_edge_sweep', 'CSV_FIELDS' ]

from .bulk import SSHParams, BlochMatrix, SpectralData, chiral_operator, diagonalize, bloch_hamiltonian, \
     periodic_hamiltonian, spectral_gap, flat_band, fermi_projection, fermi_unitary, chern_number
from .edge import edge_hamiltonian, edge_spectrum, edge_trace, edge_invariant
from .sweep import InvariantReport, invariant_point, bulk_edge_sweep, CSV_FIELDS
