__all__ = [ 'PhaseIncrements', 'PhaseWinding', 'RoundInteger', 'MaxResidual', 'Substream', 'ParseFloatList',
            'RelationReport', 'to_json', 'to_csv', 'emit', 'exit_code' ]

from .misc import PhaseIncrements, PhaseWinding, RoundInteger, MaxResidual, Substream, ParseFloatList
from .reports import RelationReport, to_json, to_csv, emit
from .errors import *
from .errors import exit_code
