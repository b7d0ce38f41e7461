# ===========================================
# Module: misc
# File: errors.py
# Package: PyTIX
# Description: Failure kinds raised by PyTIX
# ===========================================


class ConfigurationError( ValueError ):
    '''Invalid parameters, files or inconsistent options'''


class NonInvertibleSymbolError( ValueError ):
    '''The symbol vanishes (numerically) somewhere on the circle'''


class GaplessError( ValueError ):
    '''The chiral Hamiltonian has no spectral gap at zero'''


class CriticalPointError( ValueError ):
    '''The gradient of the defining function vanishes'''


class OffBoundaryError( ValueError ):
    '''A sample point does not lie on the boundary'''


class UnboundedDirectionError( ValueError ):
    '''A ray from the origin never leaves the domain'''


class NumericalQualityError( ArithmeticError ):
    '''A numerical quantity is not resolved well enough to be trusted'''


class GridTooCoarseError( NumericalQualityError ):
    '''Phase increments on the grid are too large to unwrap safely'''


class ResolutionError( NumericalQualityError ):
    '''Singular value gap or spectral window not resolved'''


class StabilityError( NumericalQualityError ):
    '''Result changes when the truncation size is doubled'''


class TheoremViolationError( AssertionError ):
    '''
    Independent computations of the same invariant disagree.
    The offending report is kept in the `report` attribute.
    '''
    def __init__( self, message, report=None ):
        AssertionError.__init__( self, message )
        self.report = report


def exit_code( exc ):
    '''Map a failure onto the process exit status used by the pytix script'''
    if exc is None: return 0
    if isinstance( exc, TheoremViolationError ): return 3
    if isinstance( exc, NumericalQualityError ): return 2
    if isinstance( exc, ( ConfigurationError, NonInvertibleSymbolError, GaplessError,
                          CriticalPointError, OffBoundaryError, UnboundedDirectionError,
                          ValueError, IOError ) ):
        return 1
    return 2
