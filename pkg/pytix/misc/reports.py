# =========================================
# Module: misc
# File: reports.py
# Package: PyTIX
# Description: Relation reports and writers
# =========================================

import csv
import io
import json
import sys
from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class RelationReport:
    '''Outcome of checking an operator identity numerically'''
    check: str
    max_residual: float
    tolerance: float

    @property
    def passed( self ):
        return self.max_residual <= self.tolerance

    def ToDict( self ):
        return { 'check': self.check, 'max_residual': float( self.max_residual ),
                 'tolerance': float( self.tolerance ), 'pass': bool( self.passed ) }


def _plain( value ):
    '''Turn numpy scalars into plain python values; non finite floats become None'''
    if isinstance( value, ( np.bool_, bool ) ): return bool( value )
    if isinstance( value, ( np.integer, ) ): return int( value )
    if isinstance( value, ( np.floating, float ) ):
        value = float( value )
        return value if np.isfinite( value ) else None
    if isinstance( value, dict ): return { k: _plain( v ) for k, v in value.items() }
    if isinstance( value, ( list, tuple ) ): return [ _plain( v ) for v in value ]
    return value


def to_json( payload ):
    '''Deterministic JSON text (insertion ordered keys, fixed indentation)'''
    return json.dumps( _plain( payload ), indent=2 ) + '\n'


def to_csv( rows, fields ):
    '''CSV text with a header row; missing entries are left blank'''
    buff = io.StringIO()
    writer = csv.DictWriter( buff, fieldnames=list( fields ), extrasaction='ignore', lineterminator='\n' )
    writer.writeheader()
    for row in rows:
        writer.writerow( { k: ( '' if v is None else v ) for k, v in _plain( dict( row ) ).items() } )
    return buff.getvalue()


def emit( payload, fmt='json', out=None, fields=None ):
    '''
    Write a report to file or stdout

    Arguments
    ---------
    payload       dict (single report) or list of dicts
    fmt           'json' or 'csv'
    out           output file name (stdout if None)
    fields        csv column order (defaults to the keys of the first row)
    '''
    if fmt == 'json':
        text = to_json( payload )
    elif fmt == 'csv':
        rows = payload if isinstance( payload, list ) else [ payload ]
        if fields is None: fields = list( rows[0].keys() ) if rows else []
        text = to_csv( rows, fields )
    else:
        raise ValueError( 'unknown output format "%s"' % fmt )
    if out is None:
        sys.stdout.write( text )
    else:
        with open( out, 'w' ) as f: f.write( text )
    return text
