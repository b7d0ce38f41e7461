__all__ = [ 'DomainSpec', 'defining_function', 'unit_ball', 'egg_domain', 'hyperboloid', 'PRESETS',
            'load_domain', 'save_domain', 'wirtinger_gradient', 'levi_form', 'complex_tangent_basis',
            'restricted_levi_eigenvalues', 'LeviReport', 'verdict_for', 'strong_pseudoconvexity_check',
            'sample_boundary', 'STRONG', 'DEGENERATE', 'INDEFINITE' ]

from .domain import DomainSpec, defining_function, unit_ball, egg_domain, hyperboloid, PRESETS, load_domain, save_domain
from .levi import wirtinger_gradient, levi_form, complex_tangent_basis, restricted_levi_eigenvalues, LeviReport, \
     verdict_for, strong_pseudoconvexity_check, sample_boundary, STRONG, DEGENERATE, INDEFINITE
