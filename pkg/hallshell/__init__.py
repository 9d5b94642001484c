"""
HallShell - Hall's marriage condition, shellable families, configurations
of surjective words and hook families of skew shapes.
"""

from .errors import HallShellError, InvalidInputError, EmptyMemberError, HypothesisError, OracleLimitError
from .family import (
    SetFamily, Transversal, AugmentingMatcher,
    satisfies_marriage_condition, marriage_condition_by_subsets,
    find_transversal, all_transversals, count_transversals, is_critical_block
)
from .words import (
    Configuration, SurjectiveWord, f0, f1, constant_configuration,
    satisfies, configuration_of, reverse_word, surjections
)
from .shelling import (
    ShellingOrder, verify_shelling_order, shelling_order, shelling_order_exhaustive,
    is_shellable, unique_element_set, has_unique_transversal,
    shelling_order_from_witness, reverse_order
)
from .configs import (
    enumerate_configurations, configuration_count, count_satisfying, count_by_configuration,
    m_range, search_word, solve, nice_permutation, has_nice_permutation
)
from .shapes import (
    SkewShape, Tableau, conjugate, partitions, skew_shapes, hook, hook_length, hook_family,
    inner_corners, outer_corner_cells, corner_peeling_order, balanced_configuration,
    is_generalized_standard, is_generalized_semistandard, is_standard, is_balanced,
    tableau_satisfies, count_standard, count_balanced, hook_length_formula
)
from .counting import (
    stirling2, stirling2_explicit, surjection_count, average_formula, average_bruteforce,
    average_closed_form, tail_bound_holds, fraction_to_dict, fraction_from_dict
)
from .report import Report, error_report
from .run_logger import RunLogger, log_run
from .verify import SUITES, run_suite

__all__ = [
    'HallShellError',
    'InvalidInputError',
    'EmptyMemberError',
    'HypothesisError',
    'OracleLimitError',
    'SetFamily',
    'Transversal',
    'AugmentingMatcher',
    'satisfies_marriage_condition',
    'marriage_condition_by_subsets',
    'find_transversal',
    'all_transversals',
    'count_transversals',
    'is_critical_block',
    'Configuration',
    'SurjectiveWord',
    'f0',
    'f1',
    'constant_configuration',
    'satisfies',
    'configuration_of',
    'reverse_word',
    'surjections',
    'ShellingOrder',
    'verify_shelling_order',
    'shelling_order',
    'shelling_order_exhaustive',
    'is_shellable',
    'unique_element_set',
    'has_unique_transversal',
    'shelling_order_from_witness',
    'reverse_order',
    'enumerate_configurations',
    'configuration_count',
    'count_satisfying',
    'count_by_configuration',
    'm_range',
    'search_word',
    'solve',
    'nice_permutation',
    'has_nice_permutation',
    'SkewShape',
    'Tableau',
    'conjugate',
    'partitions',
    'skew_shapes',
    'hook',
    'hook_length',
    'hook_family',
    'inner_corners',
    'outer_corner_cells',
    'corner_peeling_order',
    'balanced_configuration',
    'is_generalized_standard',
    'is_generalized_semistandard',
    'is_standard',
    'is_balanced',
    'tableau_satisfies',
    'count_standard',
    'count_balanced',
    'hook_length_formula',
    'stirling2',
    'stirling2_explicit',
    'surjection_count',
    'average_formula',
    'average_bruteforce',
    'average_closed_form',
    'tail_bound_holds',
    'fraction_to_dict',
    'fraction_from_dict',
    'Report',
    'error_report',
    'RunLogger',
    'log_run',
    'SUITES',
    'run_suite',
]

__version__ = '1.0.0'
