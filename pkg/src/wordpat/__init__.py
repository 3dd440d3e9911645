"""
Exact occurrence distributions of subword patterns in k-ary words.

Three independent engines compute the same numbers: exhaustive enumeration
(:mod:`wordpat.oracle`), a weighted window automaton (:mod:`wordpat.transfer`)
and closed-form generating functions (:mod:`wordpat.closedform`).
"""
from .algebra import XSeries, YPoly, binomial, series_div, series_inverse, series_mul, ypoly_mul
from .closedform import dispatch, identify_family
from .oracle import DistributionVector, GuardExceeded
from .pattern import (Pattern, complement, count_occurrences, enumerate_patterns, generate_td,
                      is_primitive, parse_pattern, reduce, reverse)

__version__ = "0.1.0"
