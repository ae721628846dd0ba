"""Exact engine for Z2-graded algebras with a nilpotent odd parameter.

The package ships the rule systems of an h-deformed quantum supergroup
(coordinate algebra, differential calculus, one-forms, derivatives), a
rewriting engine that normalizes words over them, and verification suites
that replay every relation, co-structure map, and derivation property and
report the outcome check by check.
"""

from .core import EVEN, ODD, Element, Generator, GeneratorTable
from .parser import Resolver, parse
from .presentations import composite, presentation, relation_catalog, resolver_for
from .printer import element_str
from .rewrite import RuleSet, critical_pairs, localize, normalize, strip_h, verify_zero
from .report import SuiteBuilder, SuiteReport
from .suites import SUITE_NAMES, SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "EVEN",
    "ODD",
    "Element",
    "Generator",
    "GeneratorTable",
    "Resolver",
    "RuleSet",
    "SUITES",
    "SUITE_NAMES",
    "SuiteBuilder",
    "SuiteReport",
    "composite",
    "critical_pairs",
    "element_str",
    "localize",
    "normalize",
    "parse",
    "presentation",
    "relation_catalog",
    "resolver_for",
    "run_suite",
    "strip_h",
    "verify_zero",
    "__version__",
]
