"""Ideal structure and terminal spaces of finite commutative monoids."""
from .corpus import FamilySpec, enumerate_commutative_monoids, make_family
from .formats import analyze, export_dot, format_monoid, parse_monoid_file, report_document
from .ideals import (Ideal, IdealClassification, IdealLattice, arithmetic_check, classify_ideal,
                     enumerate_ideals, generated_ideal, is_ideal, lattice_analysis, product_ideal,
                     radical)
from .monoid import (ElementSet, FiniteMonoid, evaluate, is_isomorphic, nonunits, power,
                     set_product, units, validate_monoid)
from .topology import (SearchConfig, TerminalSpace, build_terminal_space, closure_class_check,
                       compactness_witness, density_check, enumerate_closed_sets, hk_closure, hull,
                       invertibility_check, irreducible_closed_analysis, irreducible_components,
                       kernel, noetherian_check, radicals, separation_check, verify_kuratowski)
from .verifier import VerificationReport, run_all

__all__ = [
    "FamilySpec", "enumerate_commutative_monoids", "make_family", "analyze", "export_dot",
    "format_monoid", "parse_monoid_file", "report_document", "Ideal", "IdealClassification",
    "IdealLattice", "arithmetic_check", "classify_ideal", "enumerate_ideals",
    "generated_ideal", "is_ideal", "lattice_analysis", "product_ideal", "radical",
    "ElementSet", "FiniteMonoid", "evaluate", "is_isomorphic", "nonunits", "power",
    "set_product", "units", "validate_monoid", "SearchConfig", "TerminalSpace",
    "build_terminal_space", "closure_class_check", "compactness_witness", "density_check",
    "enumerate_closed_sets", "hk_closure", "hull", "invertibility_check",
    "irreducible_closed_analysis", "irreducible_components", "kernel", "noetherian_check",
    "radicals", "separation_check", "verify_kuratowski", "VerificationReport", "run_all",
]

__version__ = "0.1.0"
