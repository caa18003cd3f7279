"""
golombz - modular Golomb rulers and the designs built from them.

Constructs, searches for, verifies and certifies the nonexistence of modular
Golomb rulers (Sidon sets in Z_v), and checks the related optical orthogonal
codes, cyclic Steiner 2-designs and relative difference families.

Key Features:
- Ruler verification, difference profiles, canonical forms, doubling embeds
- Singer, Bose and Ruzsa constructions over GF(p^m)
- Exhaustive backtracking search with a parallel fan-out and node budgets
- Full MGR(k) spectra and minimal Golomb lengths
- Re-checkable nonexistence certificates for MGRs, optimal OOCs, cyclic
  Steiner systems and relative difference families

Example Usage:
    import golombz

    # Verify a ruler
    golombz.verify_mgr(golombz.Ruler(21, (0, 2, 7, 8, 11))).valid

    # Prove there is no (22,5)-MGR
    golombz.search(22, 5, mode="prove").status

    # Certify the same kind of claim from number theory
    golombz.certify_mgr(94, 10).rule

    # MGR(5) = {21} + {v >= 23}
    golombz.spectrum(5)
"""

__version__ = "0.1.0"

from .core import (
    Ruler,
    DiffProfile,
    VerifyReport,
    verify_mgr,
    verify_golomb,
    diff_profile,
    canonicalize,
    embed,
)
from .constructions import singer, bose, ruzsa, delete_points, exist_small, exist_any
from .search import search, min_length, spectrum, golomb_min_length, search_packing
from .certify import Certificate, certify_mgr, family_scan, validate_certificate
from .designs import (
    OocCode,
    verify_ooc,
    ooc_size_bound,
    certify_optimal_ooc,
    family_scan_ooc,
    steiner_check,
    rdf_check,
    verify_cyclic_steiner,
)
from .finitefield import field_create
from . import numtheory

__all__ = [
    "Ruler",
    "DiffProfile",
    "VerifyReport",
    "verify_mgr",
    "verify_golomb",
    "diff_profile",
    "canonicalize",
    "embed",
    "singer",
    "bose",
    "ruzsa",
    "delete_points",
    "exist_small",
    "exist_any",
    "search",
    "min_length",
    "spectrum",
    "golomb_min_length",
    "search_packing",
    "Certificate",
    "certify_mgr",
    "family_scan",
    "validate_certificate",
    "OocCode",
    "verify_ooc",
    "ooc_size_bound",
    "certify_optimal_ooc",
    "family_scan_ooc",
    "steiner_check",
    "rdf_check",
    "verify_cyclic_steiner",
    "field_create",
    "numtheory",
    "__version__",
]
