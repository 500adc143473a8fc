"""Witness-order certificates and exact element-order spectra for the
four-dimensional special linear and unitary groups over small odd fields.

The package builds certificates naming a semisimple element whose order,
multiplied by the field characteristic, falls outside the spectrum of the
projective group; an independent verifier re-checks every claim, an exact
spectrum oracle confirms the order-theoretic facts at small q, and explicit
matrix realization plus random sampling cross-check the whole pipeline.
"""

from .arith import (PrimePower, SIZE_LIMIT, factorize, is_prime,
                    order_in_cyclic, prime_divisors,
                    primitive_prime_divisor, two_part)
from .params import (GroupParams, KIND_R2_TWO_PART, KIND_R3, KIND_R4,
                     KIND_TWO_PART, Q_CAP, TargetOrderKind, derive,
                     sign_from_str, sign_to_str, target_orders)
from .witness import (Adjustment, CASE_A, CASE_B, CASE_C, CASE_D,
                      CaseDInternals, ConstructionError, Selection,
                      WitnessCertificate, classify_profile, construct)
from .verifier import (MalformedCertificate, VerificationReport,
                       brute_force_selections, verify)
from .spectrum import (SPECTRUM_Q_CAP, ClassDatum, OrbitRep, class_order,
                       enumerate_orbits, format_dump, iter_class_data,
                       member, omega, parse_dump)
from .ffield import (Field, Matrix4, RealizationError, build_field,
                     element_of_order, realize, sample_orders)
from .cli import (canonical_json, certificate_from_document,
                  certificate_to_document, main)

__version__ = "0.1.0"

__all__ = [
    "Adjustment", "CASE_A", "CASE_B", "CASE_C", "CASE_D", "CaseDInternals",
    "ClassDatum", "ConstructionError", "Field", "GroupParams",
    "KIND_R2_TWO_PART", "KIND_R3", "KIND_R4", "KIND_TWO_PART",
    "MalformedCertificate", "Matrix4", "OrbitRep", "PrimePower", "Q_CAP",
    "RealizationError", "SIZE_LIMIT", "SPECTRUM_Q_CAP", "Selection",
    "TargetOrderKind", "VerificationReport", "WitnessCertificate",
    "brute_force_selections", "canonical_json", "certificate_from_document",
    "certificate_to_document", "class_order", "classify_profile",
    "construct", "derive", "element_of_order", "enumerate_orbits",
    "factorize", "format_dump", "build_field", "is_prime", "iter_class_data",
    "main", "member", "omega", "order_in_cyclic", "parse_dump",
    "prime_divisors", "primitive_prime_divisor", "realize", "sample_orders",
    "sign_from_str", "sign_to_str", "target_orders", "two_part", "verify",
]
