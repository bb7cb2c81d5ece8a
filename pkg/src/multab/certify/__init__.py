"""Certificates of induced-subgraph sizes: model, constructions, pipeline."""

from .certificate import (
    CertEntry,
    Certificate,
    VerificationReport,
    certificate_from_json,
    certificate_to_json,
    verify_certificate,
)
from .constructions import (
    common_type_entries,
    degree_multiples_entries,
    sparse_chain_entries,
    sparse_types_entries,
    trivial_entries,
    two_class_entries,
    warm_up_entries,
)
from .pipeline import PipelineReport, certify_pipeline, trivial_certificate, warm_up_half_regular

__all__ = [
    "CertEntry",
    "Certificate",
    "VerificationReport",
    "certificate_from_json",
    "certificate_to_json",
    "verify_certificate",
    "trivial_entries",
    "warm_up_entries",
    "degree_multiples_entries",
    "two_class_entries",
    "sparse_chain_entries",
    "sparse_types_entries",
    "common_type_entries",
    "PipelineReport",
    "certify_pipeline",
    "trivial_certificate",
    "warm_up_half_regular",
]
