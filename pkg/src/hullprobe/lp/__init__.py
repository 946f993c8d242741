from ._backend import BACKEND, phase1
from .hull import (
    DEFAULT_TOL,
    CertificateError,
    HullCertificate,
    Verdict,
    hulls_disjoint,
    point_in_hull,
    verify_certificate,
)

__all__ = [
    "BACKEND",
    "DEFAULT_TOL",
    "CertificateError",
    "HullCertificate",
    "Verdict",
    "hulls_disjoint",
    "phase1",
    "point_in_hull",
    "verify_certificate",
]
