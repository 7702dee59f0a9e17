"""Registered identities and the machinery that checks them."""

from .records import (COST_CLASSES, DEFAULT_TOL, SLOW_TOL, IdentityRecord, Published, Route,
                      SampleResult, VerificationResult, format_param)
from .registry import (catalog_json, get_identity, list_identities, registry, select,
                       valid_ids)
from .runner import evaluate_identity, evaluate_suite

__all__ = [
    "COST_CLASSES", "DEFAULT_TOL", "SLOW_TOL", "IdentityRecord", "Published", "Route",
    "SampleResult", "VerificationResult", "format_param", "catalog_json", "get_identity",
    "list_identities", "registry", "select", "valid_ids", "evaluate_identity",
    "evaluate_suite",
]
