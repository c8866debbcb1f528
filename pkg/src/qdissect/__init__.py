"""Truncated q-series engine with an identity checker for partition generating functions."""

from qdissect.series import EXACT, Ring, Series
from qdissect.eta import EtaQuotient, alpha, eta, eta_quotient
from qdissect.dsl import evaluate, parse_expr, pretty
from qdissect.identities import registry, verify_all, verify_identity

__all__ = [
    "EXACT",
    "Ring",
    "Series",
    "EtaQuotient",
    "alpha",
    "eta",
    "eta_quotient",
    "evaluate",
    "parse_expr",
    "pretty",
    "registry",
    "verify_all",
    "verify_identity",
]
