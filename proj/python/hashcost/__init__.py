"""Reversible SHA-256 / Keccak circuits and Grover attack cost estimates."""

import json

from . import _hashcost
from ._hashcost import (
    DivergenceError,
    DomainError,
    ParseError,
    StructuralError,
    UnsupportedGateError,
    advantage_table,
    circuit_text,
    code_distance,
    crossover_k,
    keccak_p_circuit,
    lambert_w,
    max_search_bits,
    plan_distillation,
    sha256_circuit_digest,
)

__all__ = [
    "DivergenceError",
    "DomainError",
    "ParseError",
    "StructuralError",
    "UnsupportedGateError",
    "advantage_table",
    "circuit_counts",
    "circuit_text",
    "code_distance",
    "crossover_k",
    "estimate",
    "grover_iterations",
    "keccak_component_counts",
    "keccak_p_circuit",
    "lambert_w",
    "max_search_bits",
    "plan_distillation",
    "sha256_circuit_digest",
    "text_counts",
]


def circuit_counts(hash, lowered=False, rounds=24):
    return json.loads(_hashcost.circuit_counts(hash, lowered, rounds))


def keccak_component_counts(part):
    return json.loads(_hashcost.keccak_component_counts(part))


def text_counts(text):
    return json.loads(_hashcost.text_counts(text))


def grover_iterations(k):
    return int(_hashcost.grover_iterations(k))


def estimate(hash="sha256", k=256, p_in=1e-4, p_g=None, epsilon=1.0, cycle_ns=200.0, counts=None, qubits=0):
    """Cost report as a dict. Big integers come back as decimal strings, as in the CLI JSON."""
    return json.loads(_hashcost.estimate(hash, k, p_in, p_g, epsilon, cycle_ns, counts, qubits))
