"""Python bindings for the qmodw exact simulator."""

import json

from ._qmodw import (
    AlgebraicNumber,
    CountingOracle,
    DimensionMismatch,
    DivisionByZero,
    DomainError,
    Error,
    HypothesisViolated,
    IndexOutOfRange,
    InternalInvariantViolation,
    ParseError,
    PreconditionFailed,
    UnsupportedModulus,
    deutsch,
    factor_split,
    gram_closed_form,
    gram_matrix,
    is_supported_modulus,
    lower_bound_row,
    mod3,
    mod_m_spec,
    ndeg_lower_bound,
    query_bound,
    sweep_csv,
    symmetrize,
    trace_mod3,
    weight_mod,
)
from ._qmodw import run_json as _run_json


def run(bits, m, trace=False):
    """Run the weight-mod-m algorithm on a bit string and return the report as a dict."""
    return json.loads(_run_json(bits, m, trace))


__version__ = "0.1.0"
