from arraymorph.core.hiding.chain import (
    HidingCall,
    candidate_bases,
    f_eval,
    find_calls,
    hide_constant,
    hiding_call,
    parse_call,
    render_call,
    surface_modulus_for,
)
from arraymorph.core.hiding.factors import FACTOR_PAIRS, FactorTable, factor_table
from arraymorph.core.hiding.helper import HidingHelper, emit_hiding_helper, hiding_helper

__all__ = [
    "FACTOR_PAIRS",
    "FactorTable",
    "HidingCall",
    "HidingHelper",
    "candidate_bases",
    "emit_hiding_helper",
    "f_eval",
    "factor_table",
    "find_calls",
    "hide_constant",
    "hiding_call",
    "hiding_helper",
    "parse_call",
    "render_call",
    "surface_modulus_for",
]
