"""Classical and quantum neighbourhoods of reversible maps on cell structures."""

import json

from ._core import (
    BlockMap,
    CellSpace,
    Error,
    compose,
    composition_bound,
    duality_check,
    explicit_map,
    find_signaling_pair,
    in_nbhd,
    invert,
    iterate_bound,
    localized_by_matrix_elements,
    make_jk,
    make_jt,
    make_jt_iterated,
    make_tk,
    make_toffoli,
    out_nbhd,
    parse_map,
    power,
    quantum_in_nbhd,
    quantum_in_scheme,
    run_acceptance,
    same_function,
)
from . import _core


def quantum_localized(f, B, A, method="auto"):
    return json.loads(_core.quantum_localized(f, list(B), list(A), method))


def simple_bound(f, method="auto"):
    return json.loads(_core.simple_bound(f, method))


def signaling_demo(f, v, w, alice, bob, steps=1):
    return json.loads(_core.signaling_demo(f, list(v), list(w), alice, bob, steps))


def map_to_json(f, format="auto"):
    return json.loads(f.to_json(format))


def load_map(path):
    with open(path, encoding="utf-8") as handle:
        return parse_map(handle.read())
