"""JSON serialization: documented shapes and lossless round-trips."""
from __future__ import annotations

import json

from whitice.coeffs import SymCoeff, SymbolicMode
from whitice.gauss import gauss_table
from whitice.jsonio import (
    coeff_from_json,
    coeff_to_json,
    gauss_table_to_json,
    pattern_from_json,
    pattern_to_json,
    poly_from_json,
    poly_to_json,
    report,
    short_pattern_from_json,
    short_pattern_to_json,
    state_from_json,
    state_to_json,
    whittaker_from_json,
    whittaker_to_json,
)
from whitice.lattice import boundary_from_lambda, enumerate_states
from whitice.patterns import GTPattern, ShortPattern, state_from_pattern
from whitice.partition import numeric_mode, partition_function, raw_symbolic_mode, whittaker_table

TOL = 1e-12

WORKED = GTPattern(((5, 3, 0), (3, 1), (3,)))


def test_state_shape_and_round_trip():
    state = state_from_pattern(WORKED)
    obj = state_to_json(state)
    assert obj == {"columns": 6, "layers": [[5, 3, 0], [3, 1], [3], []], "rowOrder": "gamma"}
    json.dumps(obj)  # serializable
    assert state_from_json(obj) == state
    for st in enumerate_states(boundary_from_lambda((2, 1, 0))):
        assert state_from_json(state_to_json(st)) == st


def test_pattern_shape_and_round_trip():
    obj = pattern_to_json(WORKED)
    assert obj == {"rows": [[5, 3, 0], [3, 1], [3]]}
    assert pattern_from_json(obj) == WORKED


def test_short_pattern_shape_and_round_trip():
    sp = ShortPattern((5, 3, 0), (4, 2), (4,))
    obj = short_pattern_to_json(sp)
    assert obj == {"l": [5, 3, 0], "a": [4, 2], "m": [4]}
    assert short_pattern_from_json(obj) == sp


def test_symbolic_coeff_round_trip():
    c = SymCoeff.symbol("g", 2) * SymCoeff.symbol("h", 1) * 2 + SymCoeff.u_power(3)
    obj = coeff_to_json(c)
    assert set(obj) == {"terms"}
    for term in obj["terms"]:
        assert set(term) == {"g", "h", "u"}
    assert coeff_from_json(obj) == c
    assert coeff_from_json(json.loads(json.dumps(obj))) == c


def test_numeric_coeff_round_trip():
    obj = coeff_to_json(0.5 - 0.25j)
    assert obj == [0.5, -0.25]
    assert coeff_from_json(obj) == 0.5 - 0.25j


def test_poly_round_trip_symbolic():
    raw = raw_symbolic_mode()
    z = partition_function(boundary_from_lambda((3, 2, 0)), "delta", raw)
    obj = poly_to_json(z)
    assert set(obj) == {"vars", "terms"}
    assert obj["vars"] == 3
    back = poly_from_json(json.loads(json.dumps(obj)), raw)
    assert back == z


def test_poly_round_trip_numeric():
    num = numeric_mode(2, 5)
    z = partition_function(boundary_from_lambda((2, 0)), "gamma", num)
    back = poly_from_json(json.loads(json.dumps(poly_to_json(z))), num)
    assert back.equal(z, TOL)


def test_whittaker_round_trip():
    raw = raw_symbolic_mode()
    table = whittaker_table(boundary_from_lambda((3, 2, 0)), "gamma", raw)
    obj = whittaker_to_json(table)
    assert set(obj) == {"entries"}
    assert all(set(e) == {"k", "coeff"} for e in obj["entries"])
    assert whittaker_from_json(json.loads(json.dumps(obj))) == table


def test_gauss_table_shape():
    obj = gauss_table_to_json(gauss_table(2, 13))
    assert set(obj) == {"n", "q", "root", "g", "h"}
    assert obj["n"] == 2 and obj["q"] == 13
    assert len(obj["g"]) == 2 and len(obj["h"]) == 2
    assert all(len(pair) == 2 for pair in obj["g"])


def test_report_shape():
    ok = report("two-row", {"seed": 0}, True)
    assert ok == {"check": "two-row", "params": {"seed": 0}, "pass": True}
    bad = report("two-row", {"seed": 0}, False, counterexample={"k": 2})
    assert bad["pass"] is False
    assert bad["counterexample"] == {"k": 2}
    assert "counterexample" not in ok
