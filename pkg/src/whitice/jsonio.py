"""JSON views of the core objects.

Schemas (all deterministic: entries are sorted canonically):

    coefficient   symbolic: {"terms": [{"g": [..], "h": [..], "u": [[num, den], ..]}]}
                  numeric:  [re, im]
    polynomial    {"vars": n, "terms": [{"exponents": [..], "coeff": <coefficient>}]}
    state         {"columns": C, "layers": [[..], ..], "rowOrder": "gamma"|"delta"}
    pattern       {"rows": [[..], ..]}
    short pattern {"l": [..], "a": [..], "m": [..]}
    whittaker     {"entries": [{"k": [..], "coeff": <coefficient>}]}
    report        {"check": .., "params": {..}, "pass": bool, "counterexample": ..?}

In a symbolic coefficient, "g" and "h" list Gauss-symbol indices with
multiplicity (g(1)^2 g(2) -> [1, 1, 2]) and "u" is the dense coefficient
list of the polynomial in u, as exact [numerator, denominator] pairs
starting at u^0.  Every converter has an exact inverse.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffs import Mode, SymCoeff
from .gauss import GaussTable
from .lattice import Boundary, IceState
from .laurent import LaurentPoly
from .patterns import GTPattern, ShortPattern


# ---------------------------------------------------------------------------
#  Coefficients
# ---------------------------------------------------------------------------

def _flat_part(part) -> list[int]:
    out: list[int] = []
    for index, power in part:
        out.extend([index] * power)
    return out


def _part_from_flat(flat) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for index in flat:
        counts[index] = counts.get(index, 0) + 1
    return tuple(sorted(counts.items()))


def coeff_to_json(coeff):
    """Symbolic coefficient -> {"terms": [...]}; numeric -> [re, im]."""
    if isinstance(coeff, SymCoeff):
        groups: dict[tuple, dict[int, Fraction]] = {}
        for (gpart, hpart, upow), val in coeff.terms.items():
            groups.setdefault((gpart, hpart), {})[upow] = val
        out = []
        for (gpart, hpart), powers in sorted(groups.items()):
            top = max(powers)
            dense = [powers.get(k, Fraction(0)) for k in range(top + 1)]
            out.append({
                "g": _flat_part(gpart),
                "h": _flat_part(hpart),
                "u": [[f.numerator, f.denominator] for f in dense],
            })
        return {"terms": out}
    value = complex(coeff)
    return [value.real, value.imag]


def coeff_from_json(obj):
    """Inverse of coeff_to_json (shape decides symbolic vs numeric)."""
    if isinstance(obj, dict):
        terms: dict = {}
        for entry in obj["terms"]:
            gpart = _part_from_flat(entry["g"])
            hpart = _part_from_flat(entry["h"])
            for upow, (num, den) in enumerate(entry["u"]):
                if num:
                    terms[(gpart, hpart, upow)] = Fraction(num, den)
        return SymCoeff(terms)
    re, im = obj
    return complex(re, im)


# ---------------------------------------------------------------------------
#  Polynomials
# ---------------------------------------------------------------------------

def poly_to_json(poly: LaurentPoly) -> dict:
    return {
        "vars": poly.nvars,
        "terms": [{"exponents": list(exps), "coeff": coeff_to_json(coeff)}
                  for exps, coeff in poly.sorted_terms()],
    }


def poly_from_json(obj: dict, mode: Mode) -> LaurentPoly:
    terms = {tuple(t["exponents"]): coeff_from_json(t["coeff"])
             for t in obj["terms"]}
    return LaurentPoly(obj["vars"], mode, terms)


# ---------------------------------------------------------------------------
#  States and patterns
# ---------------------------------------------------------------------------

def state_to_json(state: IceState, row_order: str = "gamma") -> dict:
    return {
        "columns": state.boundary.columns,
        "layers": [list(layer) for layer in state.layers],
        "rowOrder": row_order,
    }


def state_from_json(obj: dict) -> IceState:
    layers = tuple(tuple(layer) for layer in obj["layers"])
    boundary = Boundary(columns=obj["columns"], top_minus=layers[0])
    return IceState(boundary=boundary, layers=layers)


def pattern_to_json(pattern: GTPattern) -> dict:
    return {"rows": [list(row) for row in pattern.rows]}


def pattern_from_json(obj: dict) -> GTPattern:
    return GTPattern(tuple(tuple(row) for row in obj["rows"]))


def short_pattern_to_json(sp: ShortPattern) -> dict:
    return {"l": list(sp.top), "a": list(sp.mid), "m": list(sp.bot)}


def short_pattern_from_json(obj: dict) -> ShortPattern:
    return ShortPattern(top=tuple(obj["l"]), mid=tuple(obj["a"]),
                        bot=tuple(obj["m"]))


# ---------------------------------------------------------------------------
#  Whittaker tables, Gauss tables, verification reports
# ---------------------------------------------------------------------------

def whittaker_to_json(table: dict) -> dict:
    return {"entries": [{"k": list(k), "coeff": coeff_to_json(c)}
                        for k, c in sorted(table.items())]}


def whittaker_from_json(obj: dict) -> dict:
    return {tuple(e["k"]): coeff_from_json(e["coeff"])
            for e in obj["entries"]}


def gauss_table_to_json(table: GaussTable) -> dict:
    return {
        "n": table.n,
        "q": table.q,
        "root": table.root,
        "g": [[v.real, v.imag] for v in table.gvals],
        "h": [[v.real, v.imag] for v in table.hvals],
    }


def report(check: str, params: dict, passed: bool,
           counterexample=None) -> dict:
    out = {"check": check, "params": params, "pass": bool(passed)}
    if counterexample is not None:
        out["counterexample"] = counterexample
    return out
