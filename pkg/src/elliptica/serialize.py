"""JSON views of every report type, with fixed key orders.

Conventions: exact rationals serialize as "num/den" strings and potentially
huge integers (the bound ladder, polynomial values) as decimal strings, so
consumers never face 64-bit overflow.  Small structural integers (exponents,
degrees, counts, dimensions) stay JSON numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .arithcond import SacReport
from .bounds import BoundsReport, HilaliVerdict, InequalityCheck
from .census import CensusEntry, CensusSummary
from .errors import ParseError
from .exactpoly import RatPoly, RayDecision
from .mixedhodge import BoxVerdict, MHPoly, MHThresholdResult
from .modelspace import ExponentData, InvariantReport
from .stabilize import ThresholdResult


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _frac_or_none(x) -> Optional[str]:
    return None if x is None else frac_str(x)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def poly_to_jsonable(p: RatPoly) -> dict:
    return {"coeffs": [frac_str(c) for c in p.coeffs]}


def poly_from_jsonable(obj: Any) -> RatPoly:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ParseError("polynomial JSON must be an object with a 'coeffs' list")
    return RatPoly(tuple(parse_fraction(c) for c in obj["coeffs"]))


def data_to_jsonable(d: ExponentData) -> dict:
    return {"b": list(d.b), "a": list(d.a)}


def data_from_jsonable(obj: Any) -> ExponentData:
    if isinstance(obj, dict) and "data" in obj and isinstance(obj["data"], dict):
        obj = obj["data"]
    if not isinstance(obj, dict) or "b" not in obj or "a" not in obj:
        raise ParseError("exponent-data JSON must carry 'b' and 'a' lists")
    return ExponentData(tuple(int(x) for x in obj["b"]), tuple(int(x) for x in obj["a"]))


def invariants_to_jsonable(rep: InvariantReport) -> dict:
    return {
        "q": rep.q,
        "r": rep.r,
        "dim_pi": rep.dim_pi,
        "n_X": rep.formal_dim,
        "chi_pi": rep.chi_pi,
        "chi": rep.chi,
        "dim_H": rep.dim_h,
    }


def sac_to_jsonable(rep: SacReport) -> dict:
    return {
        "mode": rep.mode,
        "holds": rep.holds,
        "per_subset": [
            {
                "subset": list(rec.subset),
                "covered_b_indices": list(rec.covered_b_indices),
                "witnesses": {str(j): list(g) for j, g in sorted(rec.witnesses.items())},
            }
            for rec in rep.per_subset
        ],
        "failing_subset": None if rep.failing_subset is None else list(rep.failing_subset),
    }


def bounds_to_jsonable(rep: BoundsReport) -> dict:
    return {
        "q_poly": poly_to_jsonable(rep.q_poly),
        "q_at_1": str(rep.q_at_1),
        "fh_bound": frac_str(rep.fh_bound),
        "pow2_nx": str(rep.pow2_nx),
        "pow2_nx_minus_r": frac_str(rep.pow2_nx_minus_r),
        "b1_bound": _frac_or_none(rep.b1_bound),
        "amgm_bound": _frac_or_none(rep.amgm_bound),
        "pavlov_perdegree": [str(x) for x in rep.pavlov_perdegree],
        "pavlov_total": str(rep.pavlov_total),
        "giant": str(rep.giant),
        "sac_warning": rep.sac_warning,
        "ordering_violations": list(rep.ordering_violations),
    }


def verdict_to_jsonable(v: HilaliVerdict) -> dict:
    out: dict[str, Any] = {"kind": v.kind}
    if v.dim_pi is not None:
        out["dim_pi"] = v.dim_pi
    if v.dim_h is not None:
        out["dim_H"] = v.dim_h
    if v.dim_h_lower is not None:
        out["dim_H_lower"] = v.dim_h_lower
    if v.upper_bounds is not None:
        out["upper_bounds"] = {
            k: frac_str(val) if isinstance(val, Fraction) else str(val)
            for k, val in v.upper_bounds.items()
        }
    if v.reason is not None:
        out["reason"] = v.reason
    return out


def inequalities_to_jsonable(checks: tuple[InequalityCheck, ...]) -> list:
    return [
        {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds} for c in checks
    ]


def ray_decision_to_jsonable(dec: RayDecision) -> dict:
    """Summary of a ray-positivity certificate; the full chain stays in memory."""
    out = {
        "positive": dec.positive,
        "reason": dec.reason,
        "value_at_eps": frac_str(dec.value_at_eps),
        "leading_coefficient": frac_str(dec.leading_coefficient),
    }
    if dec.certificate is not None:
        out["root_count"] = dec.certificate.root_count
        out["chain_length"] = len(dec.certificate.chain)
    return out


def threshold_to_jsonable(res: ThresholdResult) -> dict:
    return {
        "eps": frac_str(res.eps),
        "threshold": res.threshold,
        "tail_constant": res.tail_constant,
        "per_n": {str(n): res.per_n[n] for n in sorted(res.per_n)},
        "certificates": {
            str(n): ray_decision_to_jsonable(res.certificates[n]) for n in sorted(res.certificates)
        },
    }


def mh_to_jsonable(m: MHPoly) -> dict:
    return {
        "terms": [
            {"k": k, "p": p, "q": q, "dim": dim}
            for (k, p, q), dim in sorted(m.terms.items())
        ]
    }


def box_verdict_to_jsonable(v: BoxVerdict) -> dict:
    return {
        "status": v.status,
        "witness": None if v.witness is None else [frac_str(x) for x in v.witness],
        "cells": v.cells,
    }


def mh_threshold_to_jsonable(res: MHThresholdResult) -> dict:
    return {
        "eps": frac_str(res.eps),
        "rmax": frac_str(res.rmax),
        "status": res.status,
        "threshold": res.threshold,
        "tail_constant": res.tail_constant,
        "per_n": {str(n): res.per_n[n] for n in sorted(res.per_n)},
    }


def census_entry_to_jsonable(entry: CensusEntry) -> dict:
    return {
        "data": data_to_jsonable(entry.data),
        "invariants": invariants_to_jsonable(entry.invariants),
        "sac": sac_to_jsonable(entry.sac),
        "bounds": bounds_to_jsonable(entry.bounds),
        "verdict": verdict_to_jsonable(entry.verdict),
    }


def census_summary_to_jsonable(s: CensusSummary) -> dict:
    return {
        "max_formal_dim": s.max_formal_dim,
        "total": s.total,
        "by_formal_dim": {str(k): v for k, v in s.by_formal_dim.items()},
        "by_qr": {f"{q},{r}": v for (q, r), v in s.by_qr.items()},
        "verified": s.verified,
        "bounds_consistent": s.bounds_consistent,
        "pure_fail": s.pure_fail,
        "inequality_failures": list(s.inequality_failures),
        "ordering_violations": list(s.ordering_violations),
    }


def dumps(obj: Any, *, indent: int | None = 2) -> str:
    """Deterministic JSON text; key order is the construction order above."""
    return json.dumps(obj, ensure_ascii=False, indent=indent)
