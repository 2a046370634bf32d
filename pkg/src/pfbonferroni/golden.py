"""Reference results for the bundled ERP example, and a runner that checks them.

The expected values are the published four-decimal figures for the ERP
selection case: aggregated values, scores and rankings under the Hamacher,
Frank, Dombi and Aczel-Alsina t-norms, the Hamacher rankings for seven
``(p, q)`` pairs, and the weighted mean of two equal inputs that shows the
weighted variant is not idempotent.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass
from importlib import resources
from typing import Any, Dict, List, Optional

from .bonferroni import BonferroniParams, pfiwbm
from .mcdm import DecisionProblem, rank
from .pfn import PFN, format_pfn
from .tnorms import validate_spec

TABLE_TOLERANCE = 1e-4
COUNTEREXAMPLE_TOLERANCE = 1e-5

GOLDEN: Dict[str, Any] = {
    "table2": {
        "family": "hamacher",
        "gamma": 2.0,
        "aggregated": [
            [0.3749, 0.5173, 0.0774],
            [0.4403, 0.4039, 0.1079],
            [0.4789, 0.3357, 0.0598],
            [0.2901, 0.6297, 0.0587],
            [0.3295, 0.5697, 0.0732],
        ],
    },
    "table3": {
        "scores": [0.2975, 0.3324, 0.4191, 0.2313, 0.2563],
        "chain": ["A3", "A2", "A1", "A5", "A4"],
    },
    "table4": [
        {"p": 2, "q": 1, "chain": ["A3", "A2", "A1", "A5", "A4"]},
        {"p": 1, "q": 2, "chain": ["A3", "A2", "A1", "A5", "A4"]},
        {"p": 3, "q": 1, "chain": ["A3", "A5", "A4", "A2", "A1"]},
        {"p": 7, "q": 2, "chain": ["A3", "A5", "A4", "A1", "A2"]},
        {"p": 8, "q": 1, "chain": ["A3", "A5", "A1", "A4", "A2"]},
        {"p": 6, "q": 9, "chain": ["A3", "A5", "A4", "A2", "A1"]},
        {"p": 10, "q": 10, "chain": ["A3", "A5", "A4", "A2", "A1"]},
    ],
    "families": {
        "frank": {
            "aggregated": [
                [0.3672, 0.5241, 0.0779],
                [0.4369, 0.4114, 0.1080],
                [0.4750, 0.3296, 0.0599],
                [0.2806, 0.6396, 0.0587],
                [0.3171, 0.5820, 0.0733],
            ],
            "scores": [0.2893, 0.3289, 0.4151, 0.2219, 0.2438],
            "chain": ["A3", "A2", "A1", "A5", "A4"],
        },
        "dombi": {
            "aggregated": [
                [0.3639, 0.5385, 0.0606],
                [0.5669, 0.2601, 0.1053],
                [0.5871, 0.1807, 0.0599],
                [0.4399, 0.4979, 0.0579],
                [0.3939, 0.5094, 0.0699],
            ],
            "scores": [0.3033, 0.4616, 0.5272, 0.3819, 0.3240],
            "chain": ["A3", "A2", "A4", "A5", "A1"],
        },
        "aczel-alsina": {
            "aggregated": [
                [0.3718, 0.5102, 0.0852],
                [0.5160, 0.3238, 0.1097],
                [0.5393, 0.2353, 0.0637],
                [0.3640, 0.5723, 0.0591],
                [0.3493, 0.5542, 0.0775],
            ],
            "scores": [0.2865, 0.4062, 0.4756, 0.3049, 0.2717],
            "chain": ["A3", "A2", "A4", "A1", "A5"],
        },
    },
    "counterexample": {
        "inputs": [[1 / 3, 1 / 3, 1 / 3], [1 / 3, 1 / 3, 1 / 3]],
        "weights": [1 / 3, 2 / 3],
        "value": [0.17304, 0.22599, 0.60097],
    },
}


def golden_values() -> Dict[str, Any]:
    """A deep copy of :data:`GOLDEN` that callers may modify."""
    return copy.deepcopy(GOLDEN)


def erp_problem() -> DecisionProblem:
    from .io import problem_from_dict

    text = resources.files("pfbonferroni").joinpath("data/erp.json").read_text(encoding="utf-8")
    return problem_from_dict(json.loads(text))


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    passed: bool
    observed: str
    expected: str
    error: Optional[float] = None


def _max_error(observed, expected) -> float:
    return max(abs(a - b) for a, b in zip(observed, expected))


def _numeric(group, name, observed, expected, tol, show=None) -> CheckResult:
    err = _max_error(observed, expected)
    show = show or (lambda v: ", ".join(f"{x:.4f}" for x in v))
    return CheckResult(group, name, err <= tol, show(observed), show(expected), err)


def _chain(group, name, observed, expected) -> CheckResult:
    return CheckResult(group, name, list(observed) == list(expected), " > ".join(observed), " > ".join(expected))


def _aggregation_checks(group, result, expected) -> List[CheckResult]:
    out = []
    for i, (r, e) in enumerate(zip(result.aggregated, expected)):
        out.append(_numeric(group, f"r{i + 1}", list(r), e, TABLE_TOLERANCE, format_pfn))
    return out


def run_golden(golden: Optional[Dict[str, Any]] = None) -> List[CheckResult]:
    """Evaluate every golden item; ``golden`` defaults to :data:`GOLDEN`."""
    g = GOLDEN if golden is None else golden
    problem = erp_problem()
    results: List[CheckResult] = []

    t2 = g["table2"]
    hamacher = validate_spec(t2["family"], t2["gamma"])
    base = rank(problem, hamacher, BonferroniParams(1, 1))
    results += _aggregation_checks("table2", base, t2["aggregated"])
    results.append(_numeric("table3", "scores", base.scores, g["table3"]["scores"], TABLE_TOLERANCE))
    results.append(_chain("table3", "ranking", base.ordered_names(), g["table3"]["chain"]))

    for row in g["table4"]:
        r = rank(problem, hamacher, BonferroniParams(row["p"], row["q"]))
        results.append(_chain("table4", f"p={row['p']}, q={row['q']}", r.ordered_names(), row["chain"]))

    for family, expected in g["families"].items():
        r = rank(problem, validate_spec(family, 2.0), BonferroniParams(1, 1))
        results += _aggregation_checks(f"table5 {family}", r, expected["aggregated"])
        results.append(_numeric("table6", family, r.scores, expected["scores"], TABLE_TOLERANCE))
        results.append(_chain("table7", family, r.ordered_names(), expected["chain"]))

    ce = g["counterexample"]
    value = pfiwbm(
        validate_spec("product"), BonferroniParams(1, 1), ce["weights"], [PFN(*x) for x in ce["inputs"]]
    )
    results.append(
        _numeric("counterexample", "product pfiwbm", list(value), ce["value"], COUNTEREXAMPLE_TOLERANCE,
                 lambda v: format_pfn(v, 5))
    )
    return results
