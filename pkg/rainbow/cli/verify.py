"""``rainbow verify``: check the bounds and claims on concrete sets."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Mapping

import networkx as nx

from rainbow.cli.common import emit, prepare_base_config
from rainbow.constructions.lower_bound import lower_bound_breakdown, lower_bound_formula, lower_bound_witnesses
from rainbow.constructions.no_quad import build_no_rainbow_quad_set
from rainbow.constructions.upper_bound import verify_theorem1_upper
from rainbow.core.config import require_keys
from rainbow.core.enumeration import empty_rainbow_quadrilaterals, empty_rainbow_triangles
from rainbow.core.errors import EXIT_OK, EXIT_VERIFICATION_FAILED, DegenerateInputError
from rainbow.core.geometry import validate_witness
from rainbow.core.horton import (
    ABOVE,
    BELOW,
    HortonSet,
    empty_triangles_horton,
    generate_horton,
    is_horton,
    layer_bound,
    layer_histogram,
    visible_edges,
)
from rainbow.io.pointsets import read_point_set
from rainbow.models.reports import VerificationReport, WitnessRecord
from shared.utils.config_utils import ConfigError, expand_path

LOGGER = logging.getLogger(__name__)

CHECKS = ("lower-bound", "theorem1-upper", "theorem2", "horton", "visible-edges")


def configure_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("check", choices=CHECKS, help="Which claim to verify.")
    parser.add_argument("--input", type=Path, default=None, help="Point-set file to check.")
    parser.add_argument("--n", type=int, default=None, help="Horton set size.")
    parser.add_argument("--k", type=int, default=None, help="Number of colors.")
    parser.add_argument("--m", type=int, default=None, help="Points per color.")


def prepare_config(args: argparse.Namespace) -> Dict[str, Any]:
    config = prepare_base_config(
        args,
        {"check": args.check, "input": expand_path(args.input), "n": args.n, "k": args.k, "m": args.m},
    )
    check = config["check"]
    if check == "lower-bound":
        require_keys(config, ["input"])
    elif check == "theorem1-upper":
        require_keys(config, ["k", "m"])
    elif check == "theorem2" and config.get("input") is None:
        require_keys(config, ["k"])
    elif check in ("horton", "visible-edges") and config.get("input") is None:
        require_keys(config, ["n"])
    return config


def _horton_from(config: Mapping[str, Any]) -> HortonSet:
    if config.get("input") is not None:
        return HortonSet(tuple(sorted(read_point_set(config["input"]).points, key=lambda p: p.x)))
    return generate_horton(config["n"])


def check_lower_bound(config: Mapping[str, Any]) -> VerificationReport:
    subject = read_point_set(config["input"])
    if subject.m is None or subject.k < 3:
        raise DegenerateInputError("The lower bound needs at least 3 colors with equal class sizes.")
    bound = lower_bound_formula(subject.k, subject.m)
    count = len(empty_rainbow_triangles(subject, threads=config["threads"], budget=config["budget"]))
    witnesses = lower_bound_witnesses(subject)
    invalid = next((w for w in witnesses if not validate_witness(subject, w)), None)
    return VerificationReport(
        check="lower-bound",
        passed=count >= bound and len(witnesses) >= bound and invalid is None,
        count=count,
        bound=bound,
        details={
            "k": subject.k,
            "m": subject.m,
            "witnesses": len(witnesses),
            "per_color": {term.rank: term.guaranteed for term in lower_bound_breakdown(subject.k, subject.m).per_color},
        },
        counterexample=WitnessRecord.from_witness(invalid) if invalid else None,
    )


def check_theorem1_upper(config: Mapping[str, Any]) -> VerificationReport:
    report = verify_theorem1_upper(config["k"], config["m"], threads=config["threads"], budget=config["budget"])
    return VerificationReport(
        check="theorem1-upper",
        passed=report.passed and report.lower_bound <= report.count and report.distinct_clusters,
        count=report.count,
        bound=report.bound,
        details={
            "k": report.k,
            "m": report.m,
            "lower_bound": report.lower_bound,
            "invalid_witnesses": report.invalid_witnesses,
            "layer_histogram": report.layer_histogram,
            "layer_bounds": report.layer_bounds,
        },
    )


def check_theorem2(config: Mapping[str, Any]) -> VerificationReport:
    if config.get("input") is not None:
        subject = read_point_set(config["input"])
    else:
        subject = build_no_rainbow_quad_set(config["k"])
    quads = empty_rainbow_quadrilaterals(subject, threads=config["threads"], budget=config["budget"])
    witness = quads[0] if quads else None
    return VerificationReport(
        check="theorem2",
        passed=not quads,
        count=len(quads),
        bound=0,
        details={
            "k": subject.k,
            "m": subject.m,
            "n": subject.n,
            "counterexample_valid": validate_witness(subject, witness) if witness else None,
        },
        counterexample=WitnessRecord.from_witness(witness) if witness else None,
    )


def check_horton(config: Mapping[str, Any]) -> VerificationReport:
    horton = _horton_from(config)
    if not is_horton(horton.points, budget=config["budget"]):
        return VerificationReport(check="horton", passed=False, details={"n": horton.n, "is_horton": False})
    triangles = empty_triangles_horton(horton)
    histogram = layer_histogram(horton, triangles)
    bound = 2 * horton.n * horton.n
    return VerificationReport(
        check="horton",
        passed=len(triangles) <= bound,
        count=len(triangles),
        bound=bound,
        details={
            "n": horton.n,
            "is_horton": True,
            "layer_histogram": histogram,
            "layer_bounds": {layer: int(layer_bound(horton.n, layer)) for layer in histogram},
        },
    )


def check_visible_edges(config: Mapping[str, Any]) -> VerificationReport:
    horton = _horton_from(config)
    # Generated sets are Horton by construction; only files are re-checked.
    checked = config.get("input") is not None
    if checked and not is_horton(horton.points, budget=config["budget"]):
        return VerificationReport(check="visible-edges", passed=False, details={"n": horton.n, "is_horton": False})
    edges = visible_edges(horton)
    graphs = {ABOVE: nx.Graph(), BELOW: nx.Graph()}
    for edge in edges:
        graphs[edge.side].add_edge(edge.i, edge.j)
    details: Dict[str, Any] = {"n": horton.n, "horton_checked": checked}
    for side, graph in graphs.items():
        degrees = [degree for _, degree in graph.degree()]
        details[side] = {
            "edges": graph.number_of_edges(),
            "components": nx.number_connected_components(graph) if graph.number_of_nodes() else 0,
            "max_degree": max(degrees, default=0),
        }
    bound = 2 * horton.n
    return VerificationReport(check="visible-edges", passed=len(edges) < bound, count=len(edges), bound=bound, details=details)


_CHECKS: Dict[str, Callable[[Mapping[str, Any]], VerificationReport]] = {
    "lower-bound": check_lower_bound,
    "theorem1-upper": check_theorem1_upper,
    "theorem2": check_theorem2,
    "horton": check_horton,
    "visible-edges": check_visible_edges,
}


def run(config: Mapping[str, Any]) -> int:
    check = _CHECKS.get(config["check"])
    if check is None:  # pragma: no cover - argparse restricts choices
        raise ConfigError(f"Unknown check '{config['check']}'.")
    report = check(config)
    emit(report, config["output_format"])
    if report.passed:
        LOGGER.info("Check '%s' passed", report.check)
        return EXIT_OK
    LOGGER.warning("Check '%s' failed", report.check)
    return EXIT_VERIFICATION_FAILED
