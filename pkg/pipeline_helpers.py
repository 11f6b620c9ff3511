#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Helper functions for the reaction network commands
One builder per command, shared by the command line and the HTTP API
"""

import logging
import traceback
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from crn_analysis import (
    DegenerateHullError,
    EGraph,
    Edge,
    HypothesisError,
    InternalInvariantError,
    RealizationResult,
    check_p2_certificate,
    check_terminal_interior,
    classify_hull_2d,
    conservation_laws,
    deficiency,
    disguised_membership_at,
    equivalence_certificate,
    is_complex_balanced_at,
    is_endotactic,
    is_strongly_endotactic,
    is_weakly_reversible,
    linkage_classes,
    net_reaction_graph,
    numeric_equivalence_deviation,
    parse_network,
    print_network,
    probe_inclusion,
    realize,
    simulate,
    solve_p1_fixed_k,
    solve_p2,
    stoichiometric_dimension,
    strong_components,
)
from crn_analysis.crn_endotactic import DEFAULT_MAX_HYPERPLANES, DirectionWitness
from crn_analysis.crn_massaction import DEFAULT_TOLERANCE, POSITIVITY_FLOOR, Trajectory
from crn_analysis.crn_vectors import format_fraction, format_vector
from models import (
    CertificateEntry,
    CheckReport,
    ComponentModel,
    DisguisedReport,
    EdgeModel,
    EquivReport,
    HullModel,
    ProbeModel,
    RealizeReport,
    TerminalModel,
    WitnessModel,
)

logger = logging.getLogger(__name__)


def load_network(path: str) -> Tuple[EGraph, Optional[Dict[Edge, Fraction]]]:
    """Read and parse a network file"""
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    logger.info(f"Loaded network file {path}")
    return parse_network(text)


def require_rates(k: Optional[Mapping[Edge, Fraction]], command: str) -> Mapping[Edge, Fraction]:
    if k is None:
        raise ValueError(f"'{command}' needs rate constants on every reaction")
    return k


def parse_state(text: str) -> List[Fraction]:
    """Comma-separated rationals such as '1,3/2,0.5'"""
    try:
        values = [Fraction(part.strip()) for part in text.split(',')]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Cannot read state '{text}'")
    return values


def edge_models(edges: Sequence[Edge], values: Optional[Mapping[Edge, Fraction]] = None) -> List[EdgeModel]:
    return [
        EdgeModel(
            source=format_vector(e.source),
            target=format_vector(e.target),
            rate=format_fraction(values[e]) if values is not None else None
        )
        for e in edges
    ]


def _witness(witness: Optional[DirectionWitness]) -> Optional[WitnessModel]:
    if witness is None:
        return None
    return WitnessModel(v=format_vector(witness.v), violating_edge=edge_models([witness.violating_edge])[0])


def _vertex_list(vertices) -> List[List[str]]:
    return [format_vector(v) for v in sorted(vertices)]


def build_check_report(
    G: EGraph,
    k: Optional[Mapping[Edge, Fraction]] = None,
    max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES
) -> CheckReport:
    """
    Structural report of one network

    Args:
        G: The network
        k: Rate constants; enables the net-vector and terminal-interior parts
        max_hyperplanes: Arrangement cap for the endotactic checks

    Returns:
        CheckReport
    """
    endotactic, endo_witness = is_endotactic(G, max_hyperplanes)
    strong, strong_witness = is_strongly_endotactic(G, max_hyperplanes)
    logger.info(f"Endotactic: {endotactic}, strongly endotactic: {strong}")

    hull = None
    hull_error = None
    if stoichiometric_dimension(G) == 2:
        try:
            H = classify_hull_2d(G)
            hull = HullModel(
                boundary_cycle=[format_vector(v) for v in H.boundary_cycle],
                corners=[format_vector(v) for v in H.corner],
                sides=[format_vector(v) for v in H.side],
                interior=[format_vector(v) for v in H.interior]
            )
        except DegenerateHullError as e:
            hull_error = e.reason

    terminal_ok = None
    terminal_reports: List[TerminalModel] = []
    zero_vertices: List[List[str]] = []
    if k is not None:
        terminal_ok, reports = check_terminal_interior(G, k)
        terminal_reports = [
            TerminalModel(
                component=_vertex_list(r.component),
                linkage_class=r.linkage_class,
                passed=r.passed,
                vertex=format_vector(r.vertex) if r.vertex is not None else None,
                net_vector=format_vector(r.net_vector) if r.net_vector is not None else None,
                reason=r.reason
            )
            for r in reports
        ]
        zero_vertices = [format_vector(v) for v in net_reaction_graph(G, k).zero_vertices]

    return CheckReport(
        species=list(G.species_names()),
        vertex_count=len(G.vertices),
        edge_count=len(G.edges),
        weakly_reversible=is_weakly_reversible(G),
        endotactic=endotactic,
        endotactic_witness=_witness(endo_witness),
        strongly_endotactic=strong,
        strongly_endotactic_witness=_witness(strong_witness),
        linkage_classes=[_vertex_list(L) for L in linkage_classes(G)],
        strong_components=[ComponentModel(vertices=_vertex_list(c), terminal=t) for c, t in strong_components(G)],
        stoichiometric_dimension=stoichiometric_dimension(G),
        deficiency=deficiency(G),
        conservation_laws=[format_vector(c) for c in conservation_laws(G)],
        hull=hull,
        hull_error=hull_error,
        terminal_interior=terminal_ok,
        terminal_reports=terminal_reports,
        net_zero_vertices=zero_vertices
    )


def build_realize_report(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    mode: str = 'auto',
    max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES,
    kappa_fraction: Fraction = Fraction(1, 2),
    probe_trials: int = 0
) -> Tuple[RealizeReport, Optional[RealizationResult]]:
    """Realize (G, k); hypothesis failures become an unsuccessful report, not an exception"""
    try:
        result = realize(G, k, mode, max_hyperplanes, kappa_fraction)
    except HypothesisError as e:
        logger.info(f"Realization refused: {e.hypothesis} - {e.reason}")
        return RealizeReport(success=False, mode=mode, hypothesis=e.hypothesis, reason=e.reason), None

    certificate = [
        CertificateEntry(vertex=format_vector(y), original=format_vector(a), realized=format_vector(b))
        for y, (a, b) in result.certificate.items()
    ]
    details = {
        key: format_fraction(value) if isinstance(value, Fraction) else ",".join(format_vector(value))
        for key, value in result.details.items()
    }
    probe = None
    if probe_trials > 0:
        successes, trials = probe_inclusion(G, result.target, probe_trials)
        probe = ProbeModel(trials=trials, successes=successes)

    report = RealizeReport(
        success=True,
        mode=mode,
        method=result.method,
        edges=edge_models(result.target.edges, result.rates),
        network=print_network(result.target, result.rates),
        certificate=certificate,
        details=details,
        probe=probe
    )
    return report, result


def build_disguised_report(
    G: EGraph,
    k: Optional[Mapping[Edge, Fraction]] = None,
    at: Optional[Sequence[Fraction]] = None
) -> DisguisedReport:
    """Flux LP, optionally the fixed-state membership at `at` and the fixed-rate search for k"""
    if at is not None and k is None:
        raise ValueError("Membership at a state needs rate constants on every reaction")

    p2 = solve_p2(G)
    if p2 is None:
        return DisguisedReport(
            feasible=False,
            statement="Flux LP infeasible: the disguised toric locus is empty",
            at=format_vector(at) if at is not None else None,
            membership=False if at is not None else None,
            p1_found=False if k is not None else None
        )

    report = DisguisedReport(
        feasible=True,
        statement=f"Flux LP feasible: complex-balanced support with {len(p2.support.edges)} edges",
        flux=edge_models(G.edges, p2.flux),
        complete_flux=edge_models([e for e in sorted(p2.complete_flux) if p2.complete_flux[e] > 0], p2.complete_flux),
        support=edge_models(p2.support.edges),
        support_network=print_network(p2.support, {e: p2.complete_flux[e] for e in p2.support.edges}),
        certificate_valid=check_p2_certificate(G, p2.flux, p2.complete_flux)
    )

    if at is not None:
        x = list(at)
        rates = disguised_membership_at(G, k, p2.support, x)
        report.at = format_vector(x)
        report.membership = rates is not None
        if rates is not None:
            report.membership_rates = edge_models(p2.support.edges, rates)
            report.complex_balanced = is_complex_balanced_at(p2.support, rates, x) if p2.support.edges else None

    if k is not None:
        p1 = solve_p1_fixed_k(G, k)
        report.p1_found = p1 is not None
        if p1 is not None:
            report.p1_source = p1.source
            report.p1_rates = edge_models(p1.graph.edges, p1.rates)
    return report


def build_equiv_report(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    G2: EGraph,
    k2: Mapping[Edge, Fraction],
    samples: int = 100,
    box: Tuple[float, float] = (0.1, 10.0),
    seed: int = 0
) -> EquivReport:
    certificate = equivalence_certificate(G, k, G2, k2)
    mismatched = [format_vector(y) for y, (a, b) in certificate.items() if a != b]
    deviation = numeric_equivalence_deviation(G, k, G2, k2, samples, box, seed=seed)
    relative = numeric_equivalence_deviation(G, k, G2, k2, samples, box, relative=True, seed=seed)
    logger.info(f"Exact equivalence: {not mismatched}, max deviation {deviation:.3g}")
    return EquivReport(
        exact=not mismatched,
        mismatched_vertices=mismatched,
        max_deviation=deviation,
        relative_deviation=relative,
        samples=samples,
        box=list(box)
    )


def run_simulation(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    x0: Sequence[float],
    t_end: float,
    tol: float = DEFAULT_TOLERANCE,
    floor: float = POSITIVITY_FLOOR,
    max_step: Optional[float] = None
) -> Trajectory:
    kwargs = {} if max_step is None else {'max_step': max_step}
    return simulate(G, k, x0, t_end, tol, floor, **kwargs)


def handle_command_failure(command: str, error: Exception) -> None:
    """
    Log a failed command with its traceback

    Internal invariant violations carry the traceback at error level; other
    failures keep it at debug.
    """
    if isinstance(error, InternalInvariantError):
        logger.error(f"{command}: Internal error - {str(error)}", exc_info=error)
        return
    logger.error(f"{command}: Error - {str(error)}")
    logger.debug(f"{command}: Traceback: {traceback.format_exc()}")
