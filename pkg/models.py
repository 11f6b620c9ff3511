#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pydantic models for the reaction network reports
Shared by the command line and the HTTP API; rationals travel as strings like "3/2"
"""

from pydantic import BaseModel
from pydantic.json_schema import models_json_schema
from typing import Dict, List, Optional


class EdgeModel(BaseModel):
    """One reaction, with its rate or flux when known"""
    source: List[str]
    target: List[str]
    rate: Optional[str] = None


class WitnessModel(BaseModel):
    """Direction at which an edge points down with no rescue"""
    v: List[str]
    violating_edge: EdgeModel


class ComponentModel(BaseModel):
    vertices: List[List[str]]
    terminal: bool


class HullModel(BaseModel):
    """Classification of the sources against their Newton polygon"""
    boundary_cycle: List[List[str]]
    corners: List[List[str]]
    sides: List[List[str]]
    interior: List[List[str]]


class TerminalModel(BaseModel):
    component: List[List[str]]
    linkage_class: int
    passed: bool
    vertex: Optional[List[str]] = None
    net_vector: Optional[List[str]] = None
    reason: str = ""


class CheckReport(BaseModel):
    """Structural properties of one network"""
    species: List[str]
    vertex_count: int
    edge_count: int
    weakly_reversible: bool
    endotactic: bool
    endotactic_witness: Optional[WitnessModel] = None
    strongly_endotactic: bool
    strongly_endotactic_witness: Optional[WitnessModel] = None
    linkage_classes: List[List[List[str]]]
    strong_components: List[ComponentModel]
    stoichiometric_dimension: int
    deficiency: int
    conservation_laws: List[List[str]]
    hull: Optional[HullModel] = None
    hull_error: Optional[str] = None
    terminal_interior: Optional[bool] = None
    terminal_reports: List[TerminalModel] = []
    net_zero_vertices: List[List[str]] = []


class CertificateEntry(BaseModel):
    vertex: List[str]
    original: List[str]
    realized: List[str]


class ProbeModel(BaseModel):
    trials: int
    successes: int


class RealizeReport(BaseModel):
    """Weakly reversible realization, or the hypothesis that failed"""
    success: bool
    mode: str
    method: Optional[str] = None
    hypothesis: Optional[str] = None
    reason: Optional[str] = None
    edges: List[EdgeModel] = []
    network: Optional[str] = None
    certificate: List[CertificateEntry] = []
    details: Dict[str, str] = {}
    probe: Optional[ProbeModel] = None


class DisguisedReport(BaseModel):
    """Flux LP outcome plus the optional fixed-state and fixed-rate checks"""
    feasible: bool
    statement: str
    flux: List[EdgeModel] = []
    complete_flux: List[EdgeModel] = []
    support: List[EdgeModel] = []
    support_network: Optional[str] = None
    certificate_valid: Optional[bool] = None
    at: Optional[List[str]] = None
    membership: Optional[bool] = None
    membership_rates: List[EdgeModel] = []
    complex_balanced: Optional[bool] = None
    p1_found: Optional[bool] = None
    p1_source: Optional[str] = None
    p1_rates: List[EdgeModel] = []


class EquivReport(BaseModel):
    exact: bool
    mismatched_vertices: List[List[str]] = []
    max_deviation: float
    relative_deviation: float
    samples: int
    box: List[float]


class NetworkRequest(BaseModel):
    """Request carrying one network file's text"""
    network: str


class RealizeRequest(BaseModel):
    network: str
    mode: Optional[str] = "auto"
    probe: Optional[int] = 0


class DisguisedRequest(BaseModel):
    network: str
    at: Optional[List[str]] = None


class EquivRequest(BaseModel):
    first: str
    second: str
    samples: Optional[int] = None


class SimulateRequest(BaseModel):
    network: str
    x0: List[float]
    t_end: float
    tol: Optional[float] = None


class SimulateReport(BaseModel):
    species: List[str]
    halted: bool
    times: List[float]
    states: List[List[float]]


REPORT_MODELS = [CheckReport, RealizeReport, DisguisedReport, EquivReport, SimulateReport]


def report_schema() -> dict:
    """JSON schema covering every report the tools emit"""
    _, schema = models_json_schema(
        [(model, 'serialization') for model in REPORT_MODELS],
        title='Reaction network reports'
    )
    return schema
