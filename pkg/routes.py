from fastapi import APIRouter, HTTPException
from datetime import datetime
from fractions import Fraction
from typing import Callable
import logging

from crn_analysis import CrnError, HypothesisError, InternalInvariantError, parse_network
from models import (
    CheckReport,
    DisguisedReport,
    DisguisedRequest,
    EquivReport,
    EquivRequest,
    NetworkRequest,
    RealizeReport,
    RealizeRequest,
    SimulateReport,
    SimulateRequest,
)
from pipeline_helpers import (
    build_check_report,
    build_disguised_report,
    build_equiv_report,
    build_realize_report,
    handle_command_failure,
    parse_state,
    require_rates,
    run_simulation,
)

logger = logging.getLogger(__name__)


class Routes:
    """
    Routes class to encapsulate all API endpoints with access to the configuration
    """
    def __init__(self, config: dict):
        self.config = config
        self.router = APIRouter()
        self._setup_routes()

    def _run(self, command: str, work: Callable):
        """Run one command, mapping toolkit errors to HTTP status codes"""
        try:
            return work()
        except InternalInvariantError as e:
            handle_command_failure(command, e)
            raise HTTPException(status_code=500, detail=str(e))
        except HypothesisError as e:
            handle_command_failure(command, e)
            raise HTTPException(status_code=422, detail={"hypothesis": e.hypothesis, "reason": e.reason})
        except (CrnError, ValueError) as e:
            handle_command_failure(command, e)
            raise HTTPException(status_code=400, detail=str(e))

    def _setup_routes(self):
        """Register all route handlers"""

        @self.router.get("/")
        async def root():
            """Root endpoint with API documentation"""
            return {
                "message": "Reaction Network Analysis API",
                "version": "1.0",
                "endpoints": {
                    "check": "/api/check",
                    "realize": "/api/realize",
                    "disguised": "/api/disguised",
                    "equiv": "/api/equiv",
                    "simulate": "/api/simulate",
                    "health": "/health"
                }
            }

        @self.router.get("/health")
        async def health_check():
            """Health check endpoint"""
            return {"status": "healthy", "timestamp": datetime.now().isoformat()}

        @self.router.post("/api/check", response_model=CheckReport)
        async def check(request: NetworkRequest):
            """Structural report: weak reversibility, endotactic checks, components, hull"""
            def work():
                G, k = parse_network(request.network)
                return build_check_report(G, k, self.config['endotactic']['max_hyperplanes'])
            return self._run("check", work)

        @self.router.post("/api/realize", response_model=RealizeReport)
        async def realize(request: RealizeRequest):
            """
            Weakly reversible realization

            Returns 422 with the failed hypothesis when the construction does not apply
            """
            settings = self.config['realization']

            def work():
                G, k = parse_network(request.network)
                report, result = build_realize_report(
                    G, require_rates(k, "realize"),
                    mode=request.mode or settings['mode'],
                    max_hyperplanes=self.config['endotactic']['max_hyperplanes'],
                    kappa_fraction=Fraction(str(settings['kappa_fraction'])),
                    probe_trials=request.probe or 0
                )
                if result is None:
                    raise HTTPException(
                        status_code=422,
                        detail={"hypothesis": report.hypothesis, "reason": report.reason}
                    )
                return report
            return self._run("realize", work)

        @self.router.post("/api/disguised", response_model=DisguisedReport)
        async def disguised(request: DisguisedRequest):
            """Flux LP and optional fixed-state membership"""
            def work():
                G, k = parse_network(request.network)
                at = parse_state(",".join(request.at)) if request.at else None
                return build_disguised_report(G, k, at)
            return self._run("disguised", work)

        @self.router.post("/api/equiv", response_model=EquivReport)
        async def equiv(request: EquivRequest):
            """Exact verdict plus numeric deviation over the configured box"""
            settings = self.config['equivalence']

            def work():
                G, k = parse_network(request.first)
                G2, k2 = parse_network(request.second)
                return build_equiv_report(
                    G, require_rates(k, "equiv"), G2, require_rates(k2, "equiv"),
                    samples=request.samples or settings['samples'],
                    box=tuple(settings['box']),
                    seed=settings['seed']
                )
            return self._run("equiv", work)

        @self.router.post("/api/simulate", response_model=SimulateReport)
        async def simulate(request: SimulateRequest):
            settings = self.config['simulation']

            def work():
                G, k = parse_network(request.network)
                trajectory = run_simulation(
                    G, require_rates(k, "simulate"), request.x0, request.t_end,
                    tol=request.tol or settings['tol'],
                    floor=settings['positivity_floor'],
                    max_step=settings['max_step']
                )
                return SimulateReport(
                    species=list(trajectory.species),
                    halted=trajectory.halted,
                    times=trajectory.times.tolist(),
                    states=trajectory.states.tolist()
                )
            return self._run("simulate", work)
