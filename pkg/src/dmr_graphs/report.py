#!/usr/bin/env python3
"""
The analysis pipeline and its report: pydantic models, deterministic JSON and text rendering.

Rationals are serialized as exact strings ("3/2"), floats are rounded to a fixed
number of significant digits when the report is built, and infinite girths are null.
"""

import json
import math
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field
from tabulate import tabulate

from dmr_graphs import __version__
from dmr_graphs.algebra import AlgebraReport, build_algebra_report
from dmr_graphs.analysis import Classification, DmrProfile, Verdict, Witness, classify
from dmr_graphs.config_model import Config
from dmr_graphs.errors import GraphFormatError
from dmr_graphs.formats import encode_graph6
from dmr_graphs.girth import GirthReport, girth_from_profile
from dmr_graphs.graph import DistanceData, Graph, compute_distances
from dmr_graphs.linalg import RationalMatrix, RationalPoly, to_rational
from dmr_graphs.partition import distance_partition, quotient_matrix
from dmr_graphs.polynomials import MeanPolySystem, RecurrenceReport, build_system, recurrence_check
from dmr_graphs.spectra import SpectralData, real_eigenvalues
from dmr_graphs.utils.logging import get_logger, log_function_call

logger = get_logger(__name__)

Matrix = List[List[str]]


def _round(value: Optional[float], digits: int) -> Optional[float]:
    if value is None or not math.isfinite(value):
        return None
    return float(f"{value:.{digits}g}")


def _text(value: Any) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_text(v) for v in value) + ")"
    if isinstance(value, Fraction):
        return str(to_rational(value))
    return str(value)


def matrix_to_json(m: RationalMatrix) -> Matrix:
    return [[str(x) for x in row] for row in m.tolist()]


def matrix_from_json(rows: Matrix) -> RationalMatrix:
    return RationalMatrix([[to_rational(x) for x in row] for row in rows])


class WitnessModel(BaseModel):
    vertices: List[int] = []
    indices: List[int] = []
    expected: Optional[str] = None
    actual: Optional[str] = None
    description: str = ""

    @classmethod
    def from_witness(cls, w: Witness) -> "WitnessModel":
        return cls(vertices=list(w.vertices), indices=list(w.indices), expected=_text(w.expected),
                   actual=_text(w.actual), description=w.description)


class VerdictModel(BaseModel):
    holds: bool
    reason: str = ""
    witness: Optional[WitnessModel] = None

    @classmethod
    def from_verdict(cls, v: Verdict) -> "VerdictModel":
        witness = WitnessModel.from_witness(v.witness) if v.witness is not None else None
        return cls(holds=v.holds, reason=v.reason, witness=witness)


class InputModel(BaseModel):
    source: str
    value: str
    name: str
    n: int
    edges: int
    graph6: str


class SpectrumModel(BaseModel):
    eigenvalues: List[float]
    multiplicities: List[int]
    residual: Optional[float] = None

    @classmethod
    def from_spectrum(cls, s: SpectralData, digits: int) -> "SpectrumModel":
        return cls(eigenvalues=[_round(x, digits) for x in s.eigenvalues], multiplicities=list(s.multiplicities),
                   residual=_round(s.residual, digits))


class ClassificationModel(BaseModel):
    distance_regular: VerdictModel
    distance_mean_regular: VerdictModel
    super_regular: VerdictModel
    characterizations: Dict[str, bool] = {}
    tight_interlacing: Optional[bool] = None
    mean_matrix_constant: bool = False
    first_differing_index: Optional[int] = None


class MonotonicityModel(BaseModel):
    parameter: str
    index: int
    value: str
    next_value: str


class ProfileModel(BaseModel):
    D: int
    n: int
    k: List[int]
    Bbar: Matrix
    proper_Bi: List[Matrix]
    abar: List[str]
    bbar: List[str]
    cbar: List[str]
    monotonicity_flags: List[MonotonicityModel] = []

    @classmethod
    def from_profile(cls, p: DmrProfile) -> "ProfileModel":
        return cls(
            D=p.D, n=p.n, k=list(p.k), Bbar=matrix_to_json(p.Bbar),
            proper_Bi=[matrix_to_json(m) for m in p.proper_Bi],
            abar=[str(x) for x in p.abar], bbar=[str(x) for x in p.bbar], cbar=[str(x) for x in p.cbar],
            monotonicity_flags=[MonotonicityModel(parameter=f.parameter, index=f.index, value=str(f.value),
                                                  next_value=str(f.next_value))
                                for f in p.monotonicity_flags()],
        )


class InterlacingModel(BaseModel):
    holds: bool
    tight: bool
    equitable: bool
    quotient_eigenvalues: List[float]


class GirthModel(BaseModel):
    odd_girth: Optional[int] = None
    even_girth: Optional[int] = None
    even_girth_exact: bool = True
    girth: Optional[int] = None


class PolynomialModel(BaseModel):
    index: int
    coefficients: List[str]
    text: str

    @classmethod
    def from_poly(cls, i: int, p: RationalPoly) -> "PolynomialModel":
        return cls(index=i, coefficients=[str(c) for c in p.coeffs], text=str(p))


class PolynomialsModel(BaseModel):
    polynomials: List[PolynomialModel]
    values_at_degree: List[str]
    mean_spectrum: SpectrumModel
    pi: List[float]
    w: List[float]
    christoffel: List[float]
    recurrence_holds: bool
    truncates_cleanly: bool


class AlgebraModel(BaseModel):
    dim_Dbar: int
    dim_A: int
    Bi_commute: bool
    Ai_commute: bool
    star_associative: bool
    BiBj_expansion_holds: bool
    recurrence_holds: bool
    polynomial_form_holds: bool
    scheme_identity_holds: bool
    fourier_route_holds: Optional[bool] = None
    fourier_max_error: Optional[float] = None
    subalgebra_closed: Optional[bool] = None
    subalgebra_images_consistent: Optional[bool] = None
    witnesses: Dict[str, WitnessModel] = {}
    residuals: Dict[str, Matrix] = {}


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_name: str = Field(default="dmr-report/1", alias="schema")
    tool_version: str = __version__
    input: InputModel
    diameter: int
    shell_sizes: List[int]
    classification: ClassificationModel
    adjacency_spectrum: SpectrumModel
    interlacing: Optional[InterlacingModel] = None
    profile: Optional[ProfileModel] = None
    girth: Optional[GirthModel] = None
    polynomials: Optional[PolynomialsModel] = None
    algebra: Optional[AlgebraModel] = None
    tolerances: Dict[str, float] = {}
    timing: Dict[str, float] = {}

    @property
    def distance_mean_regular(self) -> bool:
        return self.classification.distance_mean_regular.holds


def serialize_report(report: Report) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(report.model_dump(mode="json", by_alias=True), sort_keys=True, indent=2)


def parse_report(text: str) -> Report:
    """
    Raises:
        GraphFormatError: if the text is not a report
    """
    try:
        return Report.model_validate(json.loads(text))
    except (ValueError, TypeError) as e:
        raise GraphFormatError("not a valid report", fmt="json", original_error=e)


def _algebra_model(a: AlgebraReport, digits: int) -> AlgebraModel:
    return AlgebraModel(
        dim_Dbar=a.dim_Dbar,
        dim_A=a.dim_A,
        Bi_commute=a.Bi_commute.holds,
        Ai_commute=a.Ai_commute.holds,
        star_associative=a.star_associative.holds,
        BiBj_expansion_holds=a.expansion.product_expansion.holds,
        recurrence_holds=a.expansion.recurrence.holds,
        polynomial_form_holds=a.expansion.polynomial_form.holds,
        scheme_identity_holds=a.scheme_identity.holds,
        fourier_route_holds=a.expansion.fourier_holds,
        fourier_max_error=_round(a.expansion.fourier_max_error, digits),
        subalgebra_closed=a.subalgebra.closed if a.subalgebra else None,
        subalgebra_images_consistent=a.subalgebra.images_consistent if a.subalgebra else None,
        witnesses={name: WitnessModel.from_witness(w) for name, w in a.witnesses.items()},
        residuals={str(i): matrix_to_json(m) for i, m in a.expansion.residuals.items()},
    )


def _polynomials_model(system: MeanPolySystem, recurrence: RecurrenceReport, profile: DmrProfile,
                       digits: int) -> PolynomialsModel:
    return PolynomialsModel(
        polynomials=[PolynomialModel.from_poly(i, p) for i, p in enumerate(system.polys)],
        values_at_degree=[str(p(profile.degree)) for p in system.polys],
        mean_spectrum=SpectrumModel.from_spectrum(system.mu, digits),
        pi=[_round(x, digits) for x in system.pi_prods],
        w=[_round(x, digits) for x in system.w],
        christoffel=[_round(x, digits) for x in system.christoffel],
        recurrence_holds=recurrence.holds,
        truncates_cleanly=recurrence.truncates_cleanly,
    )


def _classification_model(c: Classification) -> ClassificationModel:
    return ClassificationModel(
        distance_regular=VerdictModel.from_verdict(c.distance_regular),
        distance_mean_regular=VerdictModel.from_verdict(c.distance_mean_regular),
        super_regular=VerdictModel.from_verdict(c.super_regular),
        characterizations=dict(c.characterizations),
        tight_interlacing=c.tight_interlacing,
        mean_matrix_constant=c.mean_matrix_constant,
        first_differing_index=c.first_differing_index,
    )


@log_function_call(logger)
def build_report(graph: Graph, config: Optional[Config] = None, source: str = "graph",
                 value: Optional[str] = None) -> Report:
    """
    Full pipeline: distances, spectrum, classification and, for distance mean-regular
    graphs, the profile, girth, mean-polynomials and algebra checks.

    Args:
        graph: Connected graph
        config: Tolerances and report settings
        source: How the graph was given (edges, graph6, catalog, circulant)
        value: The input as given on the command line

    Raises:
        GraphValidationError: if the graph is disconnected
        DmrGraphsError: if any consistency check fails
    """
    config = config or Config()
    spectral, digits = config.spectral, config.report.float_digits
    timing: Dict[str, float] = {}

    def timed(stage: str, fn, *args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        timing[stage] = _round(time.perf_counter() - start, 6)
        return result

    dd: DistanceData = timed("distances", compute_distances, graph)
    spectrum = timed("spectrum", real_eigenvalues, dd.adjacency, tol=spectral.tol, cluster_tol=spectral.cluster_tol)
    classification = timed("classification", classify, dd, spectrum, spectral.tol, spectral.cluster_tol)

    report = Report(
        schema_name=config.report.schema_name,
        input=InputModel(source=source, value=value or graph.display_name(), name=graph.display_name(), n=graph.n,
                         edges=graph.edge_count, graph6=encode_graph6(graph)),
        diameter=dd.D,
        shell_sizes=list(dd.shell_sizes(0)),
        classification=_classification_model(classification),
        adjacency_spectrum=SpectrumModel.from_spectrum(spectrum, digits),
        tolerances={
            "tol": spectral.tol,
            "cluster_tol": spectral.cluster_tol,
            "interlacing_tol": spectral.interlacing_tol,
            "degenerate_tol": config.polynomials.degenerate_tol,
            "gram_tol": config.polynomials.gram_tol,
            "fourier_tol": config.polynomials.fourier_tol,
        },
    )

    if dd.n > 1:
        q = quotient_matrix(dd.adjacency, distance_partition(dd, 0), theta=spectrum, tol=spectral.tol,
                            cluster_tol=spectral.cluster_tol, interlacing_tol=spectral.interlacing_tol)
        report.interlacing = InterlacingModel(holds=q.interlacing.holds, tight=q.interlacing.tight,
                                              equitable=q.equitable,
                                              quotient_eigenvalues=[_round(x, digits)
                                                                    for x in q.interlacing.mu.eigenvalues])

    profile = classification.profile
    if profile is not None:
        report.profile = ProfileModel.from_profile(profile)
        girth: GirthReport = timed("girth", girth_from_profile, profile, dd)
        report.girth = GirthModel(odd_girth=girth.odd_girth, even_girth=girth.even_girth,
                                  even_girth_exact=girth.even_girth_exact, girth=girth.girth)
        system = timed("polynomials", build_system, profile, dd, config.polynomials, spectral)
        recurrence = recurrence_check(system, dd, profile)
        report.polynomials = _polynomials_model(system, recurrence, profile, digits)
        algebra = timed("algebra", build_algebra_report, profile, dd, system, config.polynomials)
        report.algebra = _algebra_model(algebra, digits)

    report.timing = timing
    logger.info(f"Report built for {graph.display_name()}: DMR={report.distance_mean_regular}")
    return report


def _table(rows: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    return tabulate(pd.DataFrame(rows, columns=columns), headers="keys", tablefmt="github", showindex=False)


def _matrix_table(rows: Matrix) -> str:
    return tabulate(pd.DataFrame(rows), headers=[str(j) for j in range(len(rows))], tablefmt="github",
                    showindex=True)


def render_text(report: Report) -> str:
    """Human-readable report made of GitHub-style tables."""
    c = report.classification
    out = [
        f"# {report.input.name} ({report.input.source}: {report.input.value})",
        "",
        f"n = {report.input.n}, edges = {report.input.edges}, diameter = {report.diameter}, "
        f"graph6 = {report.input.graph6}",
        "",
        "## Classification",
        "",
        _table([
            {"property": name, "holds": v.holds, "reason": v.reason}
            for name, v in (("distance-regular", c.distance_regular),
                            ("distance mean-regular", c.distance_mean_regular),
                            ("super-regular", c.super_regular))
        ]),
        "",
        _table([{"characterization": k, "holds": v} for k, v in sorted(c.characterizations.items())]),
        "",
        "## Adjacency spectrum",
        "",
        _table([{"eigenvalue": x, "multiplicity": m}
                for x, m in zip(report.adjacency_spectrum.eigenvalues, report.adjacency_spectrum.multiplicities)]),
    ]
    for name, v in (("distance mean-regular", c.distance_mean_regular), ("super-regular", c.super_regular)):
        if v.witness is not None:
            out += ["", f"Witness ({name}): {v.witness.description}"]
    p = report.profile
    if p is not None:
        out += [
            "", "## Mean-matrix", "", _matrix_table(p.Bbar), "",
            f"k = ({', '.join(str(x) for x in p.k)})",
            f"mean-array = {{{', '.join(p.bbar)}; {', '.join(p.cbar)}}}",
        ]
        for flag in p.monotonicity_flags:
            out.append(f"monotonicity: {flag.parameter}_{flag.index} = {flag.value}, "
                       f"{flag.parameter}_{flag.index + 1} = {flag.next_value}")
    if report.girth is not None:
        g = report.girth
        out += ["", f"girth = {g.girth if g.girth is not None else 'inf'} (odd {g.odd_girth}, even {g.even_girth}"
                    f"{'' if g.even_girth_exact else ' upper bound'})"]
    poly = report.polynomials
    if poly is not None:
        out += [
            "", "## Mean-polynomials", "",
            _table([{"i": m.index, "p_i(x)": m.text, "p_i(k)": v, "mu_i": mu, "w_i": w}
                    for m, v, mu, w in zip(poly.polynomials, poly.values_at_degree, poly.mean_spectrum.eigenvalues,
                                           poly.w)]),
        ]
    a = report.algebra
    if a is not None:
        flags = ["Bi_commute", "Ai_commute", "star_associative", "BiBj_expansion_holds", "recurrence_holds",
                 "polynomial_form_holds", "scheme_identity_holds", "fourier_route_holds", "subalgebra_closed"]
        out += ["", "## Algebra", "", f"dim D = {a.dim_Dbar}, dim A = {a.dim_A}", "",
                _table([{"check": name, "holds": getattr(a, name)} for name in flags])]
        for index, residual in sorted(a.residuals.items()):
            out += ["", f"B_{index} - p_{index}(B):", "", _matrix_table(residual)]
    return "\n".join(out) + "\n"
